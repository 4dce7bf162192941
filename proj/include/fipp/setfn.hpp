#pragma once
// setfn.hpp - extensional set functions F, the three constructions used by
// the counterexamples, and budgeted probes for asymptotic stability.
//
// AS / ASNIS are Pi-over-sequences properties: probes can refute membership
// with a witness pair but never verify it, so every verdict here is
// three-valued and depth-bounded.

#include "codec.hpp"
#include "streams.hpp"

#include <functional>
#include <variant>

namespace fipp {
namespace setfn {

struct AllBig {};
struct RefutedBy {
    Code witness;  // l in the cylinder with |A_l| <= F(l)
};
struct CylUnknown {};
using CylinderVerdict = std::variant<AllBig, RefutedBy, CylUnknown>;

// Extensional by construction: evaluation on a code l goes through set_of(l),
// so equal codes of equal sets cannot disagree.  The cylinder oracle, when
// present, decides "every l with A_l cap [k] = S has |A_l| > F(l)" exactly.
struct SetFunction {
    std::string name;
    std::function<Nat(const codec::FinSet&)> on_set;
    std::function<CylinderVerdict(const codec::FinSet& s, Nat k)> cylinder;  // may be empty
};

inline Nat eval_setfn(const SetFunction& f, const Code& l) { return f.on_set(codec::set_of(l)); }

// --- the library constructions ------------------------------------------

inline SetFunction const_F(Nat c) {
    SetFunction f;
    f.name = "const:" + std::to_string(c);
    f.on_set = [c](const codec::FinSet&) { return c; };
    f.cylinder = [c](const codec::FinSet& s, Nat) -> CylinderVerdict {
        // F is constant, so the smallest member of the cylinder (S itself)
        // decides bigness for the whole cylinder.
        if (s.card() > c) return AllBig{};
        return RefutedBy{codec::canon_code(s)};
    };
    return f;
}

inline Nat min_or_zero(const codec::FinSet& s, bool odd) {
    for (Nat x : s.elements())
        if ((x % 2 == 1) == odd) return x;
    return 0;  // min empty := 0, the counterexample's convention
}

// F(l) = min(A_l cap Odds) + min(A_l cap Evens) + 2 with min empty := 0.
inline SetFunction parity_min_F() {
    SetFunction f;
    f.name = "parity";
    f.on_set = [](const codec::FinSet& s) {
        return min_or_zero(s, true) + min_or_zero(s, false) + 2;
    };
    // Exact cylinder analysis for fixed S subseteq [k]:
    //  * S has both parities: elements above k cannot lower either minimum,
    //    so F is constant F(S) on the cylinder and S itself is the smallest
    //    member; the cylinder is all-big iff |S| > F(S).
    //  * S misses a parity (or is empty): adjoining one large number q of the
    //    missing parity sends F to q + O(1) while |A_l| grows by one, which
    //    refutes bigness outright.
    f.cylinder = [](const codec::FinSet& s, Nat k) -> CylinderVerdict {
        if (s.empty()) return RefutedBy{codec::canon_code(s)};  // |empty| = 0 <= 2 = F(empty)
        bool has_odd = false, has_even = false;
        for (Nat x : s.elements()) (x % 2 == 1 ? has_odd : has_even) = true;
        if (has_odd && has_even) {
            Nat fs = min_or_zero(s, true) + min_or_zero(s, false) + 2;
            if (s.card() > fs) return AllBig{};
            return RefutedBy{codec::canon_code(s)};
        }
        // q: smallest number of the missing parity with q > k and q >= |S|,
        // so |S u {q}| = |S|+1 <= q+2 <= F(S u {q})
        bool missing_odd = !has_odd;
        Nat q = std::max(k, s.card()) + 1;
        if ((q % 2 == 1) != missing_odd) ++q;
        return RefutedBy{codec::canon_code(codec::set_union(s, codec::FinSet({q})))};
    };
    return f;
}

// F(l) = min m (|A_l| <= m or f not constant on A_l), which collapses to
// |A_l| when f is constant on A_l and to 0 otherwise.
inline SetFunction coloring_F(const streams::EvPeriodic& f, Nat n) {
    if (f.bound() > n) throw std::invalid_argument("coloring_F: coloring exceeds color bound");
    SetFunction g;
    g.name = "coloring:" + f.to_string() + ":" + std::to_string(n);
    g.on_set = [f](const codec::FinSet& s) -> Nat {
        if (s.empty()) return 0;
        Nat c = f(s.elements().front());
        for (Nat x : s.elements())
            if (f(x) != c) return 0;
        return s.card();
    };
    return g;
}

inline SetFunction setfn_from_spec(const std::string& spec) {
    if (spec == "parity") return parity_min_F();
    if (spec.rfind("const:", 0) == 0) return const_F(std::stoull(spec.substr(6)));
    if (spec.rfind("coloring:", 0) == 0) {
        auto rest = spec.substr(9);
        auto colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("coloring spec: expected coloring:<prefix;period>:<n>");
        Nat n = std::stoull(rest.substr(colon + 1));
        auto f = streams::EvPeriodic::from_string(rest.substr(0, colon), n);
        return coloring_F(f, n);
    }
    throw std::invalid_argument("unknown set-function spec '" + spec + "'");
}

// --- stability probes ------------------------------------------------------

struct Stable {
    Nat index;  // first index of the observed constant tail
    Nat value;
};
struct Violated {
    Nat i, j;  // i < j with F(l_i) != F(l_j), taken at the last observed change
    Nat value_i, value_j;
};
struct Inconclusive {
    Nat depth;
};
using StabilityVerdict = std::variant<Stable, Violated, Inconclusive>;

// Verdict policy for a probed value sequence v_0..v_D: let c be the last
// index where the value changes (0 if constant).  A constant tail covering
// the second half reads as Stable; a change in the last quarter reads as
// Violated with the witness pair (c-1, c); anything between is Inconclusive.
inline StabilityVerdict classify_values(const std::vector<Nat>& v) {
    Nat depth = static_cast<Nat>(v.size()) - 1;
    Nat c = 0;
    for (Nat m = 1; m < v.size(); ++m)
        if (v[m] != v[m - 1]) c = m;
    if (c <= depth / 2) return Stable{c, v.back()};
    if (c > (3 * depth) / 4) return Violated{c - 1, c, v[c - 1], v[c]};
    return Inconclusive{depth};
}

// Evaluates extensionally: F(l_m) = on_set(A_{l_m}), which eval_setfn
// guarantees to agree with for every code of the same set.
inline std::vector<Nat> probe_values(const SetFunction& f, const streams::CodeSequence& seq, Nat depth) {
    std::vector<Nat> v(depth + 1);
    for (Nat m = 0; m <= depth; ++m) v[m] = f.on_set(seq.at_set(m));
    return v;
}

// Stability along a nested chain (quantifier of the AS definition).
inline StabilityVerdict probe_AS(const SetFunction& f, const streams::CodeSequence& chain, Nat depth) {
    if (!chain.nested)
        throw std::invalid_argument("probe_AS: sequence carries no nestedness guarantee");
    codec::FinSet prev;
    for (Nat m = 0; m <= depth; ++m) {
        codec::FinSet cur = chain.at_set(m);
        if (m > 0 && !codec::is_subset(prev, cur))
            throw std::invalid_argument("probe_AS: certified chain is not nested at index " + std::to_string(m));
        prev = std::move(cur);
    }
    return classify_values(probe_values(f, chain, depth));
}

// Stability along a weakly convergent sequence (quantifier of ASNIS).
inline StabilityVerdict probe_ASNIS(const SetFunction& f, const streams::CodeSequence& seq, Nat depth) {
    if (!seq.weakly_convergent)
        throw std::invalid_argument("probe_ASNIS: sequence carries no weak-convergence guarantee");
    return classify_values(probe_values(f, seq, depth));
}

// l_m with A_{l_m} = (Evens cap [2m]) u {2m+1}: weakly converges to the
// evens while the counterexample F diverges along it (F(l_m) = 2m+3).
inline streams::CodeSequence asnis_witness_parity() {
    return streams::CodeSequence{
        [](Nat m) {
            codec::FinSet s = streams::intersect_segment(streams::InfiniteSet::evens(), 2 * m);
            return codec::set_union(s, codec::FinSet({2 * m + 1}));
        },
        false, true};
}

struct Value {
    Nat value;
};
struct Unstable {};
using LimitVerdict = std::variant<Value, Unstable>;

// Stable tail value of F over the canonical chain of A, within depth.
inline LimitVerdict limit_value(const SetFunction& f, const streams::InfiniteSet& a, Nat depth) {
    auto v = probe_values(f, streams::canonical_chain(a), depth);
    Nat c = 0;
    for (Nat m = 1; m < v.size(); ++m)
        if (v[m] != v[m - 1]) c = m;
    if (c <= depth / 2) return Value{v.back()};
    return Unstable{};
}

struct Point {
    Nat value;  // c
    Nat depth;  // d: A_l cap [d] = A cap [d] forces F(l) = c, within the search budget
};
struct NotFoundUpTo {
    Nat budget;
};
using StabilityPointVerdict = std::variant<Point, NotFoundUpTo>;

// Search for the stability point (c, d): the candidate c at window d is
// forced to be F(A cap [d]) (that set lies in its own cylinder); the
// refutation search ranges over every l = (A cap [d]) u X with
// X subseteq (d, d+budget].
inline StabilityPointVerdict stability_point(const SetFunction& f, const streams::InfiniteSet& a, Nat budget) {
    if (budget > 24) throw std::invalid_argument("stability_point: budget too large for exhaustive search");
    for (Nat d = 0; d <= budget; ++d) {
        codec::FinSet base = streams::intersect_segment(a, d);
        Nat c = f.on_set(base);
        bool refuted = false;
        for (Nat mask = 0; mask < (Nat(1) << budget) && !refuted; ++mask) {
            std::vector<Nat> elems = base.elements();
            for (Nat b = 0; b < budget; ++b)
                if (mask & (Nat(1) << b)) elems.push_back(d + 1 + b);
            if (f.on_set(codec::FinSet(std::move(elems))) != c) refuted = true;
        }
        if (!refuted) return Point{c, d};
    }
    return NotFoundUpTo{budget};
}

// Decides "every l with A_l cap [k] = S has |A_l| > F(l)" - exactly via the
// capability oracle when F provides one, otherwise by bounded refutation
// search over supersets with elements <= k + budget (which can refute but
// never certify).
inline CylinderVerdict cylinder_bigness(const SetFunction& f, const codec::FinSet& s, Nat k, Nat budget) {
    for (Nat x : s.elements())
        if (x > k) throw std::invalid_argument("cylinder_bigness: S must be a subset of [k]");
    if (f.cylinder) return f.cylinder(s, k);
    if (budget > 24) throw std::invalid_argument("cylinder_bigness: budget too large for exhaustive search");
    for (Nat mask = 0; mask < (Nat(1) << budget); ++mask) {
        std::vector<Nat> elems = s.elements();
        for (Nat b = 0; b < budget; ++b)
            if (mask & (Nat(1) << b)) elems.push_back(k + 1 + b);
        codec::FinSet l(std::move(elems));
        if (!(l.card() > f.on_set(l))) return RefutedBy{codec::canon_code(l)};
    }
    return CylUnknown{};
}

}  // namespace setfn
}  // namespace fipp
