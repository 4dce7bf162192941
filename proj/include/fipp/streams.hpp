#pragma once
// streams.hpp - finite representations of infinite objects: eventually
// periodic functions N -> [n], infinite sets given by periodic characteristic
// functions, code sequences (l_m) with nestedness / weak-convergence
// certificates, and the Baire and product metrics.

#include "codec.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <variant>

namespace fipp {
namespace streams {

// f(i) = prefix[i] for i < |prefix|, then period repeats forever.
class EvPeriodic {
public:
    EvPeriodic(std::vector<Nat> prefix, std::vector<Nat> period, Nat bound)
        : prefix_(std::move(prefix)), period_(std::move(period)), bound_(bound) {
        if (period_.empty())
            throw std::invalid_argument("EvPeriodic: period must be nonempty");
        for (Nat v : prefix_)
            if (v > bound_) throw std::invalid_argument("EvPeriodic: prefix value above bound");
        for (Nat v : period_)
            if (v > bound_) throw std::invalid_argument("EvPeriodic: period value above bound");
    }

    Nat operator()(Nat i) const {
        if (i < prefix_.size()) return prefix_[i];
        return period_[(i - prefix_.size()) % period_.size()];
    }

    const std::vector<Nat>& prefix() const { return prefix_; }
    const std::vector<Nat>& period() const { return period_; }
    Nat bound() const { return bound_; }

    // "prefix;period", comma-separated values, e.g. "1,0;0,1"
    static EvPeriodic from_string(const std::string& text, std::optional<Nat> bound = std::nullopt) {
        auto semi = text.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("EvPeriodic: expected \"prefix;period\"");
        auto parse_list = [](const std::string& part) {
            std::vector<Nat> out;
            std::stringstream ss(part);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) out.push_back(std::stoull(item));
            return out;
        };
        auto prefix = parse_list(text.substr(0, semi));
        auto period = parse_list(text.substr(semi + 1));
        Nat b = bound.value_or(0);
        for (Nat v : prefix) b = std::max(b, v);
        for (Nat v : period) b = std::max(b, v);
        return EvPeriodic(std::move(prefix), std::move(period), b);
    }

    std::string to_string() const {
        auto join = [](const std::vector<Nat>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(v[i]);
            }
            return out;
        };
        return join(prefix_) + ";" + join(period_);
    }

private:
    std::vector<Nat> prefix_;
    std::vector<Nat> period_;
    Nat bound_;
};

inline Nat ev_eval(const EvPeriodic& f, Nat i) { return f(i); }

inline std::vector<Nat> prefix_values(const EvPeriodic& f, Nat m) {
    std::vector<Nat> out(m);
    for (Nat i = 0; i < m; ++i) out[i] = f(i);
    return out;
}

// \bar f m: code of <f(0),...,f(m-1)>; m = 0 gives the code of <>.
inline Code prefix_code(const EvPeriodic& f, Nat m) {
    auto v = prefix_values(f, m);
    return codec::encode_seq(std::span<const Nat>(v));
}

// s^frown o: the function extending s by zeros.
inline EvPeriodic extend_zero(std::span<const Nat> s, Nat bound = 0) {
    Nat b = bound;
    for (Nat v : s) b = std::max(b, v);
    return EvPeriodic(std::vector<Nat>(s.begin(), s.end()), {0}, b);
}

inline EvPeriodic extend_zero(const Code& s, Nat bound = 0) {
    auto v = codec::decode_seq(s);
    return extend_zero(std::span<const Nat>(v), bound);
}

// Exact equality: align past both prefixes, compare one lcm of the periods.
inline bool ev_equal(const EvPeriodic& f, const EvPeriodic& g) {
    Nat lead = std::max(f.prefix().size(), g.prefix().size());
    Nat l = std::lcm(f.period().size(), g.period().size());
    for (Nat i = 0; i < lead + l; ++i)
        if (f(i) != g(i)) return false;
    return true;
}

struct Disagree {
    Nat index;  // least m with f(m) != g(m)
};
struct AgreeUpTo {
    Nat budget;
};
using BaireVerdict = std::variant<Disagree, AgreeUpTo>;

// Baire metric probe: Disagree(m) iff d(f,g) = 2^-m with m <= budget.
// Exact equality is decided by period alignment, so AgreeUpTo on equal
// functions means d = 0, not merely "agree so far".
inline BaireVerdict baire_dist_exp(const EvPeriodic& f, const EvPeriodic& g, Nat budget) {
    if (ev_equal(f, g)) return AgreeUpTo{budget};
    Nat lead = std::max(f.prefix().size(), g.prefix().size());
    Nat l = std::lcm(f.period().size(), g.period().size());
    for (Nat m = 0; m < lead + l; ++m)
        if (f(m) != g(m)) return m <= budget ? BaireVerdict(Disagree{m}) : BaireVerdict(AgreeUpTo{budget});
    return AgreeUpTo{budget};  // unreachable: inequality implies an index below the bound
}

using Rational = boost::multiprecision::cpp_rational;

// Product metric of the [n]^N construction:
//   d(a,b) = sum_i 2^-i * |a'(i)-b'(i)| / (1 + |a'(i)-b'(i)|),  a' = a^frown o.
// The sum is finite because both zero extensions agree from max length on.
inline Rational product_dist(std::span<const Nat> a, std::span<const Nat> b) {
    Rational d = 0;
    std::size_t len = std::max(a.size(), b.size());
    Code pow = 1;
    for (std::size_t i = 0; i < len; ++i, pow *= 2) {
        Nat ai = i < a.size() ? a[i] : 0;
        Nat bi = i < b.size() ? b[i] : 0;
        Nat diff = ai > bi ? ai - bi : bi - ai;
        if (diff == 0) continue;
        d += Rational(Code(diff), pow * (1 + Code(diff)));
    }
    return d;
}

inline Rational product_dist(const Code& a, const Code& b) {
    auto da = codec::decode_seq(a);
    auto db = codec::decode_seq(b);
    return product_dist(std::span<const Nat>(da), std::span<const Nat>(db));
}

// Infinite set represented by an eventually periodic characteristic function.
// The period must contain a 1, which makes infinitude a checkable invariant.
class InfiniteSet {
public:
    explicit InfiniteSet(EvPeriodic chi) : chi_(std::move(chi)) {
        if (chi_.bound() > 1)
            throw std::invalid_argument("InfiniteSet: characteristic function must be 0/1");
        bool has_one = false;
        for (Nat v : chi_.period()) has_one |= (v == 1);
        if (!has_one)
            throw std::invalid_argument("InfiniteSet: period contains no 1, set would be finite");
    }

    bool contains(Nat i) const { return chi_(i) == 1; }
    const EvPeriodic& chi() const { return chi_; }

    static InfiniteSet evens() { return InfiniteSet(EvPeriodic({}, {1, 0}, 1)); }
    static InfiniteSet odds() { return InfiniteSet(EvPeriodic({}, {0, 1}, 1)); }
    static InfiniteSet naturals() { return InfiniteSet(EvPeriodic({}, {1}, 1)); }

private:
    EvPeriodic chi_;
};

// A cap [m]
inline codec::FinSet intersect_segment(const InfiniteSet& a, Nat m) {
    std::vector<Nat> out;
    for (Nat i = 0; i <= m; ++i)
        if (a.contains(i)) out.push_back(i);
    return codec::FinSet(std::move(out));
}

// A cap B for finite B
inline codec::FinSet intersect_finite(const InfiniteSet& a, const codec::FinSet& b) {
    std::vector<Nat> out;
    for (Nat x : b.elements())
        if (a.contains(x)) out.push_back(x);
    return codec::FinSet(std::move(out));
}

// Sequence m |-> l_m of set codes.  The certification flags are set only by
// constructors that guarantee the property; raw generators carry no promise.
//
// Elements are generated as sets; at() materializes the canonical code on
// demand.  Consumers evaluate extensionally through at_set: under the cons
// coding the code of a set with a few dozen elements does not fit in memory.
struct CodeSequence {
    std::function<codec::FinSet(Nat)> at_set;
    bool nested = false;
    bool weakly_convergent = false;

    Code at(Nat m) const { return codec::canon_code(at_set(m)); }
};

inline CodeSequence from_generator(std::function<Code(Nat)> gen) {
    return CodeSequence{[gen = std::move(gen)](Nat m) { return codec::set_of(gen(m)); }, false, false};
}

inline CodeSequence from_sets(std::function<codec::FinSet(Nat)> gen) {
    return CodeSequence{std::move(gen), false, false};
}

// l_m with A_{l_m} = A cap [m]: nested and weakly convergent to A.
inline CodeSequence canonical_chain(const InfiniteSet& a) {
    return CodeSequence{[a](Nat m) { return intersect_segment(a, m); }, true, true};
}

inline Code canonical_chain_code(const InfiniteSet& a, Nat m) {
    return codec::canon_code(intersect_segment(a, m));
}

struct ConvergedAt {
    Nat index;  // least i with A_{l_j} cap B = A cap B for all i <= j <= budget
};
struct NoWitnessUpTo {
    Nat budget;
};
using ConvergenceVerdict = std::variant<ConvergedAt, NoWitnessUpTo>;

// Bounded certificate for weak convergence on the window B: checks
// exists i forall j in [i, budget] (A_{l_j} cap B = A cap B).
inline ConvergenceVerdict weak_convergence_check(const CodeSequence& seq, const InfiniteSet& a,
                                                 const codec::FinSet& b, Nat budget) {
    if (budget < 1) throw std::invalid_argument("weak_convergence_check: budget must be >= 1");
    codec::FinSet target = intersect_finite(a, b);
    Nat i = 0;
    bool found = false;
    for (Nat j = 0; j <= budget; ++j) {
        if (codec::intersect(seq.at_set(j), b) == target) {
            if (!found) {
                found = true;
                i = j;
            }
        } else {
            found = false;
        }
    }
    if (found) return ConvergedAt{i};
    return NoWitnessUpTo{budget};
}

}  // namespace streams
}  // namespace fipp
