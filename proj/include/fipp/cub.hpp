#pragma once
// cub.hpp - executable content of continuous uniform boundedness: monotone
// prefix-security predicates, the fan-tree bound search (the constructive
// reading of bounded Koenig's lemma), associates with neighborhood
// normalization, a budgeted Pi01 bound search, and the no-continuity
// counterexample.

#include "codec.hpp"
#include "principles.hpp"
#include "setfn.hpp"
#include "streams.hpp"

#include <atomic>
#include <memory>

namespace fipp {
namespace cub {

class neighborhood_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Monotone prefix-security predicate over [n]-prefixes.  Invariant: once a
// prefix is secured with witness x, every extension is secured with the same
// x (securing is prefix-determined).
struct SecurePrefix {
    Nat branching;  // n: prefix entries range over [n]
    std::function<std::optional<Nat>(std::span<const Nat>)> query;
    std::shared_ptr<std::atomic<std::uint64_t>> oracle_unknown;  // bumped by budgeted adapters
};

struct SearchStats {
    std::uint64_t nodes = 0;           // queries issued by the walk itself
    std::uint64_t secured_leaves = 0;  // frontier size
    std::uint64_t oracle_unknown = 0;  // Unknown verdicts mapped to Unsecured
};

struct AllSecured {
    Nat max_witness;     // z: every path is secured with witness <= z
    Nat expanded_depth;  // longest unsecured prefix the search had to expand
    Nat securing_depth;  // longest prefix at which securing happened
    SearchStats stats;
};
struct BudgetExceeded {
    std::vector<Nat> path;  // lexicographically least unsecured prefix at the budget
    SearchStats stats;
};
using FanResult = std::variant<AllSecured, BudgetExceeded>;

// Explores the complement of the securing tree: descends while Unsecured and
// certifies the secured frontier.  DFS by increasing branch value, so a
// BudgetExceeded path is the lexicographically least failing one.  Children
// of every secured frontier node are spot-checked against the neighborhood
// invariant; a violation means the caller's predicate is ill-formed.
inline FanResult fan_bound(const SecurePrefix& pred, Nat depth_budget) {
    SearchStats stats;
    Nat z = 0, expanded = 0, securing = 0;
    std::vector<Nat> prefix;
    std::optional<std::vector<Nat>> failed;

    std::function<bool()> dfs = [&]() -> bool {
        ++stats.nodes;
        if (auto x = pred.query(prefix)) {
            ++stats.secured_leaves;
            z = std::max(z, *x);
            securing = std::max(securing, static_cast<Nat>(prefix.size()));
            for (Nat a = 0; a <= pred.branching; ++a) {
                prefix.push_back(a);
                auto cx = pred.query(prefix);
                prefix.pop_back();
                if (!cx || *cx != *x)
                    throw neighborhood_error("secured prefix has a child with a different verdict");
            }
            return true;
        }
        if (prefix.size() >= depth_budget) {
            failed = prefix;
            return false;
        }
        expanded = std::max(expanded, static_cast<Nat>(prefix.size()));
        for (Nat a = 0; a <= pred.branching; ++a) {
            prefix.push_back(a);
            bool ok = dfs();
            prefix.pop_back();
            if (!ok) return false;
        }
        return true;
    };

    bool ok = dfs();
    if (pred.oracle_unknown) stats.oracle_unknown = pred.oracle_unknown->load();
    if (!ok) return BudgetExceeded{std::move(*failed), stats};
    return AllSecured{z, expanded, securing, stats};
}

// B(f,k): the coloring f restricted to [k] contains a monochromatic S with
// |S| > F(S).  The witness reported for a prefix is the k at which securing
// first happened, which makes the predicate a neighborhood function.
inline SecurePrefix fipp2_secure_adapter(Nat n, setfn::SetFunction F) {
    SecurePrefix pred;
    pred.branching = n;
    pred.query = [n, F = std::move(F)](std::span<const Nat> sigma) -> std::optional<Nat> {
        for (Nat len = 1; len <= sigma.size(); ++len) {
            principles::Coloring f(std::vector<Nat>(sigma.begin(), sigma.begin() + len), n);
            if (principles::find_mono_witness(f, F)) return len - 1;
        }
        return std::nullopt;
    };
    return pred;
}

// B(f,k): some color class of the coloring f of [k] has an all-big cylinder.
// Unknown oracle verdicts are conservatively treated as Unsecured and
// counted.  Monotonicity of B in k is asserted along the scan: once some
// prefix length secures, every longer one must.
inline SecurePrefix fipp3_secure_adapter(Nat n, setfn::SetFunction F, Nat budget) {
    SecurePrefix pred;
    pred.branching = n;
    pred.oracle_unknown = std::make_shared<std::atomic<std::uint64_t>>(0);
    auto unknown = pred.oracle_unknown;
    pred.query = [n, F = std::move(F), budget, unknown](std::span<const Nat> sigma) -> std::optional<Nat> {
        std::optional<Nat> secured_at;
        for (Nat len = 1; len <= sigma.size(); ++len) {
            principles::Coloring f(std::vector<Nat>(sigma.begin(), sigma.begin() + len), n);
            auto classes = principles::color_classes(f);
            bool big = false;
            for (Nat c = 0; c <= n && !big; ++c) {
                auto v = setfn::cylinder_bigness(F, classes[c], len - 1, budget);
                if (std::holds_alternative<setfn::AllBig>(v)) big = true;
                if (std::holds_alternative<setfn::CylUnknown>(v)) unknown->fetch_add(1);
            }
            if (big && !secured_at) secured_at = len - 1;
            if (!big && secured_at)
                throw neighborhood_error("B(f,k) lost at k=" + std::to_string(len - 1) +
                                         " after securing at k=" + std::to_string(*secured_at));
        }
        return secured_at;
    };
    return pred;
}

// --- associates ------------------------------------------------------------

// alpha represents phi : [n]^N -> N; the first positive value of alpha on
// prefixes of beta equals phi(beta) + 1.
struct Associate {
    Nat n;
    std::function<Nat(const Code&)> alpha;
};

// alpha'(j) = alpha(i) for the shortest prefix i of j with alpha(i) > 0.
inline Associate neighborhood_normalize(const Associate& a) {
    return Associate{a.n, [alpha = a.alpha](const Code& j) -> Nat {
                         auto seq = codec::decode_seq(j);
                         for (std::size_t len = 0; len <= seq.size(); ++len) {
                             Nat v = alpha(codec::encode_seq(std::span<const Nat>(seq.data(), len)));
                             if (v > 0) return v;
                         }
                         return 0;
                     }};
}

struct AssociateValue {
    Nat value;  // phi(f)
    Nat index;  // least m with alpha(fbar m) > 0
};
struct NoWitnessUpTo {
    Nat budget;
};
using AssociateVerdict = std::variant<AssociateValue, NoWitnessUpTo>;

inline AssociateVerdict eval_associate(const Associate& a, const streams::EvPeriodic& f, Nat budget) {
    if (f.bound() > a.n) throw std::invalid_argument("eval_associate: argument exceeds the associate's branching");
    for (Nat m = 0; m <= budget; ++m) {
        Nat v = a.alpha(streams::prefix_code(f, m));
        if (v > 0) return AssociateValue{v - 1, m};
    }
    return NoWitnessUpTo{budget};
}

// alpha(sigma) = x+1 when query(sigma) = Secured(x), else 0.  A neighborhood
// function by the SecurePrefix invariant.
inline Associate associate_of(const SecurePrefix& pred) {
    return Associate{pred.branching, [pred](const Code& l) -> Nat {
                         auto seq = codec::decode_seq(l);
                         for (Nat v : seq)
                             if (v > pred.branching) return 0;  // outside [n]-prefixes
                         if (auto x = pred.query(std::span<const Nat>(seq))) return *x + 1;
                         return 0;
                     }};
}

// --- budgeted Pi01 bound search ---------------------------------------------

// A family of decidable tests A(prefix, x, w); prefixes of length >= the
// declared modulus decide the tests for all x <= x_max, w <= w_max.
struct Pi01Family {
    std::string name;
    std::function<bool(std::span<const Nat>, Nat x, Nat w)> test;
    std::function<Nat(Nat x_max, Nat w_max)> modulus;
};

struct Pi01Budgets {
    Nat x_max;
    Nat w_max;
    Nat depth;
};

struct Pi01Found {
    Nat z;  // budget-relative: every depth-prefix has a passing x <= z; NOT a proof
};
struct Pi01Refuted {
    std::vector<Nat> path;
    std::vector<std::pair<Nat, Nat>> failures;  // (x, first failing w) for every x <= x_max
};
struct Pi01Unknown {};
using Pi01Result = std::variant<Pi01Found, Pi01Refuted, Pi01Unknown>;

// Searches every [n]-prefix of the given depth for an x <= x_max passing all
// w <= w_max tests.  Found(z) is only budget-relative (the principle is
// equivalent to arithmetical comprehension, so no complete terminating
// search exists); Refuted is definitive for the returned path's zero
// extension; Unknown when the depth is below the family's declared modulus.
inline Pi01Result pi01_bound_search(const Pi01Family& family, Nat n, Pi01Budgets budgets) {
    if (budgets.depth < family.modulus(budgets.x_max, budgets.w_max)) return Pi01Unknown{};
    double nodes = std::pow(static_cast<double>(n + 1), static_cast<double>(budgets.depth));
    if (nodes > static_cast<double>(Nat(1) << 24))
        throw std::invalid_argument("pi01_bound_search: prefix space too large");

    std::vector<Nat> prefix(budgets.depth, 0);
    Nat z = 0;
    for (;;) {
        std::optional<Nat> good_x;
        std::vector<std::pair<Nat, Nat>> failures;
        for (Nat x = 0; x <= budgets.x_max && !good_x; ++x) {
            std::optional<Nat> bad_w;
            for (Nat w = 0; w <= budgets.w_max; ++w) {
                if (!family.test(prefix, x, w)) {
                    bad_w = w;
                    break;
                }
            }
            if (!bad_w)
                good_x = x;
            else
                failures.emplace_back(x, *bad_w);
        }
        if (!good_x) return Pi01Refuted{prefix, std::move(failures)};
        z = std::max(z, *good_x);

        // odometer step, lexicographic order
        std::size_t i = prefix.size();
        while (i > 0) {
            --i;
            if (prefix[i] < n) {
                ++prefix[i];
                std::fill(prefix.begin() + i + 1, prefix.end(), 0);
                break;
            }
            if (i == 0) return Pi01Found{z};
        }
        if (prefix.empty()) return Pi01Found{z};
    }
}

// --- the no-continuity counterexample ----------------------------------------

// The candidate bound z for "exists y f(y)=0 -> exists x <= z f(x)=0" is
// refuted by f with f(x) = 1 for x <= z, f(z+1) = 0, then 1 forever.
inline streams::EvPeriodic nocont_demo(Nat z) {
    std::vector<Nat> prefix(z + 2, 1);
    prefix[z + 1] = 0;
    return streams::EvPeriodic(std::move(prefix), {1}, 1);
}

// Confirms that nocont_demo(z) refutes the bound z.
inline bool nocont_refutes(Nat z, const streams::EvPeriodic& f) {
    if (f(z + 1) != 0) return false;  // needs a zero somewhere
    for (Nat x = 0; x <= z; ++x)
        if (f(x) == 0) return false;
    return true;
}

// A(f, x) := forall y [f(y)=0 -> f(x)=0], the Pi01 predicate with no uniform
// bound; w plays the role of y.
inline Pi01Family nocont_family() {
    return Pi01Family{
        "nocont",
        [](std::span<const Nat> p, Nat x, Nat w) { return p[w] != 0 || p[x] == 0; },
        [](Nat x_max, Nat w_max) { return std::max(x_max, w_max) + 1; }};
}

inline Pi01Family trivial_family() {
    return Pi01Family{"true", [](std::span<const Nat>, Nat, Nat) { return true; },
                      [](Nat, Nat) { return Nat(0); }};
}

// A(f, x) := (f(x)=0 -> f(x)=0), a tautology that still reads the prefix.
inline Pi01Family tautology_family() {
    return Pi01Family{"impl-taut",
                      [](std::span<const Nat> p, Nat x, Nat) {
                          bool h = p[x] == 0;
                          return !h || h;
                      },
                      [](Nat x_max, Nat) { return x_max + 1; }};
}

}  // namespace cub
}  // namespace fipp
