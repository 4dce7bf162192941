#pragma once
// principles.hpp - finite colorings, the counterexample family to FIPP_1,
// and decision procedures / threshold searches for FIPP_2 and FIPP_3.
//
// Conventions: [k] has the k+1 elements 0..k, a coloring of [k] into [n] is
// a value vector of length k+1, and colorings are enumerated by index with
// f(i) = digit i of the index in base n+1 (little-endian).

#include "codec.hpp"
#include "setfn.hpp"
#include "streams.hpp"

#include <atomic>
#include <future>
#include <thread>

namespace fipp {
namespace principles {

struct Coloring {
    std::vector<Nat> values;  // length k+1
    Nat colors;               // n: values range over [n]

    Coloring(std::vector<Nat> v, Nat n) : values(std::move(v)), colors(n) {
        if (values.empty()) throw std::invalid_argument("Coloring: [k] is never empty");
        for (Nat c : values)
            if (c > n) throw std::invalid_argument("Coloring: value above color bound");
    }

    Nat k() const { return static_cast<Nat>(values.size()) - 1; }
    Nat operator()(Nat i) const { return values.at(i); }
};

// The coloring family refuting FIPP_1: odd -> 0 and even -> 1, except among
// the last two numbers k-1, k where the odd gets 1 and the even gets 0.
// For k <= 1 the numbers 0 and 1 count as the last two.
inline Coloring ce_coloring(Nat k) {
    std::vector<Nat> v(k + 1);
    for (Nat i = 0; i <= k; ++i) {
        bool last_two = k <= 1 ? true : (i + 1 == k || i == k);
        bool odd = i % 2 == 1;
        if (last_two)
            v[i] = odd ? 1 : 0;
        else
            v[i] = odd ? 0 : 1;
    }
    return Coloring(std::move(v), 1);
}

// f^{ -1}(c) for each c in [n]; classes may be empty.
inline std::vector<codec::FinSet> color_classes(const Coloring& f) {
    std::vector<std::vector<Nat>> buckets(f.colors + 1);
    for (Nat i = 0; i < f.values.size(); ++i) buckets[f.values[i]].push_back(i);
    std::vector<codec::FinSet> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(std::move(b));
    return out;
}

// --- coloring enumeration ----------------------------------------------

inline Nat coloring_count(Nat n, Nat k) {
    Nat count = 1;
    for (Nat i = 0; i <= k; ++i) {
        if (count > (Nat(1) << 40) / (n + 1))
            throw std::invalid_argument("coloring enumeration too large");
        count *= n + 1;
    }
    return count;
}

inline Coloring coloring_from_index(Nat n, Nat k, Nat index) {
    std::vector<Nat> v(k + 1);
    for (Nat i = 0; i <= k; ++i) {
        v[i] = index % (n + 1);
        index /= n + 1;
    }
    return Coloring(std::move(v), n);
}

// --- the FIPP_1 counterexample verifier ----------------------------------

struct Fipp1CeRow {
    Nat k;
    Nat card0, f0;  // |class 0|, F(class 0)
    Nat card1, f1;
};

struct Fipp1CeReport {
    std::vector<Fipp1CeRow> rows;
    Nat k_max;
};

// Checks |A| <= F(A) for both color classes of every ce_coloring(k) with
// k <= k_max; a violation would be a bug in the construction, not a
// borderline verdict, hence the throw.
inline Fipp1CeReport verify_fipp1_ce(Nat k_max) {
    setfn::SetFunction f = setfn::parity_min_F();
    Fipp1CeReport report;
    report.k_max = k_max;
    report.rows.reserve(k_max + 1);
    for (Nat k = 0; k <= k_max; ++k) {
        auto classes = color_classes(ce_coloring(k));
        Fipp1CeRow row{k, classes[0].card(), f.on_set(classes[0]), classes[1].card(), f.on_set(classes[1])};
        if (row.card0 > row.f0 || row.card1 > row.f1)
            throw std::logic_error("verify_fipp1_ce: counterexample violated at k=" + std::to_string(k) +
                                   ", color " + (row.card0 > row.f0 ? "0, class " + codec::set_to_string(classes[0])
                                                                    : "1, class " + codec::set_to_string(classes[1])));
        report.rows.push_back(row);
    }
    return report;
}

// --- monochromatic witness search ----------------------------------------

struct MonoWitness {
    Nat color;
    codec::FinSet set;  // monochromatic, |set| > F(set)
    Nat f_value;
};

namespace detail {

// Subsets of one class, largest first; first qualifying subset wins.
inline std::optional<MonoWitness> class_witness(const codec::FinSet& cls, Nat color,
                                                const setfn::SetFunction& f) {
    const auto& e = cls.elements();
    Nat m = cls.card();
    if (m > 24) throw std::invalid_argument("witness search: class too large for subset enumeration");
    for (Nat size = m; size >= 1; --size) {
        // Gosper's hack over all size-subsets of m bits
        Nat mask = (Nat(1) << size) - 1;
        Nat limit = Nat(1) << m;
        while (mask < limit) {
            std::vector<Nat> sub;
            sub.reserve(size);
            for (Nat b = 0; b < m; ++b)
                if (mask & (Nat(1) << b)) sub.push_back(e[b]);
            codec::FinSet s(std::move(sub));
            Nat fv = f.on_set(s);
            if (s.card() > fv) return MonoWitness{color, std::move(s), fv};
            Nat c = mask & (~mask + 1);
            Nat r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Some monochromatic S with |S| > F(S), or nullopt.  Deterministic order:
// colors ascending, subsets largest first.
inline std::optional<MonoWitness> find_mono_witness(const Coloring& f, const setfn::SetFunction& F) {
    auto classes = color_classes(f);
    for (Nat c = 0; c < classes.size(); ++c)
        if (auto w = detail::class_witness(classes[c], c, F)) return w;
    return std::nullopt;
}

// As above but reports the qualifying set with the numerically least
// canonical code (the tie-break used in reports).
inline std::optional<MonoWitness> find_least_code_witness(const Coloring& f, const setfn::SetFunction& F) {
    auto classes = color_classes(f);
    std::optional<MonoWitness> best;
    std::optional<Code> best_code;
    for (Nat c = 0; c < classes.size(); ++c) {
        const auto& e = classes[c].elements();
        Nat m = classes[c].card();
        if (m > 24) throw std::invalid_argument("witness search: class too large for subset enumeration");
        for (Nat mask = 1; mask < (Nat(1) << m); ++mask) {
            std::vector<Nat> sub;
            for (Nat b = 0; b < m; ++b)
                if (mask & (Nat(1) << b)) sub.push_back(e[b]);
            codec::FinSet s(std::move(sub));
            Nat value = F.on_set(s);
            if (s.card() > value) {
                Code code = codec::canon_code(s);
                if (!best_code || code < *best_code) {
                    best_code = code;
                    best = MonoWitness{c, std::move(s), value};
                }
            }
        }
    }
    return best;
}

// --- FIPP_2 ----------------------------------------------------------------

struct Fipp2Witness {
    Nat coloring_index;
    Nat color;
    codec::FinSet set;
    Nat f_value;
};

struct Fipp2Holds {
    std::vector<Fipp2Witness> witnesses;  // one per coloring when collected
    bool exhaustive = true;
};
struct Fipp2Fails {
    Nat coloring_index;
    Coloring coloring;
};
using Fipp2Result = std::variant<Fipp2Holds, Fipp2Fails>;

struct Fipp2Options {
    bool collect_witnesses = true;
    bool least_code_witnesses = false;  // exact tie-break, costlier
    unsigned threads = 1;
};

// Decides "every f : [k] -> [n] has a monochromatic S with |S| > F(S)" by
// enumerating all (n+1)^(k+1) colorings.  Fails reports the first refuting
// coloring in index order, independently of the thread count.
inline Fipp2Result fipp2_check(Nat n, const setfn::SetFunction& F, Nat k, Fipp2Options opt = {}) {
    Nat count = coloring_count(n, k);
    unsigned threads = std::max(1u, opt.threads);
    if (threads == 1 || count < 1024) {
        std::vector<Fipp2Witness> witnesses;
        for (Nat idx = 0; idx < count; ++idx) {
            Coloring f = coloring_from_index(n, k, idx);
            auto w = opt.least_code_witnesses ? find_least_code_witness(f, F) : find_mono_witness(f, F);
            if (!w) return Fipp2Fails{idx, std::move(f)};
            if (opt.collect_witnesses)
                witnesses.push_back(Fipp2Witness{idx, w->color, std::move(w->set), w->f_value});
        }
        return Fipp2Holds{std::move(witnesses)};
    }

    std::atomic<Nat> first_fail{count};
    std::vector<std::future<std::vector<Fipp2Witness>>> parts;
    Nat chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        Nat lo = t * chunk, hi = std::min(count, lo + chunk);
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<Fipp2Witness> local;
            for (Nat idx = lo; idx < hi && idx < first_fail.load(); ++idx) {
                Coloring f = coloring_from_index(n, k, idx);
                auto w = opt.least_code_witnesses ? find_least_code_witness(f, F) : find_mono_witness(f, F);
                if (!w) {
                    Nat cur = first_fail.load();
                    while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
                    }
                    return local;
                }
                if (opt.collect_witnesses)
                    local.push_back(Fipp2Witness{idx, w->color, std::move(w->set), w->f_value});
            }
            return local;
        }));
    }
    std::vector<Fipp2Witness> witnesses;
    for (auto& p : parts) {
        auto part = p.get();
        witnesses.insert(witnesses.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
    }
    Nat fail = first_fail.load();
    if (fail < count) return Fipp2Fails{fail, coloring_from_index(n, k, fail)};
    return Fipp2Holds{std::move(witnesses)};
}

struct Least {
    Nat k;
};
struct NoneUpTo {
    Nat k_max;
};
struct UnknownAt {
    Nat k;
};

using ThresholdResult = std::variant<Least, NoneUpTo>;

enum class Strategy { Enumerate, Fan };

namespace detail {

// DFS over coloring prefixes, pruning a branch as soon as the prefix already
// contains a qualifying monochromatic set (the set survives every
// extension).  An unsecured complete coloring of [k_max] refutes the whole
// budget.  Returns the least k at which every branch was secured.
inline ThresholdResult fipp2_threshold_fan(Nat n, const setfn::SetFunction& F, Nat k_max) {
    Nat best = 0;
    std::vector<Nat> prefix;
    std::function<bool()> dfs = [&]() {
        if (!prefix.empty()) {
            Coloring f(prefix, n);
            if (auto w = find_mono_witness(f, F)) {
                best = std::max(best, static_cast<Nat>(prefix.size()) - 1);
                return true;
            }
            if (prefix.size() == k_max + 1) return false;
        }
        for (Nat a = 0; a <= n; ++a) {
            prefix.push_back(a);
            bool ok = dfs();
            prefix.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    if (!dfs()) return NoneUpTo{k_max};
    return Least{best};
}

}  // namespace detail

// Least k <= k_max with fipp2_check(n, F, k) = Holds.  The enumerate
// strategy verifies every k from 0 up; the fan strategy prunes coloring
// prefixes.  Both must agree.
inline ThresholdResult fipp2_threshold(Nat n, const setfn::SetFunction& F, Nat k_max,
                                       Strategy strategy = Strategy::Enumerate, unsigned threads = 1) {
    if (strategy == Strategy::Fan) return detail::fipp2_threshold_fan(n, F, k_max);
    Fipp2Options opt;
    opt.collect_witnesses = false;
    opt.threads = threads;
    for (Nat k = 0; k <= k_max; ++k)
        if (std::holds_alternative<Fipp2Holds>(fipp2_check(n, F, k, opt))) return Least{k};
    return NoneUpTo{k_max};
}

// --- FIPP_3 ----------------------------------------------------------------

struct Fipp3Witness {
    Nat coloring_index;
    Nat color;
    codec::FinSet class_set;  // every l in its cylinder is big
};
struct Fipp3Holds {
    std::vector<Fipp3Witness> witnesses;
};
struct Fipp3Fails {
    Nat coloring_index;
    Coloring coloring;
    std::vector<Code> refutations;  // one RefutedBy witness per color
};
struct Fipp3Unknown {
    Nat coloring_index;
    Nat color;
};
using Fipp3Result = std::variant<Fipp3Holds, Fipp3Fails, Fipp3Unknown>;

// Decides "every f : [k] -> [n] has a color class whose whole cylinder is
// big" via cylinder_bigness.  Three-valued: the first coloring without an
// AllBig class yields Fails when every color carries a refutation witness
// and Unknown when the oracle could not decide some color.
inline Fipp3Result fipp3_check(Nat n, const setfn::SetFunction& F, Nat k, Nat budget) {
    Nat count = coloring_count(n, k);
    std::vector<Fipp3Witness> witnesses;
    for (Nat idx = 0; idx < count; ++idx) {
        Coloring f = coloring_from_index(n, k, idx);
        auto classes = color_classes(f);
        std::optional<Nat> big_color;
        std::vector<Code> refutations;
        std::optional<Nat> unknown_color;
        for (Nat c = 0; c <= n && !big_color; ++c) {
            auto verdict = setfn::cylinder_bigness(F, classes[c], k, budget);
            if (std::holds_alternative<setfn::AllBig>(verdict))
                big_color = c;
            else if (auto* r = std::get_if<setfn::RefutedBy>(&verdict))
                refutations.push_back(r->witness);
            else if (!unknown_color)
                unknown_color = c;
        }
        if (big_color) {
            witnesses.push_back(Fipp3Witness{idx, *big_color, classes[*big_color]});
            continue;
        }
        if (unknown_color) return Fipp3Unknown{idx, *unknown_color};
        return Fipp3Fails{idx, std::move(f), std::move(refutations)};
    }
    return Fipp3Holds{std::move(witnesses)};
}

using Fipp3ThresholdResult = std::variant<Least, NoneUpTo, UnknownAt>;

inline Fipp3ThresholdResult fipp3_threshold(Nat n, const setfn::SetFunction& F, Nat k_max, Nat budget) {
    for (Nat k = 0; k <= k_max; ++k) {
        auto r = fipp3_check(n, F, k, budget);
        if (std::holds_alternative<Fipp3Holds>(r)) return Least{k};
        if (std::holds_alternative<Fipp3Unknown>(r)) return UnknownAt{k};
    }
    return NoneUpTo{k_max};
}

// The decidable IPP for eventually periodic colorings: a color class is
// infinite exactly when the color occurs in the periodic part.
inline codec::FinSet infinite_color_classes(const streams::EvPeriodic& f) {
    return codec::FinSet::from_unsorted(f.period());
}

// Characteristic function of f^{-1}(c) as an eventually periodic 0/1 stream;
// requires the class to be infinite (c occurs in the period).
inline streams::InfiniteSet color_class_set(const streams::EvPeriodic& f, Nat c) {
    std::vector<Nat> prefix(f.prefix().size());
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = f.prefix()[i] == c ? 1 : 0;
    std::vector<Nat> period(f.period().size());
    for (std::size_t i = 0; i < period.size(); ++i) period[i] = f.period()[i] == c ? 1 : 0;
    return streams::InfiniteSet(streams::EvPeriodic(std::move(prefix), std::move(period), 1));
}

}  // namespace principles
}  // namespace fipp
