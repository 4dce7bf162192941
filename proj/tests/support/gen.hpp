#pragma once
// Deterministic random generators shared by the unit and acceptance suites.
// Every suite seeds its own mt19937_64, so failures reproduce exactly.

#include <fipp/codec.hpp>
#include <fipp/sigma00.hpp>
#include <fipp/streams.hpp>

#include <random>

namespace gen {

using fipp::Nat;
using Rng = std::mt19937_64;

inline Nat below(Rng& rng, Nat n) {  // uniform in [0, n)
    return std::uniform_int_distribution<Nat>(0, n - 1)(rng);
}

inline std::vector<Nat> nat_seq(Rng& rng, Nat max_len, Nat max_val) {
    std::vector<Nat> v(below(rng, max_len + 1));
    for (auto& x : v) x = below(rng, max_val + 1);
    return v;
}

inline fipp::streams::EvPeriodic ev_periodic(Rng& rng, Nat bound, Nat max_prefix = 3, Nat max_period = 6) {
    std::vector<Nat> prefix(below(rng, max_prefix + 1));
    for (auto& x : prefix) x = below(rng, bound + 1);
    std::vector<Nat> period(1 + below(rng, max_period));
    for (auto& x : period) x = below(rng, bound + 1);
    return fipp::streams::EvPeriodic(std::move(prefix), std::move(period), bound);
}

inline fipp::streams::InfiniteSet infinite_set(Rng& rng, Nat max_prefix = 4, Nat max_period = 8) {
    for (;;) {
        auto chi = ev_periodic(rng, 1, max_prefix, max_period);
        bool has_one = false;
        for (Nat v : chi.period()) has_one |= v == 1;
        if (has_one) return fipp::streams::InfiniteSet(chi);
    }
}

// A nested chain with infinite union whose small elements are all revealed
// early: a finite universe drained one element per step, overlaid with the
// canonical chain of a periodic infinite set.  The parity minima of the
// union freeze by max(|universe|, prefix + 2*period) <= 26 steps.
struct NestedChain {
    std::vector<Nat> reveal_order;  // finite universe, revealed one per step
    fipp::streams::InfiniteSet tail;

    fipp::codec::FinSet at(Nat m) const {
        std::vector<Nat> elems;
        for (Nat i = 0; i < reveal_order.size() && i <= m; ++i) elems.push_back(reveal_order[i]);
        auto seg = fipp::streams::intersect_segment(tail, m);
        return fipp::codec::set_union(fipp::codec::FinSet::from_unsorted(std::move(elems)), seg);
    }
};

inline fipp::streams::CodeSequence nested_chain(Rng& rng) {
    NestedChain chain{.reveal_order = {}, .tail = infinite_set(rng)};
    Nat size = 1 + below(rng, 18);
    std::vector<Nat> pool;
    for (Nat i = 0; i <= 50; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    chain.reveal_order.assign(pool.begin(), pool.begin() + size);
    auto shared = std::make_shared<NestedChain>(std::move(chain));
    return fipp::streams::CodeSequence{[shared](Nat m) { return shared->at(m); }, true, true};
}

// --- random bounded formulas -------------------------------------------
//
// Terms are kept small enough that modulus(phi, z) stays below ~16 for
// z <= 2, so prefix spaces remain exhaustively enumerable.

struct FormulaOptions {
    std::vector<std::string> free_vars;  // empty: closed except for f
    Nat max_depth = 3;
    Nat max_const = 2;
};

inline fipp::sigma00::Term simple_term(Rng& rng, const std::vector<std::string>& vars, Nat max_const) {
    using namespace fipp::sigma00;
    if (!vars.empty() && below(rng, 2) == 0) return t_var(vars[below(rng, vars.size())]);
    return t_const(below(rng, max_const + 1));
}

inline fipp::sigma00::Term term(Rng& rng, const std::vector<std::string>& vars, Nat max_const, Nat depth) {
    using namespace fipp::sigma00;
    switch (depth == 0 ? 0 : below(rng, 4)) {
        case 1: return t_add(term(rng, vars, max_const, depth - 1), simple_term(rng, vars, max_const));
        case 2: return t_mul(term(rng, vars, max_const, depth - 1), simple_term(rng, vars, max_const));
        default: return simple_term(rng, vars, max_const);
    }
}

inline fipp::sigma00::Formula formula(Rng& rng, std::vector<std::string> vars, const FormulaOptions& opt,
                                      Nat depth) {
    using namespace fipp::sigma00;
    Nat pick = depth == 0 ? below(rng, 2) : below(rng, 6);
    switch (pick) {
        case 0: {  // f-atom; pair arguments stay simple to keep the modulus low
            auto t = below(rng, 3) == 0 ? term(rng, vars, opt.max_const, 1)
                                        : t_pair(simple_term(rng, vars, opt.max_const),
                                                 simple_term(rng, vars, opt.max_const));
            return f_in(t);
        }
        case 1: {  // f-free comparison
            auto op = std::array{FormulaNode::CmpOp::Eq, FormulaNode::CmpOp::Le, FormulaNode::CmpOp::Lt}[below(rng, 3)];
            return f_cmp(term(rng, vars, opt.max_const, 1), op, term(rng, vars, opt.max_const, 1));
        }
        case 2: return f_not(formula(rng, vars, opt, depth - 1));
        case 3:
        case 4: {
            auto op = std::array{FormulaNode::BinOp::And, FormulaNode::BinOp::Or, FormulaNode::BinOp::Imp,
                                 FormulaNode::BinOp::Iff}[below(rng, 4)];
            return f_bin(formula(rng, vars, opt, depth - 1), op, formula(rng, vars, opt, depth - 1));
        }
        default: {
            std::string qv = "q" + std::to_string(vars.size());
            auto bound = below(rng, 2) == 0 && !vars.empty() ? t_var(vars[below(rng, vars.size())])
                                                             : t_const(1 + below(rng, 2));
            vars.push_back(qv);
            auto body = formula(rng, vars, opt, depth - 1);
            vars.pop_back();
            return f_quant(below(rng, 2) == 0 ? FormulaNode::QuantKind::All : FormulaNode::QuantKind::Ex,
                           qv, bound, body);
        }
    }
}

inline fipp::sigma00::Formula formula(Rng& rng, const FormulaOptions& opt = {}) {
    return formula(rng, opt.free_vars, opt, opt.max_depth);
}

}  // namespace gen
