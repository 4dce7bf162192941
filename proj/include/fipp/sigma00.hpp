#pragma once
// sigma00.hpp - bounded-quantifier formulas with one set parameter f.
//
// Grammar (parse):
//   formula := quant | iff
//   quant   := ("forall"|"exists") var "<" term "." formula
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" or)*            (-> associates to the right)
//   or      := and ("|" and)*
//   and     := not ("&" not)*
//   not     := "!" not | atom | "(" formula ")"
//   atom    := term ("in f" | "=" term | "<=" term | "<" term)
//   term    := factor (("+"|"*") factor)*   (one precedence level, left)
//   factor  := nat | var | "pair(" term "," term ")"
//
// Atoms t in f decode t with the Cantor pairing: t in f iff t = (i,j) and
// f(i) = j.  Terms are built from + , * and pair only, hence monotone in
// every variable; the modulus and threshold constructions rely on that.

#include "codec.hpp"
#include "streams.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>

namespace fipp {
namespace sigma00 {

// --- AST ---------------------------------------------------------------

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
    enum class Kind { Const, Var, Add, Mul, Pair };
    Kind kind;
    Nat value = 0;     // Const
    std::string name;  // Var
    Term lhs, rhs;     // Add / Mul / Pair
};

inline Term t_const(Nat v) { return std::make_shared<TermNode>(TermNode{TermNode::Kind::Const, v, {}, nullptr, nullptr}); }
inline Term t_var(std::string n) { return std::make_shared<TermNode>(TermNode{TermNode::Kind::Var, 0, std::move(n), nullptr, nullptr}); }
inline Term t_add(Term a, Term b) { return std::make_shared<TermNode>(TermNode{TermNode::Kind::Add, 0, {}, std::move(a), std::move(b)}); }
inline Term t_mul(Term a, Term b) { return std::make_shared<TermNode>(TermNode{TermNode::Kind::Mul, 0, {}, std::move(a), std::move(b)}); }
inline Term t_pair(Term a, Term b) { return std::make_shared<TermNode>(TermNode{TermNode::Kind::Pair, 0, {}, std::move(a), std::move(b)}); }

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    enum class Kind { InF, Cmp, Not, Bin, Quant };
    enum class CmpOp { Eq, Le, Lt };
    enum class BinOp { And, Or, Imp, Iff };
    enum class QuantKind { All, Ex };

    Kind kind;
    Term t1, t2;        // InF uses t1; Cmp uses t1 op t2
    CmpOp cmp{};
    BinOp bin{};
    Formula f1, f2;     // Not/Quant use f1
    QuantKind quant{};
    std::string qvar;
    Term qbound;
};

inline Formula f_in(Term t) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaNode::Kind::InF;
    n->t1 = std::move(t);
    return n;
}
inline Formula f_cmp(Term a, FormulaNode::CmpOp op, Term b) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaNode::Kind::Cmp;
    n->t1 = std::move(a);
    n->t2 = std::move(b);
    n->cmp = op;
    return n;
}
inline Formula f_not(Formula a) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaNode::Kind::Not;
    n->f1 = std::move(a);
    return n;
}
inline Formula f_bin(Formula a, FormulaNode::BinOp op, Formula b) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaNode::Kind::Bin;
    n->f1 = std::move(a);
    n->f2 = std::move(b);
    n->bin = op;
    return n;
}
inline Formula f_quant(FormulaNode::QuantKind q, std::string var, Term bound, Formula body) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaNode::Kind::Quant;
    n->quant = q;
    n->qvar = std::move(var);
    n->qbound = std::move(bound);
    n->f1 = std::move(body);
    return n;
}

inline bool term_equal(const Term& a, const Term& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TermNode::Kind::Const: return a->value == b->value;
        case TermNode::Kind::Var: return a->name == b->name;
        default: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    }
}

inline bool formula_equal(const Formula& a, const Formula& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case FormulaNode::Kind::InF: return term_equal(a->t1, b->t1);
        case FormulaNode::Kind::Cmp:
            return a->cmp == b->cmp && term_equal(a->t1, b->t1) && term_equal(a->t2, b->t2);
        case FormulaNode::Kind::Not: return formula_equal(a->f1, b->f1);
        case FormulaNode::Kind::Bin:
            return a->bin == b->bin && formula_equal(a->f1, b->f1) && formula_equal(a->f2, b->f2);
        case FormulaNode::Kind::Quant:
            return a->quant == b->quant && a->qvar == b->qvar &&
                   term_equal(a->qbound, b->qbound) && formula_equal(a->f1, b->f1);
    }
    return false;
}

// --- free variables ------------------------------------------------------

inline void term_vars(const Term& t, std::set<std::string>& out) {
    switch (t->kind) {
        case TermNode::Kind::Const: return;
        case TermNode::Kind::Var: out.insert(t->name); return;
        default:
            term_vars(t->lhs, out);
            term_vars(t->rhs, out);
    }
}

inline void free_vars_into(const Formula& phi, std::set<std::string> bound, std::set<std::string>& out) {
    auto add_term = [&](const Term& t) {
        std::set<std::string> vs;
        term_vars(t, vs);
        for (auto& v : vs)
            if (!bound.count(v)) out.insert(v);
    };
    switch (phi->kind) {
        case FormulaNode::Kind::InF: add_term(phi->t1); break;
        case FormulaNode::Kind::Cmp: add_term(phi->t1); add_term(phi->t2); break;
        case FormulaNode::Kind::Not: free_vars_into(phi->f1, bound, out); break;
        case FormulaNode::Kind::Bin:
            free_vars_into(phi->f1, bound, out);
            free_vars_into(phi->f2, bound, out);
            break;
        case FormulaNode::Kind::Quant:
            add_term(phi->qbound);
            bound.insert(phi->qvar);
            free_vars_into(phi->f1, bound, out);
            break;
    }
}

inline std::set<std::string> free_vars(const Formula& phi) {
    std::set<std::string> out;
    free_vars_into(phi, {}, out);
    return out;
}

// --- parser ----------------------------------------------------------------

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(const std::string& sym) {
        skip_ws();
        if (src.compare(pos, sym.size(), sym) == 0) {
            pos += sym.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    std::optional<std::string> peek_ident() {
        skip_ws();
        std::size_t p = pos;
        if (p >= src.size() || !(std::isalpha(static_cast<unsigned char>(src[p])) || src[p] == '_'))
            return std::nullopt;
        std::size_t e = p;
        while (e < src.size() && (std::isalnum(static_cast<unsigned char>(src[e])) || src[e] == '_')) ++e;
        return src.substr(p, e - p);
    }

    std::string take_ident() {
        auto id = peek_ident();
        if (!id) fail("expected identifier");
        pos += id->size();
        return *id;
    }

    static bool is_keyword(const std::string& s) {
        return s == "forall" || s == "exists" || s == "in" || s == "pair" || s == "f";
    }

    Term parse_factor() {
        skip_ws();
        if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            std::size_t e = pos;
            while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
            Nat v = 0;
            try {
                v = std::stoull(src.substr(pos, e - pos));
            } catch (const std::out_of_range&) {
                fail("number literal exceeds 64 bits");
            }
            pos = e;
            return t_const(v);
        }
        auto id = peek_ident();
        if (!id) fail("expected number, variable or pair(...)");
        if (*id == "pair") {
            pos += id->size();
            if (!eat("(")) fail("expected '(' after pair");
            Term a = parse_term();
            if (!eat(",")) fail("expected ',' in pair");
            Term b = parse_term();
            if (!eat(")")) fail("expected ')' closing pair");
            return t_pair(std::move(a), std::move(b));
        }
        if (is_keyword(*id)) fail("'" + *id + "' cannot be used as a variable");
        pos += id->size();
        return t_var(*id);
    }

    Term parse_term() {
        Term t = parse_factor();
        for (;;) {
            if (eat("+"))
                t = t_add(std::move(t), parse_factor());
            else if (eat("*"))
                t = t_mul(std::move(t), parse_factor());
            else
                return t;
        }
    }

    Formula parse_atom_or_group() {
        if (eat("!")) return f_not(parse_atom_or_group());
        skip_ws();
        if (eat("(")) {
            Formula inner = parse_formula();
            if (!eat(")")) fail("expected ')'");
            return inner;
        }
        Term t = parse_term();
        skip_ws();
        auto id = peek_ident();
        if (id && *id == "in") {
            pos += id->size();
            skip_ws();
            std::size_t at = pos;
            auto rhs = peek_ident();
            if (!rhs) fail("expected set name after 'in'");
            if (*rhs != "f") throw parse_error("unbound set '" + *rhs + "': only the set parameter f may appear", at);
            pos += rhs->size();
            return f_in(std::move(t));
        }
        if (eat("<=")) return f_cmp(std::move(t), FormulaNode::CmpOp::Le, parse_term());
        // careful: "<->" is the iff connective, not a comparison
        skip_ws();
        if (pos < src.size() && src[pos] == '<' && src.compare(pos, 3, "<->") != 0) {
            ++pos;
            return f_cmp(std::move(t), FormulaNode::CmpOp::Lt, parse_term());
        }
        if (eat("=")) return f_cmp(std::move(t), FormulaNode::CmpOp::Eq, parse_term());
        fail("expected 'in f', '=', '<=' or '<' after term");
    }

    Formula parse_and() {
        Formula a = parse_atom_or_group();
        while (true) {
            skip_ws();
            if (pos < src.size() && src[pos] == '&') {
                ++pos;
                a = f_bin(std::move(a), FormulaNode::BinOp::And, parse_atom_or_group());
            } else {
                return a;
            }
        }
    }

    Formula parse_or() {
        Formula a = parse_and();
        while (true) {
            skip_ws();
            if (pos < src.size() && src[pos] == '|') {
                ++pos;
                a = f_bin(std::move(a), FormulaNode::BinOp::Or, parse_and());
            } else {
                return a;
            }
        }
    }

    Formula parse_imp() {
        Formula a = parse_or();
        skip_ws();
        if (src.compare(pos, 2, "->") == 0) {
            pos += 2;
            return f_bin(std::move(a), FormulaNode::BinOp::Imp, parse_imp());
        }
        return a;
    }

    Formula parse_iff() {
        Formula a = parse_imp();
        while (true) {
            skip_ws();
            if (src.compare(pos, 3, "<->") == 0) {
                pos += 3;
                a = f_bin(std::move(a), FormulaNode::BinOp::Iff, parse_imp());
            } else {
                return a;
            }
        }
    }

    Formula parse_formula() {
        skip_ws();
        auto id = peek_ident();
        if (id && (*id == "forall" || *id == "exists")) {
            pos += id->size();
            skip_ws();
            std::size_t at = pos;
            std::string var = take_ident();
            if (is_keyword(var)) throw parse_error("'" + var + "' cannot be a quantified variable", at);
            if (!eat("<")) fail("expected '<' after quantified variable");
            Term bound = parse_term();
            if (!eat(".")) fail("expected '.' after quantifier bound");
            Formula body = parse_formula();
            return f_quant(*id == "forall" ? FormulaNode::QuantKind::All : FormulaNode::QuantKind::Ex,
                           std::move(var), std::move(bound), std::move(body));
        }
        return parse_iff();
    }
};

}  // namespace detail

inline Formula parse(const std::string& text) {
    detail::Parser p(text);
    Formula phi = p.parse_formula();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after formula");
    return phi;
}

// --- pretty printing ---------------------------------------------------

inline std::string pretty(const Term& t) {
    switch (t->kind) {
        case TermNode::Kind::Const: return std::to_string(t->value);
        case TermNode::Kind::Var: return t->name;
        case TermNode::Kind::Add: return pretty(t->lhs) + "+" + pretty(t->rhs);
        case TermNode::Kind::Mul: return pretty(t->lhs) + "*" + pretty(t->rhs);
        case TermNode::Kind::Pair: return "pair(" + pretty(t->lhs) + "," + pretty(t->rhs) + ")";
    }
    return {};
}

// Fully parenthesized below the quantifier level, so the output reparses to
// an identical AST regardless of connective associativity.
inline std::string pretty(const Formula& phi) {
    auto wrap = [](const Formula& f) { return "(" + pretty(f) + ")"; };
    switch (phi->kind) {
        case FormulaNode::Kind::InF: return pretty(phi->t1) + " in f";
        case FormulaNode::Kind::Cmp: {
            const char* op = phi->cmp == FormulaNode::CmpOp::Eq ? "=" : phi->cmp == FormulaNode::CmpOp::Le ? "<=" : "<";
            return pretty(phi->t1) + op + pretty(phi->t2);
        }
        case FormulaNode::Kind::Not: return "!" + wrap(phi->f1);
        case FormulaNode::Kind::Bin: {
            const char* op = nullptr;
            switch (phi->bin) {
                case FormulaNode::BinOp::And: op = " & "; break;
                case FormulaNode::BinOp::Or: op = " | "; break;
                case FormulaNode::BinOp::Imp: op = " -> "; break;
                case FormulaNode::BinOp::Iff: op = " <-> "; break;
            }
            return wrap(phi->f1) + op + wrap(phi->f2);
        }
        case FormulaNode::Kind::Quant:
            return std::string(phi->quant == FormulaNode::QuantKind::All ? "forall " : "exists ") +
                   phi->qvar + "<" + pretty(phi->qbound) + ". " + pretty(phi->f1);
    }
    return {};
}

// --- evaluation --------------------------------------------------------

using Env = std::map<std::string, Nat>;
using Membership = std::function<bool(Nat)>;  // decides "q in f"

inline constexpr Nat kQuantifierLoopCap = 1u << 20;

inline Nat checked_add(Nat a, Nat b) {
    Nat r = a + b;
    if (r < a) throw std::overflow_error("term evaluation exceeds 64 bits");
    return r;
}
inline Nat checked_mul(Nat a, Nat b) {
    if (a != 0 && b > std::numeric_limits<Nat>::max() / a)
        throw std::overflow_error("term evaluation exceeds 64 bits");
    return a * b;
}

inline Nat eval_term(const Term& t, const Env& env) {
    switch (t->kind) {
        case TermNode::Kind::Const: return t->value;
        case TermNode::Kind::Var: {
            auto it = env.find(t->name);
            if (it == env.end()) throw std::out_of_range("unbound variable '" + t->name + "'");
            return it->second;
        }
        case TermNode::Kind::Add: return checked_add(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case TermNode::Kind::Mul: return checked_mul(eval_term(t->lhs, env), eval_term(t->rhs, env));
        case TermNode::Kind::Pair: return codec::pair_nat(eval_term(t->lhs, env), eval_term(t->rhs, env));
    }
    return 0;
}

inline bool eval_with_membership(const Formula& phi, Env& env, const Membership& member) {
    switch (phi->kind) {
        case FormulaNode::Kind::InF: return member(eval_term(phi->t1, env));
        case FormulaNode::Kind::Cmp: {
            Nat a = eval_term(phi->t1, env);
            Nat b = eval_term(phi->t2, env);
            switch (phi->cmp) {
                case FormulaNode::CmpOp::Eq: return a == b;
                case FormulaNode::CmpOp::Le: return a <= b;
                case FormulaNode::CmpOp::Lt: return a < b;
            }
            return false;
        }
        case FormulaNode::Kind::Not: return !eval_with_membership(phi->f1, env, member);
        case FormulaNode::Kind::Bin: {
            bool a = eval_with_membership(phi->f1, env, member);
            bool b = eval_with_membership(phi->f2, env, member);
            switch (phi->bin) {
                case FormulaNode::BinOp::And: return a && b;
                case FormulaNode::BinOp::Or: return a || b;
                case FormulaNode::BinOp::Imp: return !a || b;
                case FormulaNode::BinOp::Iff: return a == b;
            }
            return false;
        }
        case FormulaNode::Kind::Quant: {
            Nat bound = eval_term(phi->qbound, env);
            if (bound > kQuantifierLoopCap)
                throw std::runtime_error("quantifier bound too large to enumerate");
            auto it = env.find(phi->qvar);
            bool shadowed = it != env.end();
            Nat saved = shadowed ? it->second : 0;
            bool all = phi->quant == FormulaNode::QuantKind::All;
            bool result = all;
            for (Nat i = 0; i < bound; ++i) {
                env[phi->qvar] = i;
                bool v = eval_with_membership(phi->f1, env, member);
                if (all && !v) { result = false; break; }
                if (!all && v) { result = true; break; }
            }
            if (shadowed)
                env[phi->qvar] = saved;
            else
                env.erase(phi->qvar);
            return result;
        }
    }
    return false;
}

// t in f iff t = (i,j) with f(i) = j, decoded by the Cantor pairing.
inline Membership membership_of(const streams::EvPeriodic& f) {
    return [&f](Nat q) {
        auto [i, j] = codec::unpair_nat(q);
        return f(i) == j;
    };
}

inline bool eval(const Formula& phi, const Env& env, const streams::EvPeriodic& f) {
    Env e = env;
    return eval_with_membership(phi, e, membership_of(f));
}

// --- modulus of continuity ----------------------------------------------

// w with t(xs) <= w whenever all xs <= z, by structural induction on t.
inline Nat term_bound(const Term& t, Nat z) {
    switch (t->kind) {
        case TermNode::Kind::Const: return t->value;
        case TermNode::Kind::Var: return z;
        case TermNode::Kind::Add: return checked_add(term_bound(t->lhs, z), term_bound(t->rhs, z));
        case TermNode::Kind::Mul: return checked_mul(term_bound(t->lhs, z), term_bound(t->rhs, z));
        case TermNode::Kind::Pair: return codec::pair_nat(term_bound(t->lhs, z), term_bound(t->rhs, z));
    }
    return 0;
}

// y such that fbar y = gbar y implies A(f,xs) <-> A(g,xs) for all xs <= z.
// A safe over-approximation, not the least such y.
inline Nat modulus(const Formula& phi, Nat z) {
    switch (phi->kind) {
        case FormulaNode::Kind::InF: return checked_add(term_bound(phi->t1, z), 1);
        case FormulaNode::Kind::Cmp: return 0;
        case FormulaNode::Kind::Not: return modulus(phi->f1, z);
        case FormulaNode::Kind::Bin: return std::max(modulus(phi->f1, z), modulus(phi->f2, z));
        case FormulaNode::Kind::Quant: {
            // the quantified variable ranges below the bound term, so lift z
            Nat z2 = std::max(z, term_bound(phi->qbound, z));
            return modulus(phi->f1, z2);
        }
    }
    return 0;
}

// --- bar compilation ------------------------------------------------------

inline Term subst_term(const Term& t, const std::string& var, const Term& repl) {
    switch (t->kind) {
        case TermNode::Kind::Const: return t;
        case TermNode::Kind::Var: return t->name == var ? repl : t;
        case TermNode::Kind::Add: return t_add(subst_term(t->lhs, var, repl), subst_term(t->rhs, var, repl));
        case TermNode::Kind::Mul: return t_mul(subst_term(t->lhs, var, repl), subst_term(t->rhs, var, repl));
        case TermNode::Kind::Pair: return t_pair(subst_term(t->lhs, var, repl), subst_term(t->rhs, var, repl));
    }
    return t;
}

// Threshold term: atoms q in f contribute q+1, connectives add, a bounded
// quantifier substitutes its bound into the body threshold (terms are
// monotone, so the substituted term dominates every instance).
inline Term threshold_term(const Formula& phi) {
    switch (phi->kind) {
        case FormulaNode::Kind::InF: return t_add(phi->t1, t_const(1));
        case FormulaNode::Kind::Cmp: return t_const(0);
        case FormulaNode::Kind::Not: return threshold_term(phi->f1);
        case FormulaNode::Kind::Bin: return t_add(threshold_term(phi->f1), threshold_term(phi->f2));
        case FormulaNode::Kind::Quant: return subst_term(threshold_term(phi->f1), phi->qvar, phi->qbound);
    }
    return t_const(0);
}

// C with A(f) <-> forall m C(fbar m).  C(a) is vacuously true on prefixes
// shorter than the threshold; from the threshold on, the prefix pins every
// f-atom and C(fbar m) equals A(f).  Checking m up to certified_bound
// decides the universal quantifier.
struct BarPredicate {
    Formula phi;
    Term threshold_tm;
    Nat threshold;
    Nat certified_bound;  // max(threshold, modulus(phi, 0))

    bool decide(std::span<const Nat> a) const {
        if (a.size() < threshold) return true;
        Env env;
        Membership member = [a](Nat q) {
            auto [i, j] = codec::unpair_nat(q);
            return i < a.size() && a[i] == j;
        };
        return eval_with_membership(phi, env, member);
    }

    bool decide_code(const Code& a) const {
        auto v = codec::decode_seq(a);
        return decide(std::span<const Nat>(v));
    }
};

inline BarPredicate compile_bar(const Formula& phi) {
    if (!free_vars(phi).empty())
        throw std::invalid_argument("compile_bar: formula must be closed except for f");
    Term tm = threshold_term(phi);
    Nat t = eval_term(tm, {});
    return BarPredicate{phi, tm, t, std::max(t, modulus(phi, 0))};
}

// Certified-bounds evaluation of forall m C(fbar m) for an eventually
// periodic f.
inline bool bar_holds(const BarPredicate& c, const streams::EvPeriodic& f) {
    for (Nat m = 0; m <= c.certified_bound; ++m) {
        auto v = streams::prefix_values(f, m);
        if (!c.decide(std::span<const Nat>(v))) return false;
    }
    return true;
}

// B with (forall f : N -> [n]  A(f)) <-> forall m B(m): each atom q in f is
// read through the function i |-> min(n, m(i)) for i < lh m, else 0.
struct ClosedBar {
    Formula phi;
    Nat n;
    Nat modulus_bound;  // modulus(phi, 0): prefixes of this length decide A

    bool decide(std::span<const Nat> m) const {
        Env env;
        Membership member = [this, m](Nat q) {
            auto [i, j] = codec::unpair_nat(q);
            Nat fi = i < m.size() ? std::min(n, m[i]) : 0;
            return fi == j;
        };
        return eval_with_membership(phi, env, member);
    }

    bool decide_code(const Code& m) const {
        auto v = codec::decode_seq(m);
        return decide(std::span<const Nat>(v));
    }
};

inline ClosedBar compile_closed(const Formula& phi, Nat n) {
    if (!free_vars(phi).empty())
        throw std::invalid_argument("compile_closed: formula must be closed except for f");
    return ClosedBar{phi, n, modulus(phi, 0)};
}

}  // namespace sigma00
}  // namespace fipp
