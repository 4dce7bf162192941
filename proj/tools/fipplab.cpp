// fipplab - batch workbench for finitary pigeonhole principles.
//
// Exit codes: 0 decided/verified, 1 fails/violated/refuted, 2 unknown or
// budget exhausted, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fipp/codec.hpp>
#include <fipp/cub.hpp>
#include <fipp/principles.hpp>
#include <fipp/setfn.hpp>
#include <fipp/sigma00.hpp>
#include <fipp/streams.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::json;
using namespace fipp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;

unsigned env_threads() {
    const char* v = std::getenv("FIPP_THREADS");
    if (!v) return 1;
    long t = std::strtol(v, nullptr, 10);
    return t < 1 ? 1u : static_cast<unsigned>(t);
}

std::vector<Nat> parse_nat_list(const std::string& text) {
    std::vector<Nat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoull(item));
    return out;
}

streams::InfiniteSet parse_infinite_set(const std::string& spec) {
    if (spec == "evens") return streams::InfiniteSet::evens();
    if (spec == "odds") return streams::InfiniteSet::odds();
    if (spec == "naturals") return streams::InfiniteSet::naturals();
    return streams::InfiniteSet(streams::EvPeriodic::from_string(spec, 1));
}

sigma00::Env parse_env(const std::string& text) {
    sigma00::Env env;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("env entries look like x=3");
        env[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
    }
    return env;
}

json set_json(const codec::FinSet& s) { return json(s.elements()); }

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump() << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "witnesses" || it.key() == "rows") {
            std::cout << it.key() << ": " << it.value().size() << " entries\n";
            continue;
        }
        std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
}

// ---- fipp group -------------------------------------------------------

int run_verify_ce(Nat max_k, bool as_json) {
    auto report = principles::verify_fipp1_ce(max_k);
    json rows = json::array();
    json pairs = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"k", r.k},
                        {"class0", {{"card", r.card0}, {"F", r.f0}}},
                        {"class1", {{"card", r.card1}, {"F", r.f1}}}});
        pairs.push_back({r.f0, r.f1});
    }
    json out{{"command", "fipp verify-ce"}, {"principle", "FIPP1-CE"}, {"k_max", max_k},
             {"setfn", "parity"},           {"verdict", "verified"},  {"exhaustive", true},
             {"pairs", pairs},              {"rows", rows}};
    if (!as_json) {
        std::cout << "k  |c0| F(c0) |c1| F(c1)\n";
        for (const auto& r : report.rows)
            std::cout << r.k << "  " << r.card0 << " " << r.f0 << "  " << r.card1 << " " << r.f1 << "\n";
        std::cout << "verified: |class| <= F(class) for all k <= " << max_k << "\n";
        return kExitOk;
    }
    emit(out, as_json);
    return kExitOk;
}

int run_fipp_check(int principle, Nat n, const std::string& setfn_spec, Nat k, Nat budget, bool as_json) {
    auto F = setfn::setfn_from_spec(setfn_spec);
    json out{{"command", "fipp check"},
             {"principle", principle == 2 ? "FIPP2" : "FIPP3"},
             {"n", n},
             {"k", k},
             {"setfn", F.name},
             {"exhaustive", true}};
    int code = kExitOk;
    if (principle == 2) {
        principles::Fipp2Options opt;
        opt.threads = env_threads();
        opt.least_code_witnesses = true;
        auto r = principles::fipp2_check(n, F, k, opt);
        if (auto* h = std::get_if<principles::Fipp2Holds>(&r)) {
            out["verdict"] = "holds";
            json ws = json::array();
            for (const auto& w : h->witnesses)
                ws.push_back({{"coloring_index", w.coloring_index},
                              {"color", w.color},
                              {"set", set_json(w.set)},
                              {"card", w.set.card()},
                              {"F", w.f_value}});
            out["witnesses"] = ws;
        } else {
            auto& f = std::get<principles::Fipp2Fails>(r);
            out["verdict"] = "fails";
            out["counterexample"] = {{"coloring_index", f.coloring_index}, {"values", f.coloring.values}};
            code = kExitRefuted;
        }
    } else {
        auto r = principles::fipp3_check(n, F, k, budget);
        if (auto* h = std::get_if<principles::Fipp3Holds>(&r)) {
            out["verdict"] = "holds";
            json ws = json::array();
            for (const auto& w : h->witnesses)
                ws.push_back({{"coloring_index", w.coloring_index},
                              {"color", w.color},
                              {"class", set_json(w.class_set)}});
            out["witnesses"] = ws;
        } else if (auto* f = std::get_if<principles::Fipp3Fails>(&r)) {
            out["verdict"] = "fails";
            json refs = json::array();
            for (const auto& c : f->refutations) refs.push_back(c.str());
            out["counterexample"] = {{"coloring_index", f->coloring_index},
                                     {"values", f->coloring.values},
                                     {"refutations", refs}};
            code = kExitRefuted;
        } else {
            auto& u = std::get<principles::Fipp3Unknown>(r);
            out["verdict"] = "unknown";
            out["at"] = {{"coloring_index", u.coloring_index}, {"color", u.color}};
            code = kExitUnknown;
        }
    }
    emit(out, as_json);
    return code;
}

int run_fipp_threshold(int principle, Nat n, const std::string& setfn_spec, Nat max_k, Nat budget,
                       const std::string& strategy, bool as_json) {
    auto F = setfn::setfn_from_spec(setfn_spec);
    json out{{"command", "fipp threshold"},
             {"principle", principle == 2 ? "FIPP2" : "FIPP3"},
             {"n", n},
             {"k_max", max_k},
             {"setfn", F.name},
             {"strategy", strategy}};
    int code = kExitOk;
    if (principle == 2) {
        auto strat = strategy == "fan" ? principles::Strategy::Fan : principles::Strategy::Enumerate;
        auto r = principles::fipp2_threshold(n, F, max_k, strat, env_threads());
        if (auto* l = std::get_if<principles::Least>(&r)) {
            out["verdict"] = "least";
            out["k"] = l->k;
        } else {
            out["verdict"] = "none-up-to";
            code = kExitUnknown;
        }
    } else {
        auto r = principles::fipp3_threshold(n, F, max_k, budget);
        if (auto* l = std::get_if<principles::Least>(&r)) {
            out["verdict"] = "least";
            out["k"] = l->k;
        } else if (auto* u = std::get_if<principles::UnknownAt>(&r)) {
            out["verdict"] = "unknown-at";
            out["k"] = u->k;
            code = kExitUnknown;
        } else {
            out["verdict"] = "none-up-to";
            code = kExitUnknown;
        }
    }
    emit(out, as_json);
    return code;
}

// ---- setfn group ------------------------------------------------------

int run_setfn_eval(const std::string& setfn_spec, const std::string& code_str,
                   const std::string& elements, bool as_json) {
    auto F = setfn::setfn_from_spec(setfn_spec);
    codec::FinSet s;
    Code l;
    if (!code_str.empty()) {
        l = Code(code_str);
        s = codec::set_of(l);
    } else {
        s = codec::FinSet::from_unsorted(parse_nat_list(elements));
        l = codec::canon_code(s);
    }
    Nat v = F.on_set(s);
    emit(json{{"command", "setfn eval"}, {"setfn", F.name}, {"set", set_json(s)},
              {"code", l.str()},         {"value", v}},
         as_json);
    return kExitOk;
}

int verdict_exit(const setfn::StabilityVerdict& v, json& out) {
    if (auto* s = std::get_if<setfn::Stable>(&v)) {
        out["verdict"] = "stable";
        out["index"] = s->index;
        out["value"] = s->value;
        return kExitOk;
    }
    if (auto* w = std::get_if<setfn::Violated>(&v)) {
        out["verdict"] = "violated";
        out["witness"] = {{"i", w->i}, {"j", w->j}, {"value_i", w->value_i}, {"value_j", w->value_j}};
        return kExitRefuted;
    }
    out["verdict"] = "inconclusive";
    return kExitUnknown;
}

int run_probe(bool asnis, const std::string& setfn_spec, const std::string& seq_spec, Nat depth,
              bool as_json) {
    auto F = setfn::setfn_from_spec(setfn_spec);
    streams::CodeSequence seq;
    if (seq_spec == "asnis-witness")
        seq = setfn::asnis_witness_parity();
    else
        seq = streams::canonical_chain(parse_infinite_set(seq_spec));
    json out{{"command", asnis ? "setfn probe-asnis" : "setfn probe-as"},
             {"setfn", F.name},
             {"sequence", seq_spec},
             {"depth", depth}};
    auto v = asnis ? setfn::probe_ASNIS(F, seq, depth) : setfn::probe_AS(F, seq, depth);
    int code = verdict_exit(v, out);
    emit(out, as_json);
    return code;
}

int run_stability_point(const std::string& setfn_spec, const std::string& set_spec, Nat budget,
                        bool as_json) {
    auto F = setfn::setfn_from_spec(setfn_spec);
    auto a = parse_infinite_set(set_spec);
    json out{{"command", "setfn stability-point"}, {"setfn", F.name}, {"set", set_spec}, {"budget", budget}};
    auto r = setfn::stability_point(F, a, budget);
    int code = kExitOk;
    if (auto* p = std::get_if<setfn::Point>(&r)) {
        out["verdict"] = "point";
        out["c"] = p->value;
        out["d"] = p->depth;
    } else {
        out["verdict"] = "not-found-up-to";
        code = kExitUnknown;
    }
    emit(out, as_json);
    return code;
}

// ---- sigma00 group ------------------------------------------------------

int run_sigma00_eval(const std::string& formula, const std::string& f_spec, const std::string& env_spec,
                     bool as_json) {
    auto phi = sigma00::parse(formula);
    auto f = streams::EvPeriodic::from_string(f_spec);
    auto env = parse_env(env_spec);
    bool v = sigma00::eval(phi, env, f);
    emit(json{{"command", "sigma00 eval"}, {"formula", sigma00::pretty(phi)}, {"f", f.to_string()},
              {"value", v}},
         as_json);
    return kExitOk;
}

int run_sigma00_modulus(const std::string& formula, Nat z, bool as_json) {
    auto phi = sigma00::parse(formula);
    emit(json{{"command", "sigma00 modulus"},
              {"formula", sigma00::pretty(phi)},
              {"z", z},
              {"modulus", sigma00::modulus(phi, z)}},
         as_json);
    return kExitOk;
}

int run_sigma00_compile_bar(const std::string& formula, const std::string& f_spec, Nat max_m,
                            bool as_json) {
    auto phi = sigma00::parse(formula);
    auto bar = sigma00::compile_bar(phi);
    json out{{"command", "sigma00 compile-bar"},
             {"formula", sigma00::pretty(phi)},
             {"threshold", bar.threshold},
             {"threshold_term", sigma00::pretty(bar.threshold_tm)},
             {"certified_bound", bar.certified_bound}};
    if (!f_spec.empty()) {
        auto f = streams::EvPeriodic::from_string(f_spec);
        Nat limit = max_m ? max_m : bar.certified_bound;
        json vals = json::array();
        for (Nat m = 0; m <= limit; ++m) {
            auto pv = streams::prefix_values(f, m);
            vals.push_back(bar.decide(std::span<const Nat>(pv)));
        }
        out["f"] = f.to_string();
        out["c_values"] = vals;
        out["bar_holds"] = sigma00::bar_holds(bar, f);
        out["eval"] = sigma00::eval(phi, {}, f);
    }
    emit(out, as_json);
    return kExitOk;
}

// ---- cub group ----------------------------------------------------------

int run_fan_bound(int principle, Nat n, const std::string& setfn_spec, Nat depth_budget, Nat budget,
                  bool as_json) {
    auto F = setfn::setfn_from_spec(setfn_spec);
    cub::SecurePrefix pred = principle == 2 ? cub::fipp2_secure_adapter(n, F)
                                            : cub::fipp3_secure_adapter(n, F, budget);
    json out{{"command", "cub fan-bound"},
             {"principle", principle},
             {"n", n},
             {"setfn", F.name},
             {"depth_budget", depth_budget}};
    auto r = cub::fan_bound(pred, depth_budget);
    int code = kExitOk;
    if (auto* s = std::get_if<cub::AllSecured>(&r)) {
        out["verdict"] = "all-secured";
        out["z"] = s->max_witness;
        out["depth"] = s->expanded_depth;
        out["securing_depth"] = s->securing_depth;
        out["telemetry"] = {{"nodes", s->stats.nodes},
                            {"prunes", s->stats.secured_leaves},
                            {"oracle_unknown", s->stats.oracle_unknown}};
    } else {
        auto& b = std::get<cub::BudgetExceeded>(r);
        out["verdict"] = "budget-exceeded";
        out["path"] = b.path;
        out["telemetry"] = {{"nodes", b.stats.nodes},
                            {"prunes", b.stats.secured_leaves},
                            {"oracle_unknown", b.stats.oracle_unknown}};
        code = kExitUnknown;
    }
    emit(out, as_json);
    return code;
}

int run_pi01_search(const std::string& family_name, Nat n, Nat x_max, Nat w_max, Nat depth,
                    bool as_json) {
    cub::Pi01Family family;
    if (family_name == "nocont")
        family = cub::nocont_family();
    else if (family_name == "true")
        family = cub::trivial_family();
    else if (family_name == "impl-taut")
        family = cub::tautology_family();
    else
        throw std::invalid_argument("unknown family '" + family_name + "'");
    json out{{"command", "cub pi01-search"},
             {"family", family.name},
             {"n", n},
             {"x_max", x_max},
             {"w_max", w_max},
             {"depth", depth}};
    auto r = cub::pi01_bound_search(family, n, {x_max, w_max, depth});
    int code = kExitOk;
    if (auto* f = std::get_if<cub::Pi01Found>(&r)) {
        out["verdict"] = "found";
        out["z"] = f->z;
        out["budget_relative"] = true;  // not a proof: valid only for the searched depth
    } else if (auto* ref = std::get_if<cub::Pi01Refuted>(&r)) {
        out["verdict"] = "refuted";
        out["path"] = ref->path;
        json fails = json::array();
        for (auto [x, w] : ref->failures) fails.push_back({{"x", x}, {"w", w}});
        out["failures"] = fails;
        code = kExitRefuted;
    } else {
        out["verdict"] = "unknown";
        code = kExitUnknown;
    }
    emit(out, as_json);
    return code;
}

int run_nocont_demo(Nat z, bool as_json) {
    auto f = cub::nocont_demo(z);
    bool confirmed = cub::nocont_refutes(z, f);
    emit(json{{"command", "cub nocont-demo"},
              {"z", z},
              {"f", f.to_string()},
              {"refutation_confirmed", confirmed}},
         as_json);
    return confirmed ? kExitRefuted : kExitUnknown;
}

// ---- codec group ----------------------------------------------------------

int run_codec_encode(const std::string& seq, bool as_json) {
    auto v = parse_nat_list(seq);
    Code c = codec::encode_seq(std::span<const Nat>(v));
    emit(json{{"command", "codec encode"},
              {"seq", codec::seq_to_string(std::span<const Nat>(v))},
              {"code", c.str()},
              {"set", set_json(codec::set_of(c))}},
         as_json);
    return kExitOk;
}

int run_codec_decode(const std::string& code_str, bool as_json) {
    Code c(code_str);
    auto v = codec::decode_seq(c);
    emit(json{{"command", "codec decode"},
              {"code", c.str()},
              {"seq", codec::seq_to_string(std::span<const Nat>(v))},
              {"set", set_json(codec::set_of(c))},
              {"canon_code", codec::canon_code(codec::set_of(c)).str()}},
         as_json);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fipplab - workbench for finitary pigeonhole principles"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output")->configurable(false);

    // fipp
    auto* fipp_cmd = app.add_subcommand("fipp", "pigeonhole principle checks");
    fipp_cmd->require_subcommand(1);

    Nat ce_max_k = 7;
    auto* verify_ce = fipp_cmd->add_subcommand("verify-ce", "verify the FIPP1 counterexample family");
    verify_ce->add_option("--max-k", ce_max_k, "check all k <= max-k");

    int chk_principle = 2;
    Nat chk_n = 1, chk_k = 0, chk_budget = 10;
    std::string chk_setfn = "parity";
    auto* check = fipp_cmd->add_subcommand("check", "decide FIPP2/FIPP3 at a fixed k");
    check->add_option("--principle", chk_principle)->check(CLI::IsMember({2, 3}));
    check->add_option("--colors", chk_n, "n: colors are [n]");
    check->add_option("--setfn", chk_setfn, "const:<c> | parity | coloring:<spec>:<n>");
    check->add_option("--k", chk_k)->required();
    check->add_option("--budget", chk_budget, "cylinder search budget (principle 3)");

    int th_principle = 2;
    Nat th_n = 1, th_max_k = 10, th_budget = 10;
    std::string th_setfn = "parity", th_strategy = "enumerate";
    auto* threshold = fipp_cmd->add_subcommand("threshold", "least k making the principle hold");
    threshold->add_option("--principle", th_principle)->check(CLI::IsMember({2, 3}));
    threshold->add_option("--colors", th_n);
    threshold->add_option("--setfn", th_setfn);
    threshold->add_option("--max-k", th_max_k);
    threshold->add_option("--strategy", th_strategy)->check(CLI::IsMember({"enumerate", "fan"}));
    threshold->add_option("--budget", th_budget);

    // setfn
    auto* setfn_cmd = app.add_subcommand("setfn", "set functions and stability probes");
    setfn_cmd->require_subcommand(1);

    std::string ev_setfn = "parity", ev_code, ev_elements;
    auto* sf_eval = setfn_cmd->add_subcommand("eval", "evaluate F on a set code");
    sf_eval->add_option("--setfn", ev_setfn);
    sf_eval->add_option("--code", ev_code, "decimal sequence code");
    sf_eval->add_option("--elements", ev_elements, "comma-separated elements");

    std::string pa_setfn = "parity", pa_seq = "evens";
    Nat pa_depth = 20;
    auto* probe_as = setfn_cmd->add_subcommand("probe-as", "stability along a nested chain");
    probe_as->add_option("--setfn", pa_setfn);
    probe_as->add_option("--chain", pa_seq, "evens|odds|naturals|<chi spec> (canonical chain)");
    probe_as->add_option("--depth", pa_depth);

    std::string pn_setfn = "parity", pn_seq = "asnis-witness";
    Nat pn_depth = 10;
    auto* probe_asnis = setfn_cmd->add_subcommand("probe-asnis", "stability along a weakly convergent sequence");
    probe_asnis->add_option("--setfn", pn_setfn);
    probe_asnis->add_option("--seq", pn_seq, "asnis-witness | evens|odds|naturals|<chi spec>");
    probe_asnis->add_option("--depth", pn_depth);

    std::string sp_setfn = "const:4", sp_set = "evens";
    Nat sp_budget = 10;
    auto* stab = setfn_cmd->add_subcommand("stability-point", "search a window [d] forcing a stable value c");
    stab->add_option("--setfn", sp_setfn);
    stab->add_option("--set", sp_set);
    stab->add_option("--budget", sp_budget);

    // sigma00
    auto* sigma_cmd = app.add_subcommand("sigma00", "bounded-formula tools");
    sigma_cmd->require_subcommand(1);

    std::string se_formula, se_f = ";0", se_env;
    auto* s_eval = sigma_cmd->add_subcommand("eval", "evaluate a formula");
    s_eval->add_option("--formula", se_formula)->required();
    s_eval->add_option("--f", se_f, "EvPeriodic spec prefix;period");
    s_eval->add_option("--env", se_env, "x=1,y=2");

    std::string sm_formula;
    Nat sm_z = 0;
    auto* s_mod = sigma_cmd->add_subcommand("modulus", "modulus of continuity");
    s_mod->add_option("--formula", sm_formula)->required();
    s_mod->add_option("--z", sm_z);

    std::string sb_formula, sb_f;
    Nat sb_max_m = 0;
    auto* s_bar = sigma_cmd->add_subcommand("compile-bar", "compile the bar form C");
    s_bar->add_option("--formula", sb_formula)->required();
    s_bar->add_option("--f", sb_f, "optional EvPeriodic to tabulate C(fbar m)");
    s_bar->add_option("--max-m", sb_max_m, "tabulate up to this m (default certified bound)");

    // cub
    auto* cub_cmd = app.add_subcommand("cub", "fan search and Pi01 tools");
    cub_cmd->require_subcommand(1);

    int fb_principle = 2;
    Nat fb_n = 1, fb_depth = 10, fb_budget = 10;
    std::string fb_setfn = "const:1";
    auto* fan = cub_cmd->add_subcommand("fan-bound", "uniform bound by fan search");
    fan->add_option("--principle", fb_principle)->check(CLI::IsMember({2, 3}));
    fan->add_option("--colors", fb_n);
    fan->add_option("--setfn", fb_setfn);
    fan->add_option("--depth-budget", fb_depth);
    fan->add_option("--budget", fb_budget);

    std::string pi_family = "nocont";
    Nat pi_n = 1, pi_x = 3, pi_w = 5, pi_depth = 6;
    auto* pi01 = cub_cmd->add_subcommand("pi01-search", "budgeted Pi01 bound search");
    pi01->add_option("--family", pi_family)->check(CLI::IsMember({"true", "impl-taut", "nocont"}));
    pi01->add_option("--colors", pi_n);
    pi01->add_option("--x-max", pi_x);
    pi01->add_option("--w-max", pi_w);
    pi01->add_option("--depth", pi_depth);

    Nat nd_z = 5;
    auto* nocont = cub_cmd->add_subcommand("nocont-demo", "refute a uniform bound candidate");
    nocont->add_option("--z", nd_z);

    // codec
    auto* codec_cmd = app.add_subcommand("codec", "sequence and set codes");
    codec_cmd->require_subcommand(1);

    std::string enc_seq;
    auto* enc = codec_cmd->add_subcommand("encode", "encode a finite sequence");
    enc->add_option("--seq", enc_seq, "comma-separated entries; empty for <>");

    std::string dec_code = "0";
    auto* dec = codec_cmd->add_subcommand("decode", "decode a sequence code");
    dec->add_option("--code", dec_code)->required();

    // let trailing --json reach the root flag from any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (auto* sc : a->get_subcommands([](const CLI::App*) { return true; })) {
            sc->fallthrough();
            enable_fallthrough(sc);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (verify_ce->parsed()) return run_verify_ce(ce_max_k, as_json);
        if (check->parsed()) return run_fipp_check(chk_principle, chk_n, chk_setfn, chk_k, chk_budget, as_json);
        if (threshold->parsed())
            return run_fipp_threshold(th_principle, th_n, th_setfn, th_max_k, th_budget, th_strategy, as_json);
        if (sf_eval->parsed()) return run_setfn_eval(ev_setfn, ev_code, ev_elements, as_json);
        if (probe_as->parsed()) return run_probe(false, pa_setfn, pa_seq, pa_depth, as_json);
        if (probe_asnis->parsed()) return run_probe(true, pn_setfn, pn_seq, pn_depth, as_json);
        if (stab->parsed()) return run_stability_point(sp_setfn, sp_set, sp_budget, as_json);
        if (s_eval->parsed()) return run_sigma00_eval(se_formula, se_f, se_env, as_json);
        if (s_mod->parsed()) return run_sigma00_modulus(sm_formula, sm_z, as_json);
        if (s_bar->parsed()) return run_sigma00_compile_bar(sb_formula, sb_f, sb_max_m, as_json);
        if (fan->parsed()) return run_fan_bound(fb_principle, fb_n, fb_setfn, fb_depth, fb_budget, as_json);
        if (pi01->parsed()) return run_pi01_search(pi_family, pi_n, pi_x, pi_w, pi_depth, as_json);
        if (nocont->parsed()) return run_nocont_demo(nd_z, as_json);
        if (enc->parsed()) return run_codec_encode(enc_seq, as_json);
        if (dec->parsed()) return run_codec_decode(dec_code, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
