// Command-line front end for the workbench: exact polynomial/ideal
// calculators plus the stage-based simulation lab and the verification
// suites. Machine-readable JSON goes to stdout; human summaries and trace
// logs go to stderr where noted.

#include <CLI11.hpp>
#include <json.hpp>

#include "revring/gcd_bezout.hpp"
#include "revring/linear_ring.hpp"
#include "revring/localize.hpp"
#include "revring/poly_ops.hpp"
#include "revring/poly_text.hpp"
#include "revring/priority_merge.hpp"
#include "revring/suites.hpp"
#include "revring/t_ring.hpp"
#include "revring/zorn.hpp"

#include <cstdlib>
#include <iostream>

using nlohmann::json;
using namespace revring;

namespace {

unsigned degree_bound_default() {
    if (const char* env = std::getenv("REVRING_DEGREE_BOUND"))
        return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    return 8;
}

Value parse_value(const RingId& ring, const std::string& text) {
    switch (ring.kind) {
        case RingKind::Integers:
            return Int(text);
        case RingKind::Modular:
            return int_mod(Int(text), Int(ring.modulus));
        case RingKind::PidT:
            return TElement::from_poly(parse_poly(text));
        default:
            return parse_poly(text);
    }
}

json flag_json(Flag f) {
    switch (f) {
        case Flag::Yes: return true;
        case Flag::No: return false;
        default: return "undecided";
    }
}

json class_json(const IdealClass& c) {
    json j;
    j["prime"] = flag_json(c.prime);
    j["primary"] = flag_json(c.primary);
    j["semiprime"] = flag_json(c.semiprime);
    j["primal"] = flag_json(c.primal);
    j["maximal"] = flag_json(c.maximal);
    if (c.adjoint_known) {
        json adj = json::array();
        for (const Value& v : c.adjoint) adj.push_back(value_str(v));
        j["adjoint"] = adj;
    }
    return j;
}

FgIdeal make_ideal(const RingId& ring, const std::vector<std::string>& gens, bool monomial) {
    if (monomial) {
        std::vector<MultiPoly> ms;
        for (const auto& g : gens) ms.push_back(parse_poly(g));
        return FgIdeal::monomial(std::move(ms));
    }
    switch (ring.kind) {
        case RingKind::Integers: {
            std::vector<Int> is;
            for (const auto& g : gens) is.emplace_back(g);
            return FgIdeal::integers(std::move(is));
        }
        case RingKind::Modular: {
            std::vector<Int> is;
            for (const auto& g : gens) is.emplace_back(g);
            return FgIdeal::modular(ring.modulus, std::move(is));
        }
        case RingKind::RationalPoly: {
            std::vector<MultiPoly> ps;
            for (const auto& g : gens) ps.push_back(parse_poly(g));
            return FgIdeal::rational_poly(std::move(ps));
        }
        case RingKind::PidT: {
            std::vector<TElement> ts;
            for (const auto& g : gens) ts.push_back(TElement::from_poly(parse_poly(g)));
            return FgIdeal::pid_t(std::move(ts));
        }
        default:
            throw WrongRing("unsupported ring for ideals: " + ring.str());
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"revring: exact computable-algebra workbench"};
    app.require_subcommand(1);
    json out;

    // ---- factor ----------------------------------------------------------
    auto* cmd_factor = app.add_subcommand("factor", "factor a univariate polynomial");
    std::string factor_ring = "Z", factor_poly;
    unsigned factor_bound = degree_bound_default();
    cmd_factor->add_option("--ring", factor_ring, "Z or Q[x]");
    cmd_factor->add_option("--degree-bound", factor_bound, "maximum degree");
    cmd_factor->add_option("poly", factor_poly)->required();
    cmd_factor->callback([&] {
        CoeffRing ring = factor_ring == "Z" ? CoeffRing::Integers : CoeffRing::Rationals;
        PolyFactorization f = factor(parse_poly(factor_poly), ring, factor_bound);
        out["unit"] = f.unit.str();
        out["factors"] = json::array();
        for (const MultiPoly& q : f.factors) out["factors"].push_back(q.str());
        out["product"] = f.product().str();
    });

    // ---- gcd -------------------------------------------------------------
    auto* cmd_gcd = app.add_subcommand("gcd", "gcd and lcm of two elements");
    std::string gcd_ring = "Z", gcd_a, gcd_b;
    bool gcd_via_factoring = false;
    cmd_gcd->add_option("--ring", gcd_ring, "Z or Q[x]");
    cmd_gcd->add_flag("--via-factoring", gcd_via_factoring, "use the factor-grouping route");
    cmd_gcd->add_option("a", gcd_a)->required();
    cmd_gcd->add_option("b", gcd_b)->required();
    cmd_gcd->callback([&] {
        RingId ring = parse_ring_literal(gcd_ring);
        Value a = parse_value(ring, gcd_a), b = parse_value(ring, gcd_b);
        auto [g, l] = gcd_via_factoring ? gcd_lcm_via_factoring(ring, a, b)
                                        : gcd_lcm(ring, a, b);
        out["gcd"] = value_str(g);
        out["lcm"] = value_str(l);
    });

    // ---- bezout ----------------------------------------------------------
    auto* cmd_bezout = app.add_subcommand("bezout", "principal generator with certificate");
    std::string bez_ring = "Z";
    std::vector<std::string> bez_gens;
    cmd_bezout->add_option("--ring", bez_ring, "Z or Q[x]");
    cmd_bezout->add_option("gens", bez_gens)->required();
    cmd_bezout->callback([&] {
        RingId ring = parse_ring_literal(bez_ring);
        BezoutCertificate cert = principal_generator(make_ideal(ring, bez_gens, false));
        out["d"] = value_str(cert.d);
        out["coefficients"] = json::array();
        for (const Value& c : cert.coefficients) out["coefficients"].push_back(value_str(c));
        out["verified"] = cert.verify();
    });

    // ---- divide ------------------------------------------------------------
    auto* cmd_divide = app.add_subcommand("divide", "univariate polynomial division");
    std::string div_method = "long", div_p, div_d;
    cmd_divide->add_option("--method", div_method, "long or matrix")
        ->check(CLI::IsMember({"long", "matrix"}));
    cmd_divide->add_option("p", div_p)->required();
    cmd_divide->add_option("d", div_d)->required();
    cmd_divide->callback([&] {
        MultiPoly p = parse_poly(div_p), d = parse_poly(div_d);
        DivisionResult r = div_method == "long" ? divide_long(p, d) : divide_matrix(p, d);
        out["quotient"] = r.quotient.str();
        out["remainder"] = r.remainder.str();
    });

    // ---- ideal --------------------------------------------------------------
    auto* cmd_ideal = app.add_subcommand("ideal", "ideal calculators");
    cmd_ideal->require_subcommand(1);
    std::string id_ring = "Z", id_by;
    std::vector<std::string> id_gens;
    bool id_monomial = false;
    unsigned long id_n = 0;
    for (const char* sub : {"radical", "classify", "quotient", "correspond", "contains",
                            "extend"}) {
        auto* s = cmd_ideal->add_subcommand(sub);
        if (std::string(sub) != "correspond") {
            s->add_option("--ring", id_ring, "Z, Z/n, Q[x], T");
            s->add_option("--gens", id_gens, "generators")->delimiter(',');
            s->add_flag("--monomial", id_monomial, "monomial ideal in Q[xbar]");
        }
        if (std::string(sub) == "quotient" || std::string(sub) == "contains")
            s->add_option("--by", id_by, "element")->required();
        if (std::string(sub) == "correspond")
            s->add_option("--n", id_n, "modulus")->required();
    }
    cmd_ideal->callback([&] {
        const std::string sub = cmd_ideal->get_subcommands().front()->get_name();
        if (sub == "correspond") {
            out["pairs"] = json::array();
            for (const auto& [up, down] : ideal_correspondence(id_n)) {
                json pair;
                pair["in_Z"] = value_str(up.principal_value());
                pair["in_Zn"] = value_str(down.principal_value());
                pair["class"] = class_json(classify_ideal(up));
                out["pairs"].push_back(pair);
            }
            return;
        }
        RingId ring = parse_ring_literal(id_ring);
        FgIdeal ideal = make_ideal(ring, id_gens, id_monomial);
        if (sub == "radical") {
            FgIdeal rad = radical(ideal);
            out["generators"] = json::array();
            for (const Value& g : rad.generators) out["generators"].push_back(value_str(g));
        } else if (sub == "classify") {
            out["class"] = class_json(classify_ideal(ideal));
        } else if (sub == "quotient") {
            FgIdeal quo = ideal_quotient(ideal, parse_value(id_monomial ? RingId::multipoly() : ring, id_by));
            out["generators"] = json::array();
            for (const Value& g : quo.generators) out["generators"].push_back(value_str(g));
        } else if (sub == "contains") {
            out["contains"] =
                contains(ideal, parse_value(id_monomial ? RingId::multipoly() : ring, id_by));
        } else if (sub == "extend") {
            auto ext = proper_extension(ring, ideal);
            out["extension"] = ext ? json(value_str(ext->principal_value())) : json(nullptr);
        }
    });

    // ---- pid-t ---------------------------------------------------------------
    auto* cmd_t = app.add_subcommand("pid-t", "the localized PID T");
    cmd_t->require_subcommand(1);
    std::vector<std::string> t_args;
    std::string t_schedules;
    unsigned t_horizon = 0;
    auto* t_gen = cmd_t->add_subcommand("gen", "principal generator");
    t_gen->add_option("gens", t_args)->required();
    auto* t_div = cmd_t->add_subcommand("divides", "divisibility query");
    t_div->add_option("pair", t_args)->expected(2);
    auto* t_nf = cmd_t->add_subcommand("normal-form", "exponent-unit normal form");
    t_nf->add_option("element", t_args)->expected(1);
    auto* t_pi2 = cmd_t->add_subcommand("pi2", "staged irreducibility replay");
    t_pi2->add_option("--schedules", t_schedules, "comma-separated schedule files")->required();
    t_pi2->add_option("--horizon", t_horizon)->required();
    cmd_t->callback([&] {
        const std::string sub = cmd_t->get_subcommands().front()->get_name();
        if (sub == "gen") {
            TIdeal ideal;
            for (const auto& s : t_args) ideal.generators.push_back(TElement::from_poly(parse_poly(s)));
            TPrincipal p = t_principal_generator(ideal);
            out["generator"] = p.generator.str();
            out["combination"] = json::array();
            for (const TElement& cmb : p.combination) out["combination"].push_back(cmb.str());
        } else if (sub == "divides") {
            out["divides"] = t_divides(TElement::from_poly(parse_poly(t_args[0])),
                                       TElement::from_poly(parse_poly(t_args[1])));
        } else if (sub == "normal-form") {
            TNormalForm nf = normal_form(TElement::from_poly(parse_poly(t_args[0])));
            out["beta"] = nf.beta.str();
            out["unit_num"] = nf.unit_num.str();
            out["unit_den"] = nf.unit_den.str();
        } else {
            std::vector<StageEnumeration> w;
            for (const auto& f : split_list(t_schedules)) w.push_back(StageEnumeration::load(f));
            auto statuses = pi2_simulate(w, t_horizon);
            out["indices"] = json::array();
            for (size_t e = 0; e < statuses.size(); ++e) {
                json j;
                j["index"] = e;
                j["status"] = statuses[e].reducible_with_witness ? "reducible-with-witness"
                                                                 : "irreducible-at-horizon";
                j["witness_stage"] = statuses[e].witness_stage;
                j["localized_stages"] = statuses[e].localized;
                out["indices"].push_back(j);
            }
        }
    });

    // ---- lab -------------------------------------------------------------------
    auto* cmd_lab = app.add_subcommand("lab", "stage-based simulations (trace on stderr)");
    cmd_lab->require_subcommand(1);
    std::string lab_schedule;
    unsigned lab_horizon = 60, lab_stages = 40, lab_plateau = 2;
    uint64_t lab_seed = 1;
    size_t lab_steps = 20000, lab_count = 12;
    auto* lab_dense = cmd_lab->add_subcommand("dense-set", "marker-dumping construction");
    lab_dense->add_option("--schedule", lab_schedule)->required();
    lab_dense->add_option("--horizon", lab_horizon);
    auto* lab_prio = cmd_lab->add_subcommand("priority-merge", "moving-marker merge");
    lab_prio->add_option("--plateau", lab_plateau, "repeat factor of the input chain");
    lab_prio->add_option("--stages", lab_stages);
    lab_prio->add_option("--seed", lab_seed);
    auto* lab_zorn = cmd_lab->add_subcommand("zorn", "greedy chain through a staged order");
    lab_zorn->add_option("--seed", lab_seed);
    lab_zorn->add_option("--steps", lab_steps);
    auto* lab_block = cmd_lab->add_subcommand("block-merge", "block-merging partial order");
    lab_block->add_option("--schedule", lab_schedule)->required();
    lab_block->add_option("--stages", lab_stages);
    auto* lab_lin = cmd_lab->add_subcommand("conidis", "independent sequences in the linear ring");
    lab_lin->add_option("--schedule", lab_schedule)->required();
    lab_lin->add_option("--count", lab_count);
    lab_lin->add_option("--horizon", lab_horizon);
    cmd_lab->callback([&] {
        const std::string sub = cmd_lab->get_subcommands().front()->get_name();
        if (sub == "dense-set") {
            StageEnumeration k = StageEnumeration::load(lab_schedule);
            DenseSetResult r = dense_set_build(k, lab_horizon);
            for (const auto& e : r.a.entries())
                std::cerr << "stage " << e.stage << ": dump " << e.element << " into A\n";
            out["a"] = json::array();
            for (const auto& e : r.a.entries())
                out["a"].push_back({{"element", e.element}, {"stage", e.stage}});
            out["complement_prefix"] = r.complement_prefix;
            out["stable_count"] = r.stable_count;
        } else if (sub == "priority-merge") {
            Sigma1IdealChain chain;
            chain.ring = RingId::multipoly();
            unsigned plateau = lab_plateau;
            uint64_t salt = lab_seed;
            chain.enumerate = [plateau, salt](size_t n, size_t i) -> Value {
                size_t top = n / plateau;
                uint32_t var = static_cast<uint32_t>(i % (top + 1));
                size_t code = i / (top + 1);
                MultiPoly coeff =
                    MultiPoly::constant(Rat(1 + static_cast<long>((code + salt) % 3)));
                if ((code + salt) % 7 == 3)
                    coeff = MultiPoly::variable(static_cast<uint32_t>((code + salt) % 5));
                return Value(coeff * MultiPoly::variable(var));
            };
            PriorityMergeResult r = priority_merge(chain, lab_stages);
            for (size_t i = 0; i < r.marker_history.size(); ++i)
                for (const auto& [stage, value] : r.marker_history[i])
                    std::cerr << "stage " << stage << ": marker " << i << " -> " << value
                              << "\n";
            out["markers"] = r.markers;
            out["settled"] = r.settled;
            json sizes = json::array();
            for (const auto& jn : r.output_chain) sizes.push_back(jn.size());
            out["chain_sizes"] = sizes;
        } else if (sub == "zorn") {
            Rng rng(lab_seed);
            uint64_t salt = rng.next();
            auto rank = [salt](long x) {
                return (static_cast<uint64_t>(x) * 2654435761u + salt) % 97;
            };
            StagedOrder order{[rank](long a, long b, unsigned k) {
                if (a == b) return true;
                if (k < 3) return false;
                return rank(a) < rank(b);
            }};
            std::vector<StageEnumeration::Entry> ents;
            for (long i = 0; i < 40; ++i) ents.push_back({i, static_cast<unsigned>(i / 2)});
            GreedyChainResult r =
                zorn_greedy_chain(StageEnumeration::from_entries(std::move(ents)), order,
                                  lab_steps);
            for (const auto& step : r.chain)
                std::cerr << "stage " << step.stage << ": extend chain with " << step.element
                          << "\n";
            out["chain"] = json::array();
            for (const auto& step : r.chain)
                out["chain"].push_back({{"element", step.element}, {"stage", step.stage}});
            out["maximal_so_far"] = r.maximal_so_far;
        } else if (sub == "block-merge") {
            StageEnumeration k = StageEnumeration::load(lab_schedule);
            BlockMergePoset poset(k, lab_stages);
            for (const auto& e : k.entries())
                if (e.stage <= lab_stages)
                    std::cerr << "stage " << e.stage << ": merge blocks from " << e.element
                              << "\n";
            std::vector<long> f = poset.greedy_chain(12);
            auto chk = poset.check_chain(f, k, lab_stages, 10);
            out["block_starts"] =
                std::vector<long>(poset.block_starts().begin(),
                                  poset.block_starts().begin() +
                                      std::min<size_t>(16, poset.block_starts().size()));
            out["chain"] = f;
            out["dominates_modulus"] = chk.dominates;
            out["mu"] = chk.mu;
        } else {  // conidis
            StageEnumeration k = StageEnumeration::load(lab_schedule);
            DenseSetResult dense = dense_set_build(k, lab_horizon, lab_count + 4);
            std::vector<LinearRingElement> seq;
            for (size_t i = 0; i < lab_count; ++i)
                seq.push_back(LinearRingElement::variable(
                    static_cast<uint32_t>(dense.complement_prefix[i])));
            DominationTable t = dominating_f(seq, dense.a, lab_horizon, lab_count - 2);
            for (size_t n = 0; n < t.f.size(); ++n)
                std::cerr << "stage " << n << ": f(" << n << ") = " << t.f[n] << "\n";
            out["f"] = t.f;
            out["complement"] = t.complement;
            out["dominates"] = t.dominates;
        }
    });

    // ---- suite -------------------------------------------------------------------
    auto* cmd_suite = app.add_subcommand("suite", "run a verification suite");
    std::string suite_name;
    uint64_t suite_seed = 42;
    unsigned long suite_scale = 0;
    bool suite_list = false;
    cmd_suite->add_option("name", suite_name);
    cmd_suite->add_option("--seed", suite_seed);
    cmd_suite->add_option("--scale", suite_scale, "0 = contract default");
    cmd_suite->add_flag("--list", suite_list);
    int suite_exit = 0;
    cmd_suite->callback([&] {
        if (suite_list || suite_name.empty()) {
            out["suites"] = json::array();
            for (const auto& info : suite_registry())
                out["suites"].push_back({{"name", info.name},
                                         {"default_scale", info.default_scale},
                                         {"time_limit_ms", info.time_limit_ms},
                                         {"summary", info.summary}});
            return;
        }
        SuiteReport r = run_suite(suite_name, suite_seed, suite_scale);
        out = json::parse(r.json());
        std::cerr << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases
                  << " cases, " << r.elapsed_ms << " ms)\n";
        for (const auto& f : r.failures) std::cerr << "  - " << f << "\n";
        if (!r.passed()) suite_exit = 1;
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << out.dump(2) << "\n";
    return suite_exit;
}
