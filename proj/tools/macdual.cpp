// Command-line frontend: single-instance reports, the verification sweep,
// and the codimension-n weak-Lefschetz failure reproduction.
#include "CLI11.hpp"
#include "json.hpp"

#include "macdual/codimn.hpp"
#include "macdual/groebner.hpp"
#include "macdual/lefschetz.hpp"
#include "macdual/poly_io.hpp"
#include "macdual/structure.hpp"
#include "macdual/sweep.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace macdual;
using nlohmann::json;

namespace {

struct InputSpec {
    std::string params_text;
    std::string dual_text;
    int nvars = 0; // 0 = infer (at least 3)
};

std::optional<Binomial3Params> parse_params(const std::string& text) {
    std::vector<int> vals;
    if (!text.empty() && text[0] == 'a') {
        // instance-id form, as printed by sweep reports: a1b1c1e1m1
        std::string digits;
        for (char ch : text) {
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                digits += ch;
            } else if (!digits.empty()) {
                vals.push_back(std::stoi(digits));
                digits.clear();
            }
        }
        if (!digits.empty()) vals.push_back(std::stoi(digits));
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
    }
    if (vals.size() != 5) return std::nullopt;
    return Binomial3Params::make(vals[0], vals[1], vals[2], vals[3], vals[4]);
}

MonomialOrder parse_order(const std::string& text, int nvars) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::vector<int> priority;
    if (colon != std::string::npos) {
        VarTable vt = VarTable::standard(nvars);
        std::stringstream ss(text.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int idx = vt.index_of(tok);
            if (idx < 0) throw CLI::ValidationError("--order", "unknown variable '" + tok + "'");
            priority.push_back(idx);
        }
    }
    if (priority.empty()) {
        priority.resize(nvars);
        for (int i = 0; i < nvars; ++i) priority[i] = i;
    }
    if (kind == "grevlex") return MonomialOrder::grevlex(priority);
    if (kind == "lex") return MonomialOrder::lex(priority);
    throw CLI::ValidationError("--order", "order kind must be grevlex or lex");
}

std::string hvec_str(const std::vector<int>& h) {
    std::string s = "(";
    for (size_t i = 0; i < h.size(); ++i) s += (i ? ", " : "") + std::to_string(h[i]);
    return s + ")";
}

json params_json(const Binomial3Params& p) {
    return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"e", p.e}, {"m", p.m},
                {"n", p.n}, {"q", p.q}, {"r", p.r}, {"d", p.d}};
}

// Resolves the dual generator for an instance command: either the normal
// form from --params or a parsed (and, for two-term inputs, rationally
// normalized) --dual expression.
struct ResolvedInput {
    Poly F;
    std::optional<Binomial3Params> params;
    std::string normalization;
};

ResolvedInput resolve_input(const InputSpec& in) {
    ResolvedInput out{Poly(0), std::nullopt, ""};
    if (!in.params_text.empty()) {
        auto p = parse_params(in.params_text);
        if (!p) throw CLI::ValidationError("--params", "expected a,b,c,e,m");
        out.params = *p;
        out.F = dual_generator(*p);
        return out;
    }
    Poly F = in.nvars > 0 ? parse_poly(in.dual_text, VarTable::standard(in.nvars))
                          : parse_poly_auto(in.dual_text, 3);
    if (!F.is_homogeneous() || F.is_zero())
        throw CLI::ValidationError("--dual", "dual generator must be homogeneous and nonzero");
    if (F.term_count() == 2) {
        NormalizeResult norm = normalize_binomial(F);
        if (norm.status == NormalizeResult::Status::Normalized && norm.result != F) {
            // sanity: the rescaling preserves the h-vector
            if (ApolarAlgebra(F).h_vector() != ApolarAlgebra(norm.result).h_vector())
                throw std::logic_error("normalization changed the h-vector");
            out.normalization = "coefficients removed by scaling variable " +
                                std::to_string(norm.variable + 1) + " by " +
                                to_string(norm.lambda);
            F = norm.result;
        } else if (norm.status == NormalizeResult::Status::IrrationalScaling) {
            out.normalization = "irrational-scaling: computing on the given coefficients";
        }
    }
    out.F = F;
    return out;
}

int cmd_ann(const InputSpec& in, bool as_json) {
    ResolvedInput ri = resolve_input(in);
    ApolarAlgebra A(ri.F);
    VarTable vt = VarTable::standard(A.nvars());

    json j;
    j["dual"] = to_string(ri.F, vt);
    if (!ri.normalization.empty()) j["normalization"] = ri.normalization;
    j["socle_degree"] = A.socle_degree();
    j["h_vector"] = json(A.h_vector());
    json gens = json::array();
    for (auto& [d, g] : A.min_generators())
        gens.push_back(json{{"degree", d}, {"poly", to_string(g, vt)}});
    j["minimal_generators"] = gens;
    j["complete_intersection"] = static_cast<int>(A.min_generators().size()) == A.nvars();

    std::string agree;
    if (ri.params) {
        const Binomial3Params& p = *ri.params;
        j["params"] = params_json(p);
        j["case"] = case_name(p.tag);
        j["complete_intersection"] = is_complete_intersection(p);
        InstanceContext ctx(p);
        CheckResult res = check_ann(ctx);
        j["formula_vs_oracle"] = res.status;
        agree = res.status;
        j["formula_vs_oracle_detail"] = res.detail;
    }

    if (as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "dual generator: " << j["dual"].get<std::string>() << "\n";
        if (!ri.normalization.empty()) std::cout << "normalization: " << ri.normalization << "\n";
        if (ri.params) std::cout << "case: " << j["case"].get<std::string>() << "\n";
        std::cout << "h-vector: " << hvec_str(A.h_vector()) << "\n";
        std::cout << "socle degree: " << A.socle_degree() << "\n";
        std::cout << "minimal generators (" << A.min_generators().size() << "):\n";
        for (auto& [d, g] : A.min_generators())
            std::cout << "  [deg " << d << "] " << to_string(g, vt) << "\n";
        std::cout << "complete intersection: "
                  << (j["complete_intersection"].get<bool>() ? "yes" : "no") << "\n";
        if (ri.params) std::cout << "formula vs oracle: " << agree << "\n";
    }
    return (!ri.params || agree == "pass") ? 0 : 1;
}

int cmd_lefschetz(const InputSpec& in, const std::string& property, const std::string& method,
                  std::uint64_t seed, bool as_json) {
    ResolvedInput ri = resolve_input(in);
    ApolarAlgebra A(ri.F);
    LefschetzOptions opts;
    opts.seed = seed;
    if (method == "rank") opts.symbolic_certificates = false;

    LefschetzVerdict v = property == "slp" ? slp_verdict(A, opts) : wlp_verdict(A, opts);

    json j;
    j["dual"] = to_string(ri.F, VarTable::standard(A.nvars()));
    j["property"] = property;
    j["h_vector"] = json(A.h_vector());
    j["holds"] = v.holds == Verdict::Holds    ? "true"
                 : v.holds == Verdict::Fails ? "false"
                                             : "inconclusive";
    j["method"] = v.method;
    if (v.witness) {
        json w = json::array();
        for (const Rat& c : v.witness->coeffs) w.push_back(c.get_str());
        j["witness"] = w;
    }
    if (!v.failures.empty()) {
        json f = json::array();
        for (const MapRank& mr : v.failures)
            f.push_back(json{{"from", mr.i},
                             {"to", mr.i + mr.k},
                             {"best_rank", mr.best_rank},
                             {"required", mr.required}});
        j["failures"] = f;
    }
    if (!v.certificate.empty()) j["certificate"] = v.certificate;

    if (as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << property << " on " << j["dual"].get<std::string>() << ": "
                  << j["holds"].get<std::string>() << " (" << v.method << ")\n";
        if (v.witness) {
            std::cout << "witness: ";
            for (size_t i = 0; i < v.witness->coeffs.size(); ++i)
                std::cout << (i ? " + " : "") << v.witness->coeffs[i].get_str() << "*"
                          << VarTable::standard(A.nvars()).names[i];
            std::cout << "\n";
        }
        for (const MapRank& mr : v.failures)
            std::cout << "rank deficit at " << mr.i << " -> " << mr.i + mr.k << ": "
                      << mr.best_rank << " < " << mr.required << "\n";
        if (!v.certificate.empty()) std::cout << "certificate: " << v.certificate << "\n";
    }
    if (v.holds == Verdict::Holds) return 0;
    if (v.holds == Verdict::Fails) return 2;
    return 3;
}

json report_json(const InstanceReport& rep) {
    json checks;
    for (auto& [name, res] : rep.checks) {
        json c{{"status", res.status}};
        if (!res.detail.empty()) c["detail"] = res.detail;
        checks[name] = c;
    }
    return json{{"id", rep.id},
                {"params", params_json(rep.params)},
                {"case", rep.case_tag},
                {"checks", checks},
                {"ms", rep.ms}};
}

int cmd_sweep(SweepConfig cfg, const std::string& out_path, bool quiet) {
    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw std::runtime_error("cannot open output path " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : out_file;
    long failures = 0, indeterminate = 0, instances = 0;
    std::map<std::string, long> per_check_failures;
    run_sweep(cfg, [&](const InstanceReport& rep) {
        ++instances;
        for (auto& [name, res] : rep.checks) {
            if (res.status == "fail") {
                ++failures;
                ++per_check_failures[name];
            } else if (res.status == "indeterminate") {
                ++indeterminate;
            }
        }
        out << report_json(rep).dump() << "\n";
        if (!quiet && instances % 25 == 0)
            std::cerr << "swept " << instances << " instances...\n";
    });
    std::cerr << "sweep: " << instances << " instances, " << failures << " failing checks, "
              << indeterminate << " indeterminate\n";
    for (auto& [name, count] : per_check_failures)
        std::cerr << "  " << name << ": " << count << " failures\n";
    return failures == 0 ? 0 : 1;
}

int cmd_codimn(int from, int to, double budget, std::uint64_t seed, bool as_json) {
    if (from < 4) throw CLI::ValidationError("--from", "the family needs n >= 4");
    LefschetzOptions opts;
    opts.seed = seed;
    bool all_certified = true;
    for (int n = from; n <= to; ++n) {
        CodimnReport rep = codimn_wlp_failure(n, opts, budget);
        all_certified = all_certified && rep.failure_certified;
        json j{{"n", rep.n},
               {"h_vector", json(rep.h_vector)},
               {"mid_degree", rep.mid_degree},
               {"required_rank", rep.required_rank},
               {"best_sampled_rank", rep.best_sampled_rank},
               {"wlp_fails_certified", rep.failure_certified},
               {"method", rep.method},
               {"seconds", rep.seconds}};
        if (as_json) {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "n=" << rep.n << ": h=" << hvec_str(rep.h_vector)
                      << ", middle map rank <= " << rep.best_sampled_rank << " < "
                      << rep.required_rank
                      << (rep.failure_certified ? ", WLP failure certified (" + rep.method + ")"
                                                : ", NOT certified")
                      << " in " << rep.seconds << "s\n";
        }
    }
    return all_certified ? 0 : 2;
}

int cmd_doubling(const std::string& params_text, bool as_json) {
    auto p = parse_params(params_text);
    if (!p) throw CLI::ValidationError("--params", "expected a,b,c,e,m");
    DoublingCertificate cert = doubling_verify(*p);
    VarTable vt = VarTable::standard(3);
    json j{{"id", p->id()},
           {"case", case_name(p->tag)},
           {"complete_intersection", cert.complete_intersection},
           {"status", cert.status == DoublingCertificate::Status::Verified  ? "pass"
                      : cert.status == DoublingCertificate::Status::Failed ? "fail"
                                                                           : "indeterminate"},
           {"detail", cert.detail}};
    if (cert.status == DoublingCertificate::Status::Verified) {
        json gens = json::array();
        for (const Poly& g : cert.j_generators) gens.push_back(to_string(g, vt));
        j["j_generators"] = gens;
        j["omega_series"] = cert.omega_series.to_string();
        json perm = json::array();
        for (int s : cert.permutation) perm.push_back(s);
        j["permutation"] = perm;
    }
    if (as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "doubling " << p->id() << " [" << case_name(p->tag)
                  << "]: " << j["status"].get<std::string>() << " - " << cert.detail << "\n";
        if (cert.status == DoublingCertificate::Status::Verified) {
            std::cout << "J generators:";
            for (const Poly& g : cert.j_generators) std::cout << "  " << to_string(g, vt);
            std::cout << "\n";
        }
    }
    return cert.status == DoublingCertificate::Status::Verified ? 0 : 1;
}

int cmd_gb(const std::string& params_text, const std::string& order_text, bool as_json) {
    auto p = parse_params(params_text);
    if (!p) throw CLI::ValidationError("--params", "expected a,b,c,e,m");
    MonomialOrder ord = parse_order(order_text, 3);
    VarTable vt = VarTable::standard(3);
    if (!ord.satisfies_above(2, {0, 1}))
        std::cerr << "note: the order does not place z above x and y; the closed form does not "
                     "apply\n";
    InstanceContext ctx(*p);
    bool gb = is_groebner(ctx.formula_gens, ord);
    json j{{"id", p->id()},
           {"case", case_name(p->tag)},
           {"order", ord.describe(vt.names)},
           {"is_groebner", gb}};
    if (gb) {
        json in = json::array();
        for (const Monomial& m : initial_ideal(ctx.formula_gens, ord))
            in.push_back(to_string(m, vt));
        j["initial_ideal"] = in;
        if (p->tag != Binomial3Case::VarSplit && ord.satisfies_above(2, {0, 1})) {
            bool match = initial_ideal(ctx.formula_gens, ord) == initial_ideal_formula(*p);
            j["matches_closed_form"] = match;
        }
    }
    if (as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "generators of " << p->id() << " under " << ord.describe(vt.names) << ": "
                  << (gb ? "Groebner basis" : "NOT a Groebner basis") << "\n";
        if (gb) {
            std::cout << "initial ideal:";
            for (const Monomial& m : initial_ideal(ctx.formula_gens, ord))
                std::cout << " " << to_string(m, vt);
            std::cout << "\n";
            if (j.contains("matches_closed_form"))
                std::cout << "matches closed form: "
                          << (j["matches_closed_form"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
    return gb ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Artinian Gorenstein algebras given by Macaulay dual "
                 "generators"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    InputSpec input;
    std::uint64_t seed = 20240801;

    auto* ann = app.add_subcommand("ann", "annihilator report: h-vector, minimal generators, CI");
    ann->add_option("--params", input.params_text, "a,b,c,e,m of X^aY^bZ^c(Z^n - X^eY^m)");
    ann->add_option("--dual", input.dual_text, "dual generator expression");
    ann->add_option("--nvars", input.nvars, "ambient variable count (default: inferred, >= 3)");

    auto* lef = app.add_subcommand("lefschetz", "weak/strong Lefschetz verdict");
    std::string property = "wlp", method = "both";
    lef->add_option("--params", input.params_text, "a,b,c,e,m");
    lef->add_option("--dual", input.dual_text, "dual generator expression");
    lef->add_option("--nvars", input.nvars, "ambient variable count (default: inferred, >= 3)");
    lef->add_option("--property", property, "wlp or slp")->check(CLI::IsMember({"wlp", "slp"}));
    lef->add_option("--method", method, "rank, hessian or both")
        ->check(CLI::IsMember({"rank", "hessian", "both"}));
    lef->add_option("--seed", seed, "random seed for sampled forms");

    auto* sweep = app.add_subcommand("sweep", "verification sweep over the parameter grid");
    SweepConfig cfg;
    std::string checks_text;
    bool quiet = false;
    sweep->add_option("--abc-max", cfg.abc_max, "upper bound for a, b, c (default 3)");
    sweep->add_option("--em-max", cfg.em_max, "upper bound for e, m (default 2)");
    sweep->add_option("--checks", checks_text,
                      "comma list from ann,gb,pfaffian,betti,slp,doubling,hilbert");
    sweep->add_option("--seed", cfg.seed, "random seed");
    sweep->add_option("--jobs", cfg.jobs, "worker threads");
    sweep->add_option("--max-seconds", cfg.max_seconds, "per-instance budget");
    sweep->add_option("--corrupt", cfg.corrupt_id,
                      "self-test fixture: corrupt this instance's generators");
    std::string out_path;
    sweep->add_option("--out", out_path, "write JSON lines to a file instead of stdout");
    sweep->add_flag("--quiet", quiet, "suppress progress lines");

    auto* codim = app.add_subcommand("codimn", "codimension-n WLP failure reproduction");
    int from = 4, to = 4;
    double budget = 300.0;
    codim->add_option("--from", from, "first n (>= 4)");
    codim->add_option("--to", to, "last n");
    codim->add_option("--max-seconds", budget, "per-n budget (default 300)");
    codim->add_option("--seed", seed, "random seed");

    auto* dbl = app.add_subcommand("doubling", "doubling certificate for a grid point");
    std::string dbl_params;
    dbl->add_option("--params", dbl_params, "a,b,c,e,m")->required();

    auto* gb = app.add_subcommand("gb", "Groebner report for the closed-form generators");
    std::string gb_params, order_text = "grevlex:z,x,y";
    gb->add_option("--params", gb_params, "a,b,c,e,m")->required();
    gb->add_option("--order", order_text, "{grevlex,lex}:{priority}, e.g. grevlex:z,x,y");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ann->parsed()) {
            if (input.params_text.empty() == input.dual_text.empty())
                throw CLI::ValidationError("ann", "exactly one of --params/--dual is required");
            return cmd_ann(input, as_json);
        }
        if (lef->parsed()) {
            if (input.params_text.empty() == input.dual_text.empty())
                throw CLI::ValidationError("lefschetz",
                                           "exactly one of --params/--dual is required");
            return cmd_lefschetz(input, property, method, seed, as_json);
        }
        if (sweep->parsed()) {
            if (!checks_text.empty()) {
                cfg.checks.clear();
                std::stringstream ss(checks_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) cfg.checks.push_back(tok);
            }
            return cmd_sweep(cfg, out_path, quiet);
        }
        if (codim->parsed()) {
            if (to < from) to = from;
            return cmd_codimn(from, to, budget, seed, as_json);
        }
        if (dbl->parsed()) return cmd_doubling(dbl_params, as_json);
        if (gb->parsed()) return cmd_gb(gb_params, order_text, as_json);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
