#include "macdual/sweep.hpp"

#include "macdual/groebner.hpp"
#include "macdual/lefschetz.hpp"
#include "macdual/poly_io.hpp"
#include "macdual/structure.hpp"

#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace macdual {

namespace {

int expected_generator_count(Binomial3Case tag) {
    switch (tag) {
        case Binomial3Case::VarSplit:
        case Binomial3Case::CiP: return 3;
        case Binomial3Case::Type3: return 7;
        case Binomial3Case::R0:
        case Binomial3Case::Other: return 5;
    }
    return -1;
}

std::vector<MonomialOrder> z_first_orders() {
    return {MonomialOrder::grevlex({2, 0, 1}), MonomialOrder::grevlex({2, 1, 0}),
            MonomialOrder::lex({2, 0, 1}), MonomialOrder::lex({2, 1, 0})};
}

} // namespace

InstanceContext::InstanceContext(const Binomial3Params& p, bool corrupt)
    : params(p), algebra(macdual::dual_generator(p)), formula_gens(ann_generators(p)) {
    if (corrupt && !formula_gens.empty()) {
        // harness self-test: shift the first generator by one variable so the
        // ideals no longer match
        formula_gens[0] = formula_gens[0].mul_monomial(Monomial::var(0, 3));
    }
}

CheckResult check_ann(const InstanceContext& ctx) {
    const auto& p = ctx.params;
    int expected = expected_generator_count(p.tag);
    if (static_cast<int>(ctx.formula_gens.size()) != expected)
        return CheckResult::fail("formula generator count " +
                                 std::to_string(ctx.formula_gens.size()) + " != expected " +
                                 std::to_string(expected));
    if (static_cast<int>(ctx.algebra.min_generators().size()) != expected)
        return CheckResult::fail("oracle generator count " +
                                 std::to_string(ctx.algebra.min_generators().size()) +
                                 " != expected " + std::to_string(expected));
    std::vector<Poly> oracle;
    for (auto& [d, g] : ctx.algebra.min_generators()) oracle.push_back(g);
    GradedIdeal I(3, ctx.formula_gens), J(3, oracle);
    if (!ideals_equal(I, J)) {
        // locate a witness for the report
        for (const Poly& g : ctx.formula_gens)
            if (!J.contains(g))
                return CheckResult::fail("formula generator " + to_string(g) +
                                         " is not in the oracle annihilator");
        for (const Poly& g : oracle)
            if (!I.contains(g))
                return CheckResult::fail("oracle generator " + to_string(g) +
                                         " is not in the formula ideal");
    }
    if (I.quotient_hf(p.d) != 1 || I.quotient_hf(p.d + 1) != 0)
        return CheckResult::fail("socle degree of the formula ideal is not " +
                                 std::to_string(p.d));
    bool ci = is_complete_intersection(p);
    if (ci != (expected == 3)) return CheckResult::fail("CI predicate disagrees with count");
    return CheckResult::pass("ideal equality, counts, socle degree " + std::to_string(p.d));
}

CheckResult check_gb(const InstanceContext& ctx) {
    const auto& p = ctx.params;
    auto grev = MonomialOrder::grevlex({2, 0, 1});
    if (p.tag == Binomial3Case::VarSplit) {
        // No closed-form list in the split case; check completion
        // consistency with the two-variable subring instead.
        // Pairs skipped above the d+1 cap lie beyond the socle, where the
        // ideal is all of R; initial_ideal re-verifies the Buchberger
        // criterion on the completed basis.
        auto full = buchberger(ctx.formula_gens, grev, p.d + 1);
        auto in_full = initial_ideal(full.basis, grev);
        std::vector<Poly> tail(ctx.formula_gens.begin() + 1, ctx.formula_gens.end());
        auto tail_res = buchberger(tail, grev, p.d + 1);
        std::vector<Monomial> expected = initial_ideal(tail_res.basis, grev);
        expected.push_back(leading_monomial(grev, ctx.formula_gens[0]));
        if (in_full != minimalize_monomials(std::move(expected)))
            return CheckResult::fail("split-case initial ideal does not decompose");
        return CheckResult::pass("split case: completion agrees with the subring decomposition");
    }
    std::vector<Monomial> closed = initial_ideal_formula(p);
    for (const auto& ord : z_first_orders()) {
        if (!is_groebner(ctx.formula_gens, ord))
            return CheckResult::fail("generators fail the Buchberger criterion under " +
                                     ord.describe(VarTable::standard(3).names));
        if (initial_ideal(ctx.formula_gens, ord) != closed)
            return CheckResult::fail("initial ideal differs from the closed form under " +
                                     ord.describe(VarTable::standard(3).names));
    }
    auto res = buchberger(ctx.formula_gens, grev, p.d + 1);
    if (initial_ideal(res.basis, grev) != closed)
        return CheckResult::fail("from-scratch completion yields a different initial ideal");
    return CheckResult::pass("Groebner under 4 z-first orders; two-path initial ideal");
}

CheckResult check_pfaffian(const InstanceContext& ctx) {
    if (is_complete_intersection(ctx.params))
        return CheckResult::pass("complete intersection: Koszul resolution, no skew presentation");
    SkewPolyMatrix M = pfaffian_matrix(ctx.params);
    auto pf = M.sub_pfaffians();
    for (const Poly& f : pf)
        if (f.is_zero()) return CheckResult::fail("a sub-Pfaffian vanishes");
    GradedIdeal from_pf(3, pf), from_gens(3, ctx.formula_gens);
    if (!ideals_equal(from_pf, from_gens))
        return CheckResult::fail("sub-Pfaffians generate a different ideal");
    return CheckResult::pass("skew presentation of size " + std::to_string(M.size()));
}

CheckResult check_betti(const InstanceContext& ctx) {
    const auto& p = ctx.params;
    BettiTable t = betti_table(p);
    if (t.beta(0, 0) != 1 || t.total(0) != 1) return CheckResult::fail("beta_0 is not R");
    if (t.beta(3, p.d + 3) != 1 || t.total(3) != 1)
        return CheckResult::fail("beta_3 is not R(-d-3)");
    if (!t.self_dual(p.d)) return CheckResult::fail("beta_1/beta_2 duality fails");
    if (t.total(1) != t.total(2)) return CheckResult::fail("beta_1 and beta_2 totals differ");
    std::multiset<int> oracle_degs;
    for (auto& [d, g] : ctx.algebra.min_generators()) oracle_degs.insert(d);
    if (t.degrees(1) != oracle_degs)
        return CheckResult::fail("beta_1 degrees differ from the oracle generator degrees");
    if (t.euler_characteristic() != ctx.algebra.hilbert_fn())
        return CheckResult::fail("Euler characteristic does not reproduce the h-vector");
    return CheckResult::pass("duality, degrees and Euler characteristic");
}

CheckResult check_slp(const InstanceContext& ctx, std::uint64_t seed) {
    LefschetzOptions opts;
    opts.seed = seed;
    LefschetzVerdict v = slp_verdict(ctx.algebra, opts);
    if (v.holds != Verdict::Holds) {
        std::ostringstream os;
        os << "SLP not certified: " << v.certificate;
        for (const MapRank& mr : v.failures)
            os << " [" << mr.i << "->" << mr.i + mr.k << ": " << mr.best_rank << "/"
               << mr.required << "]";
        return v.holds == Verdict::Fails ? CheckResult::fail(os.str())
                                         : CheckResult::indeterminate(os.str());
    }
    // Hessian cross-certification at the witness point
    const int d = ctx.algebra.socle_degree();
    for (int t = 0; 2 * t <= d; ++t) {
        HessianMatrix H = hessian(ctx.algebra, t);
        PolyMat C = hessian_criterion_matrix(H, d);
        if (C.evaluate(v.witness->coeffs).determinant() == 0)
            return CheckResult::fail("order-" + std::to_string(t) +
                                     " Hessian vanishes at the Lefschetz witness");
    }
    return CheckResult::pass("witnessed; Hessians of all orders nonzero at the witness");
}

CheckResult check_doubling(const InstanceContext& ctx) {
    DoublingCertificate cert = doubling_verify(ctx.params);
    switch (cert.status) {
        case DoublingCertificate::Status::Verified: return CheckResult::pass(cert.detail);
        case DoublingCertificate::Status::NotBlockCertified:
            return CheckResult::indeterminate(cert.detail);
        case DoublingCertificate::Status::Failed: return CheckResult::fail(cert.detail);
    }
    return CheckResult::fail("unreachable");
}

CheckResult check_hilbert(const InstanceContext& ctx, std::uint64_t seed) {
    const auto& p = ctx.params;
    std::ostringstream note;
    // connected-sum identity whenever the decomposition hypotheses hold
    Monomial g({p.a, p.b, p.c}), m1({0, 0, p.n}), m2({p.e, p.m, 0});
    bool applicable = !m1.divides(g) && !m2.divides(g);
    if (applicable) {
        ConnectedSumSpec spec(g, m1, m2);
        if (connected_sum_hilbert(spec) != ctx.algebra.hilbert_fn())
            return CheckResult::fail("connected-sum series differs from the oracle h-vector");
        note << "connected-sum identity; ";
    }
    // type-two closed form against direct monomial counting
    if (p.a + 1 > p.q * p.e && p.b + 1 > p.q * p.m) {
        HilbertSeries closed = hf_of_U(p.a, p.b, p.c, p.e, p.m);
        if (closed != monomial_quotient_hilbert(u_ideal_generators(p.a, p.b, p.c, p.e, p.m), 3))
            return CheckResult::fail("type-two closed form differs from the monomial count");
        if (!closed.symmetric() || !closed.unimodal() ||
            closed.top_degree() != p.a + p.b + p.c + p.e + p.m)
            return CheckResult::fail("type-two closed form is not symmetric unimodal of the "
                                     "stated top degree");
        note << "type-two closed form; ";
    }
    // small-gcd consequence: deg g below the middle forces the weak property
    if (p.a + p.b + p.c < (p.d - 1) / 2) {
        LefschetzOptions opts;
        opts.seed = seed;
        LefschetzVerdict w = wlp_verdict(ctx.algebra, opts);
        if (w.holds != Verdict::Holds)
            return CheckResult::fail("WLP expected from the small-gcd decomposition");
        note << "small-gcd WLP; ";
    }
    std::string detail = note.str();
    if (detail.empty()) detail = "no Hilbert identity applicable at this point";
    return CheckResult::pass(detail);
}

bool InstanceReport::all_pass() const {
    for (auto& [name, res] : checks)
        if (!res.ok()) return false;
    return true;
}

InstanceReport run_instance_checks(const Binomial3Params& p, const SweepConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    InstanceReport report;
    report.id = p.id();
    report.params = p;
    report.case_tag = case_name(p.tag);
    InstanceContext ctx(p, cfg.corrupt_id == p.id());
    for (const std::string& name : cfg.checks) {
        if (cfg.max_seconds > 0 && elapsed() > cfg.max_seconds) {
            report.checks.emplace_back(name, CheckResult::indeterminate("budget"));
            continue;
        }
        CheckResult res;
        try {
            if (name == "ann") res = check_ann(ctx);
            else if (name == "gb") res = check_gb(ctx);
            else if (name == "pfaffian") res = check_pfaffian(ctx);
            else if (name == "betti") res = check_betti(ctx);
            else if (name == "slp") res = check_slp(ctx, cfg.seed);
            else if (name == "doubling") res = check_doubling(ctx);
            else if (name == "hilbert") res = check_hilbert(ctx, cfg.seed);
            else res = CheckResult::fail("unknown check '" + name + "'");
        } catch (const std::exception& e) {
            res = CheckResult::fail(std::string("exception: ") + e.what());
        }
        report.checks.emplace_back(name, std::move(res));
    }
    report.ms = static_cast<long>(elapsed() * 1000.0);
    return report;
}

std::vector<InstanceReport> run_sweep(
    const SweepConfig& cfg, const std::function<void(const InstanceReport&)>& on_report) {
    std::vector<Binomial3Params> grid = sweep_grid(cfg.abc_max, cfg.em_max);
    std::vector<InstanceReport> reports(grid.size());
    std::vector<char> done(grid.size(), 0);

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < grid.size(); ++i) {
            reports[i] = run_instance_checks(grid[i], cfg);
            if (on_report) on_report(reports[i]);
        }
        return reports;
    }

    std::mutex mtx;
    size_t next = 0, emitted = 0;
    auto worker = [&] {
        while (true) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (next >= grid.size()) return;
                idx = next++;
            }
            InstanceReport rep = run_instance_checks(grid[idx], cfg);
            std::lock_guard<std::mutex> lock(mtx);
            reports[idx] = std::move(rep);
            done[idx] = 1;
            // emit in grid order
            while (emitted < grid.size() && done[emitted]) {
                if (on_report) on_report(reports[emitted]);
                ++emitted;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

} // namespace macdual
