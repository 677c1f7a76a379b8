#include "macdual/codimn.hpp"

#include <chrono>
#include <random>

namespace macdual {

Poly codimn_dual_generator(int n) {
    if (n < 4) throw std::invalid_argument("codimn_dual_generator: need n >= 4");
    std::vector<int> e1(n, 0), e2(n, 0);
    e1[0] = n - 1; // X1^{n-2} * X1
    e1[1] = 1;
    e1[2] = 1;
    e2[0] = 1;
    e2[1] = n - 1;
    e2[3] = 1;
    for (int v = 4; v < n; ++v) e1[v] = e2[v] = 1;
    Poly F(n);
    F.add_term(Monomial(e1), 1);
    F.add_term(Monomial(e2), -1);
    return F;
}

namespace {

// Ansatz schedule for the family: kernel entries live on the standard
// monomials containing X3 or X4, with the X3 side divisible by a2^{n-2} and
// the X4 side by a1^{n-2}, and coefficients free of a3, a4.
std::vector<AnsatzSpec> family_schedule(const GradedQuotient& Q, int n, int t) {
    const auto& basis = Q.basis(t);
    std::vector<int> support;
    std::vector<Monomial> factors;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i][2] > 0) {
            support.push_back(static_cast<int>(i));
            factors.push_back(Monomial::var(1, n, n - 2)); // a2^{n-2}
        } else if (basis[i][3] > 0) {
            support.push_back(static_cast<int>(i));
            factors.push_back(Monomial::var(0, n, n - 2)); // a1^{n-2}
        }
    }
    std::vector<int> cvars{0, 1};
    for (int v = 4; v < n; ++v) cvars.push_back(v);

    std::vector<AnsatzSpec> schedule;
    for (int deg : {2 * n - 5, 2 * n - 4, 2 * n - 6}) {
        if (deg < n - 2) continue;
        AnsatzSpec spec;
        spec.degree = deg;
        spec.support = support;
        spec.factors = factors;
        spec.coeff_vars = cvars;
        schedule.push_back(std::move(spec));
    }
    // unfactored fallback on the same support (affordable for small n)
    if (n <= 5) {
        for (int deg = t + 1; deg <= 2 * n - 4; ++deg) {
            AnsatzSpec spec;
            spec.degree = deg;
            spec.support = support;
            spec.coeff_vars = cvars;
            schedule.push_back(std::move(spec));
        }
    }
    return schedule;
}

} // namespace

CodimnReport codimn_wlp_failure(int n, const LefschetzOptions& opts, double budget_seconds) {
    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    CodimnReport report;
    report.n = n;
    ApolarAlgebra A(codimn_dual_generator(n));
    const GradedQuotient& Q = A.quotient();
    const int d = A.socle_degree(); // 2n - 3, odd
    const int t = (d - 1) / 2;
    report.h_vector = A.h_vector();
    report.mid_degree = t;
    report.required_rank = std::min(A.h(t), A.h(t + 1));

    // sampled ranks: the all-ones form plus random forms all fall short
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> dist(opts.coeff_min, opts.coeff_max);
    std::vector<LinearForm> forms{LinearForm::all_ones(n)};
    for (int i = 0; i < opts.random_forms; ++i) {
        LinearForm f;
        for (int v = 0; v < n; ++v) f.coeffs.push_back(Rat(dist(rng)));
        forms.push_back(std::move(f));
    }
    for (const LinearForm& f : forms)
        report.best_sampled_rank = std::max(report.best_sampled_rank, mult_rank(Q, f, t, 1));

    if (n == 4) {
        // the 7x7 Hessian admits a symbolic determinant
        HessianCertificate cert = hessian_det_vanishes(A, t, opts.hessian_trials, opts.seed);
        if (cert.vanishes) {
            report.failure_certified = true;
            report.method = "hessian";
            report.seconds = elapsed();
            return report;
        }
    }

    PolyMat M = symbolic_mult_matrix(Q, t);
    for (const AnsatzSpec& spec : family_schedule(Q, n, t)) {
        if (elapsed() > budget_seconds) break;
        auto u = polymat_kernel_witness(M, spec);
        if (u && verify_kernel_witness(M, *u)) {
            report.failure_certified = true;
            report.method = "kernel-witness";
            report.witness = *u;
            break;
        }
    }
    report.seconds = elapsed();
    return report;
}

} // namespace macdual
