#ifndef MACDUAL_SWEEP_HPP
#define MACDUAL_SWEEP_HPP

#include "macdual/apolar.hpp"
#include "macdual/binomial3.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace macdual {

struct CheckResult {
    std::string status; // pass | fail | indeterminate
    std::string detail;

    static CheckResult pass(std::string d = "") { return {"pass", std::move(d)}; }
    static CheckResult fail(std::string d) { return {"fail", std::move(d)}; }
    static CheckResult indeterminate(std::string d) { return {"indeterminate", std::move(d)}; }
    bool ok() const { return status == "pass"; }
};

// Shared per-instance state: the oracle algebra and the closed-form
// generators (optionally corrupted, as a harness self-test fixture).
struct InstanceContext {
    Binomial3Params params;
    ApolarAlgebra algebra;
    std::vector<Poly> formula_gens;

    explicit InstanceContext(const Binomial3Params& p, bool corrupt = false);
};

// Closed-form generators against the brute-force annihilator: graded ideal
// equality, generator counts, socle degree.
CheckResult check_ann(const InstanceContext& ctx);

// Groebner property of the closed-form generators under z-first orders and
// two-path agreement of the initial ideal.
CheckResult check_gb(const InstanceContext& ctx);

// Skew presentation: sub-Pfaffians generate the annihilator.
CheckResult check_pfaffian(const InstanceContext& ctx);

// Betti table: self-duality, Euler characteristic, first-syzygy degrees.
CheckResult check_betti(const InstanceContext& ctx);

// Strong Lefschetz verdict with witness and Hessian cross-certification.
CheckResult check_slp(const InstanceContext& ctx, std::uint64_t seed);

// Doubling certificate.
CheckResult check_doubling(const InstanceContext& ctx);

// Hilbert identities: connected-sum formula, the type-two closed form, and
// the small-gcd weak Lefschetz consequence.
CheckResult check_hilbert(const InstanceContext& ctx, std::uint64_t seed);

struct SweepConfig {
    int abc_max = 3;
    int em_max = 2;
    std::vector<std::string> checks = {"ann", "gb", "pfaffian", "betti",
                                       "slp", "doubling", "hilbert"};
    std::uint64_t seed = 20240801;
    int jobs = 1;
    double max_seconds = 0; // per instance; 0 = unlimited
    std::string corrupt_id; // harness self-test fixture
};

struct InstanceReport {
    std::string id;
    Binomial3Params params;
    std::string case_tag;
    std::vector<std::pair<std::string, CheckResult>> checks;
    long ms = 0;

    bool all_pass() const;
};

InstanceReport run_instance_checks(const Binomial3Params& p, const SweepConfig& cfg);

// Runs the grid on a worker pool; reports come back in grid order.
std::vector<InstanceReport> run_sweep(
    const SweepConfig& cfg,
    const std::function<void(const InstanceReport&)>& on_report = nullptr);

} // namespace macdual

#endif
