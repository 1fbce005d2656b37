#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seiffert/ratio.hpp"
#include "seiffert/sweep.hpp"

namespace seiffert::sharp {

/// (1/2)(1 + sqrt(12/pi - 3)), the largest alpha with C(alpha-blend) < T.
double lambda_closed();
/// Root in (1/2, 1) of pi - 3/(p^2 - p + 1), by bisection to adjacent doubles.
double lambda_numeric();
inline double mu_closed() { return 1.0; }
/// 4/pi - 1 and 1/3: the range ends of (T - A)/(C - A).
double alpha1_closed();
inline double beta1_closed() { return 1.0 / 3.0; }

// Previously known sharp constants, used for regression only.
double prior_alpha_root_square();  // (4 - pi) / ((sqrt 2 - 1) pi)
inline double prior_beta_root_square() { return 2.0 / 3.0; }
double prior_alpha_contra_blend();  // (1/2)(1 + sqrt(4/pi - 1))
double prior_beta_contra_blend();   // (3 + sqrt 3)/6

inline constexpr double kConsistencyTolerance = 1e-12;
inline constexpr double kConstantGapTolerance = 1e-10;

struct VerifyOptions {
    sweep::SamplingConfig sampling;
    /// Positive values move the lower (alpha) constant past its optimum,
    /// negative values move it inside.
    double alpha_shift = 0.0;
    /// Positive values move the upper (beta) constant past its optimum.
    double beta_shift = 0.0;
    sweep::Backend backend = sweep::Backend::openmp;
};

struct ViolationWitness {
    double ratio = 0.0;
    std::string side;  // "left" (lower bound) or "right" (upper bound)
    double slack = 0.0;
};

struct SuiteReport {
    std::string suite;
    bool pass = false;
    std::size_t n_samples = 0;
    double lower_constant = 0.0;
    double upper_constant = 0.0;
    double min_slack_left = 0.0;
    double ratio_left = 0.0;
    double min_slack_right = 0.0;
    double ratio_right = 0.0;
    /// Constant values that would make the tightest sample an equality.
    double tight_inf = 0.0;
    double tight_sup = 0.0;
    /// Extremes of (T - A)/(C - A) over the samples.
    double ratio_inf = 0.0;
    double ratio_sup = 0.0;
    std::size_t violations = 0;
    double max_consistency_error = 0.0;
    std::optional<ViolationWitness> witness;
};

SuiteReport summarize(const sweep::SuiteSpec& spec, std::span<const double> ratios, const sweep::SweepResult& result);
SuiteReport run_suite(const sweep::SuiteSpec& spec, const VerifyOptions& options);

/// C(lambda-blend) < T < C over log-uniform ratios plus boundary points.
SuiteReport theorem_1_1_verify(const VerifyOptions& options = {});
/// 4/pi - 1 < (T - A)/(C - A) < 1/3 over the same ratios.
SuiteReport theorem_1_2_verify(const VerifyOptions& options = {});
/// The S/A and contra-harmonic blend bounds at their published constants.
std::vector<SuiteReport> prior_bounds_regression(const VerifyOptions& options = {});
/// G < A < centroidal < S < C and A < T < S.
SuiteReport ordering_chain_verify(const VerifyOptions& options = {});

struct RatioLimits {
    double inf = 0.0;
    double t_at_inf = 0.0;
    double sup = 0.0;
    double t_at_sup = 0.0;
    bool strictly_decreasing = false;
    std::size_t evaluations = 0;
};

/// r(t) on `points` equally spaced t in [t_lo, t_hi].
RatioLimits ratio_limits_scan(std::size_t points, double t_lo = 1e-7, double t_hi = 1.0 - 1e-7,
                              sweep::Backend backend = sweep::Backend::openmp);

struct SharpConstantReport {
    std::string name;
    double closed_form = 0.0;
    double discovered = 0.0;
    double abs_gap = 0.0;
    /// Perturbation past the optimum used for the witness.
    double margin = 0.0;
    /// a/b violating the bound with the perturbed constant.
    std::optional<double> witness_ratio;
    /// Slack of the perturbed bound at the witness (negative: violated).
    double witness_slack = 0.0;
};

/// lambda, mu, alpha1, beta1 re-derived numerically:
/// lambda by root finding, the others as limits of the tight constant along
/// t -> 0 or t -> 1; each with a witness for the perturbed constant.
std::vector<SharpConstantReport> discover_constants();

}  // namespace seiffert::sharp
