#include "seiffert/sharp_constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "seiffert/aux_chain.hpp"
#include "seiffert/means.hpp"

namespace seiffert::sharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double value_or_nan(const sweep::Extremum& e) { return e.index == sweep::npos ? kNaN : e.value; }

double ratio_at(std::span<const double> ratios, const sweep::Extremum& e) {
    return e.index == sweep::npos ? kNaN : ratios[e.index];
}

double ratio_from_t(double t) { return (1.0 + t) / (1.0 - t); }

}  // namespace

double lambda_closed() { return 0.5 * (1.0 + std::sqrt(12.0 / kPi - 3.0)); }

double lambda_numeric() {
    double lo = 0.5;
    double hi = 1.0;
    if (!(chain::f_limit_at_infinity(lo) < 0.0 && chain::f_limit_at_infinity(hi) > 0.0))
        throw chain::SearchFailure("lambda_numeric: limit does not change sign on (1/2, 1)");
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (chain::f_limit_at_infinity(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return std::abs(chain::f_limit_at_infinity(lo)) <= std::abs(chain::f_limit_at_infinity(hi)) ? lo : hi;
}

double alpha1_closed() { return 4.0 / kPi - 1.0; }

double prior_alpha_root_square() { return (4.0 - kPi) / ((std::sqrt(2.0) - 1.0) * kPi); }
double prior_alpha_contra_blend() { return 0.5 * (1.0 + std::sqrt(4.0 / kPi - 1.0)); }
double prior_beta_contra_blend() { return (3.0 + std::sqrt(3.0)) / 6.0; }

SuiteReport summarize(const sweep::SuiteSpec& spec, std::span<const double> ratios, const sweep::SweepResult& result) {
    SuiteReport report;
    report.suite = std::string(sweep::suite_name(spec.suite));
    report.n_samples = result.n;
    report.lower_constant = spec.lower_constant;
    report.upper_constant = spec.upper_constant;
    report.min_slack_left = value_or_nan(result.lower.min_slack);
    report.ratio_left = ratio_at(ratios, result.lower.min_slack);
    report.min_slack_right = value_or_nan(result.upper.min_slack);
    report.ratio_right = ratio_at(ratios, result.upper.min_slack);
    report.tight_inf = value_or_nan(result.tight_min);
    report.tight_sup = value_or_nan(result.tight_max);
    report.ratio_inf = value_or_nan(result.ratio_min);
    report.ratio_sup = value_or_nan(result.ratio_max);
    report.violations = result.lower.violations + result.upper.violations;
    report.max_consistency_error = result.max_consistency_error;

    const std::size_t first = std::min(result.lower.first_violation, result.upper.first_violation);
    if (first != sweep::npos) {
        const bool left = result.lower.first_violation == first;
        const sweep::SampleOutcome at = sweep::evaluate_sample(spec, ratios[first]);
        report.witness = ViolationWitness{ratios[first], left ? "left" : "right", left ? at.lower_slack : at.upper_slack};
    }
    report.pass = report.violations == 0 && report.max_consistency_error <= kConsistencyTolerance;
    return report;
}

SuiteReport run_suite(const sweep::SuiteSpec& spec, const VerifyOptions& options) {
    const std::vector<double> ratios = sweep::sample_ratios(options.sampling);
    return summarize(spec, ratios, sweep::run(spec, ratios, options.backend));
}

SuiteReport theorem_1_1_verify(const VerifyOptions& options) {
    const double alpha = lambda_closed() + options.alpha_shift;
    const double beta = mu_closed() - options.beta_shift;
    return run_suite(sweep::theorem_1_1(alpha, beta), options);
}

SuiteReport theorem_1_2_verify(const VerifyOptions& options) {
    const double alpha1 = alpha1_closed() + options.alpha_shift;
    const double beta1 = beta1_closed() - options.beta_shift;
    return run_suite(sweep::theorem_1_2(alpha1, beta1), options);
}

std::vector<SuiteReport> prior_bounds_regression(const VerifyOptions& options) {
    const std::vector<double> ratios = sweep::sample_ratios(options.sampling);
    std::vector<SuiteReport> reports;
    for (const sweep::SuiteSpec& spec :
         {sweep::prior_root_square(prior_alpha_root_square(), prior_beta_root_square()),
          sweep::prior_contra_blend_sharp()}) {
        reports.push_back(summarize(spec, ratios, sweep::run(spec, ratios, options.backend)));
    }
    return reports;
}

SuiteReport ordering_chain_verify(const VerifyOptions& options) {
    return run_suite(sweep::ordering_chain(), options);
}

RatioLimits ratio_limits_scan(std::size_t points, double t_lo, double t_hi, sweep::Backend backend) {
    if (!(t_lo > 0.0 && t_hi < 1.0 && t_lo < t_hi)) throw std::domain_error("ratio_limits_scan: require 0 < t_lo < t_hi < 1");
    const std::vector<double> grid = sweep::uniform_grid(t_lo, t_hi, points);
    const sweep::RatioScan scan = sweep::scan_ratio(grid, backend);
    return RatioLimits{scan.inf.value, grid[scan.inf.index], scan.sup.value, grid[scan.sup.index],
                       scan.monotonicity_breaks == 0, scan.n};
}

std::vector<SharpConstantReport> discover_constants() {
    std::vector<SharpConstantReport> out;

    {
        SharpConstantReport rep;
        rep.name = "lambda";
        rep.closed_form = lambda_closed();
        rep.discovered = lambda_numeric();
        rep.margin = 1e-4;
        const chain::Witness w = chain::counterexample_witness(rep.closed_form + rep.margin, chain::WitnessSide::above_lambda);
        rep.witness_ratio = w.ratio;
        rep.witness_slack = (w.seiffert - w.blend_mean) / w.seiffert;
        out.push_back(rep);
    }

    // Along t -> 0 the blend weight making the centroidal bound tight is
    // (1 + sqrt(3 r))/2 -> 1, and r itself -> 1/3; along t -> 1, r -> 4/pi - 1.
    double r_near_zero = -std::numeric_limits<double>::infinity();
    double r_near_one = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 12; ++k) {
        const double t = std::pow(10.0, -k);
        r_near_zero = std::max(r_near_zero, ratio_TA_CA(t));
        r_near_one = std::min(r_near_one, ratio_TA_CA(1.0 - t));
    }

    {
        SharpConstantReport rep;
        rep.name = "mu";
        rep.closed_form = mu_closed();
        rep.discovered = 0.5 * (1.0 + std::sqrt(3.0 * r_near_zero));
        rep.margin = 1e-4;
        const chain::Witness w = chain::counterexample_witness(rep.closed_form - rep.margin, chain::WitnessSide::below_one);
        rep.witness_ratio = w.ratio;
        rep.witness_slack = (w.blend_mean - w.seiffert) / w.seiffert;
        out.push_back(rep);
    }

    {
        SharpConstantReport rep;
        rep.name = "alpha1";
        rep.closed_form = alpha1_closed();
        rep.discovered = r_near_one;
        rep.margin = 1e-6;
        const double bound = rep.closed_form + rep.margin;
        for (int k = 1; k <= 12; ++k) {
            const double t = 1.0 - std::pow(10.0, -k);
            const double r = ratio_TA_CA(t);
            if (r < bound) {
                rep.witness_ratio = ratio_from_t(t);
                rep.witness_slack = r - bound;
                break;
            }
        }
        out.push_back(rep);
    }

    {
        SharpConstantReport rep;
        rep.name = "beta1";
        rep.closed_form = beta1_closed();
        rep.discovered = r_near_zero;
        rep.margin = 1e-6;
        const double bound = rep.closed_form - rep.margin;
        for (int k = 1; k <= 12; ++k) {
            const double t = std::pow(10.0, -k);
            const double r = ratio_TA_CA(t);
            if (r > bound) {
                rep.witness_ratio = ratio_from_t(t);
                rep.witness_slack = bound - r;
                break;
            }
        }
        out.push_back(rep);
    }

    for (auto& rep : out) rep.abs_gap = std::abs(rep.closed_form - rep.discovered);
    return out;
}

}  // namespace seiffert::sharp
