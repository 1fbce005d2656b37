#include "seiffert/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "seiffert/means.hpp"
#include "seiffert/ratio.hpp"
#include "sweep_detail.hpp"

namespace seiffert::sweep {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

void accumulate_side(SideStats& side, double slack, std::size_t index) {
    detail::offer_min(side.min_slack, slack, index);
    if (!(slack > 0.0)) {
        ++side.violations;
        side.first_violation = std::min(side.first_violation, index);
    }
}

void merge_side(SideStats& into, const SideStats& part) {
    detail::offer_min(into.min_slack, part.min_slack.value, part.min_slack.index);
    into.violations += part.violations;
    into.first_violation = std::min(into.first_violation, part.first_violation);
}

bool in_blend_domain(double p) { return p >= 0.5 && p <= 1.0; }

}  // namespace

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::theorem_1_1: return "thm1";
        case Suite::theorem_1_2: return "thm2";
        case Suite::prior_root_square: return "priors.root_square";
        case Suite::prior_contra_blend: return "priors.contra_blend";
        case Suite::ordering_chain: return "chain";
    }
    return "unknown";
}

SuiteSpec theorem_1_1(double alpha, double beta) {
    // r > (2 alpha - 1)^2 / 3  <=>  1/3 - r < 4 alpha (1 - alpha) / 3
    return {Suite::theorem_1_1, alpha, beta, 4.0 * alpha * (1.0 - alpha) / 3.0, 4.0 * beta * (1.0 - beta) / 3.0};
}

SuiteSpec theorem_1_2(double alpha1, double beta1) {
    return {Suite::theorem_1_2, alpha1, beta1, 1.0 / 3.0 - alpha1, 1.0 / 3.0 - beta1};
}

SuiteSpec prior_root_square(double alpha, double beta) {
    return {Suite::prior_root_square, alpha, beta, alpha, 2.0 - 3.0 * beta};
}

SuiteSpec prior_contra_blend(double alpha, double beta) {
    const double ka = (2.0 * alpha - 1.0) * (2.0 * alpha - 1.0);
    const double kb = (2.0 * beta - 1.0) * (2.0 * beta - 1.0);
    return {Suite::prior_contra_blend, alpha, beta, 1.0 / 3.0 - ka, 1.0 / 3.0 - kb};
}

SuiteSpec prior_contra_blend_sharp() {
    const double alpha = 0.5 * (1.0 + std::sqrt(4.0 / kPi - 1.0));
    const double beta = (3.0 + std::sqrt(3.0)) / 6.0;
    return {Suite::prior_contra_blend, alpha, beta, 4.0 / 3.0 - 4.0 / kPi, 0.0};
}

SuiteSpec ordering_chain() { return {Suite::ordering_chain}; }

SampleOutcome evaluate_sample(const SuiteSpec& spec, double x) {
    const double tau = (x - 1.0) / (x + 1.0);
    const double tau2 = tau * tau;
    const double mean_a = 0.5 * (x + 1.0);
    const auto [r, excess] = sharp::ratio_value(tau);
    const double w = std::sqrt(1.0 + tau2);

    const PositivePair pair(x, 1.0);
    const double t_form = mean_a * (1.0 + tau2 * r);

    SampleOutcome out;
    out.ratio = r;
    out.consistency = rel_err(seiffert_T(pair), t_form);
    auto check = [&](double direct, double form) { out.consistency = std::max(out.consistency, rel_err(direct, form)); };

    switch (spec.suite) {
        case Suite::theorem_1_1: {
            out.lower_slack = spec.lower_gap - excess;
            out.upper_slack = excess - spec.upper_gap;
            out.tight = 0.5 * (1.0 + std::sqrt(3.0 * r));
            for (double p : {spec.lower_constant, spec.upper_constant}) {
                if (!in_blend_domain(p)) continue;
                const double k = (2.0 * p - 1.0) * (2.0 * p - 1.0);
                check(blend_mean_J(p, pair), mean_a * (1.0 + k * tau2 / 3.0));
            }
            break;
        }
        case Suite::theorem_1_2: {
            out.lower_slack = spec.lower_gap - excess;
            out.upper_slack = excess - spec.upper_gap;
            out.tight = r;
            check(classical_mean(MeanKind::of(MeanTag::contra_harmonic), pair), mean_a * (1.0 + tau2));
            break;
        }
        case Suite::prior_contra_blend: {
            out.lower_slack = spec.lower_gap - excess;
            out.upper_slack = excess - spec.upper_gap;
            out.tight = 0.5 * (1.0 + std::sqrt(r));
            for (double p : {spec.lower_constant, spec.upper_constant}) {
                if (!(p >= 0.0 && p <= 1.0)) continue;
                const double k = (2.0 * p - 1.0) * (2.0 * p - 1.0);
                check(contra_harmonic_blend(p, pair), mean_a * (1.0 + k * tau2));
            }
            break;
        }
        case Suite::prior_root_square: {
            // (S - A)/(A tau^2) = 1/(1 + w); the upper side is rewritten as
            // (1/3 - r) - ((2 - 3 beta) + tau^2/(1 + w)) / (3 (1 + w)).
            out.lower_slack = r - spec.lower_gap / (1.0 + w);
            out.upper_slack = excess - (spec.upper_gap + tau2 / (1.0 + w)) / (3.0 * (1.0 + w));
            out.tight = r * (1.0 + w);
            check(classical_mean(MeanKind::of(MeanTag::root_square), pair), mean_a * w);
            break;
        }
        case Suite::ordering_chain: {
            const double one_minus_tau = 2.0 / (x + 1.0);
            const double g_over_a = std::sqrt(one_minus_tau * (1.0 + tau));
            const double gaps_lower[] = {
                1.0 / (1.0 + g_over_a),      // A - G
                1.0 / 3.0,                   // centroidal - A
                1.0 / (1.0 + w) - 1.0 / 3.0,  // S - centroidal
                w / (1.0 + w),               // C - S
            };
            const double gaps_upper[] = {
                r,                    // T - A
                1.0 / (1.0 + w) - r,  // S - T
            };
            out.lower_slack = *std::min_element(std::begin(gaps_lower), std::end(gaps_lower));
            out.upper_slack = *std::min_element(std::begin(gaps_upper), std::end(gaps_upper));
            check(classical_mean(MeanKind::of(MeanTag::geometric), pair), mean_a * g_over_a);
            check(classical_mean(MeanKind::of(MeanTag::arithmetic), pair), mean_a);
            check(centroidal_C(pair), mean_a * (1.0 + tau2 / 3.0));
            check(classical_mean(MeanKind::of(MeanTag::root_square), pair), mean_a * w);
            check(classical_mean(MeanKind::of(MeanTag::contra_harmonic), pair), mean_a * (1.0 + tau2));
            break;
        }
    }
    return out;
}

void accumulate(SweepResult& into, const SampleOutcome& sample, std::size_t index) {
    ++into.n;
    accumulate_side(into.lower, sample.lower_slack, index);
    accumulate_side(into.upper, sample.upper_slack, index);
    detail::offer_min(into.tight_min, sample.tight, index);
    detail::offer_max(into.tight_max, sample.tight, index);
    detail::offer_min(into.ratio_min, sample.ratio, index);
    detail::offer_max(into.ratio_max, sample.ratio, index);
    into.max_consistency_error = std::max(into.max_consistency_error, sample.consistency);
}

void merge(SweepResult& into, const SweepResult& part) {
    into.n += part.n;
    merge_side(into.lower, part.lower);
    merge_side(into.upper, part.upper);
    detail::offer_min(into.tight_min, part.tight_min.value, part.tight_min.index);
    detail::offer_max(into.tight_max, part.tight_max.value, part.tight_max.index);
    detail::offer_min(into.ratio_min, part.ratio_min.value, part.ratio_min.index);
    detail::offer_max(into.ratio_max, part.ratio_max.value, part.ratio_max.index);
    into.max_consistency_error = std::max(into.max_consistency_error, part.max_consistency_error);
}

SweepResult run(const SuiteSpec& spec, std::span<const double> ratios, Backend backend) {
    return backend == Backend::serial ? run_serial(spec, ratios) : run_openmp(spec, ratios);
}

RatioScan scan_ratio(std::span<const double> ascending_t, Backend backend) {
    return backend == Backend::serial ? scan_ratio_serial(ascending_t) : scan_ratio_openmp(ascending_t);
}

std::vector<double> sample_ratios(const SamplingConfig& config) {
    if (!(config.ratio_max > 1.0) || !std::isfinite(config.ratio_max))
        throw std::domain_error("sample_ratios: ratio_max must be a finite value above 1");
    std::vector<double> ratios;
    ratios.reserve(config.samples + 32);
    std::mt19937_64 gen(config.seed);
    const double log_max = std::log(config.ratio_max);
    for (std::size_t i = 0; i < config.samples; ++i) {
        const double u = static_cast<double>((gen() >> 11) + 1) * 0x1p-53;  // (0, 1]
        ratios.push_back(std::min(std::exp(u * log_max), config.ratio_max));
    }
    if (config.boundary_points) {
        for (int k = 1; k <= 12; ++k) ratios.push_back(1.0 + std::pow(10.0, -k));
        for (double p = 10.0; p <= config.ratio_max; p *= 10.0) ratios.push_back(p);
        ratios.push_back(config.ratio_max);
    }
    return ratios;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    if (points < 2) throw std::domain_error("uniform_grid: need at least two points");
    std::vector<double> grid(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
    grid.back() = hi;
    return grid;
}

}  // namespace seiffert::sweep
