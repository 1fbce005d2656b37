#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace seiffert::sweep {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class Backend { serial, openmp };

// All suites evaluate the pair (a, b) = (x, 1) for ratios x > 1 through
// tau = (x - 1)/(x + 1) and A = (x + 1)/2. In these variables
//   T = A (1 + tau^2 r),  C = A (1 + tau^2),  centroidal = A (1 + tau^2/3),
//   blend of weight p: tau -> (2p - 1) tau,
// with r = r(tau) from ratio.hpp, so every slack becomes A tau^2 times a
// reduced quantity that can be evaluated without cancellation.
enum class Suite {
    theorem_1_1,         // C(alpha-blend) < T < C(beta-blend), centroidal C
    theorem_1_2,         // alpha1 C + (1 - alpha1) A < T < beta1 C + (1 - beta1) A
    prior_root_square,   // alpha S + (1 - alpha) A < T < beta S + (1 - beta) A
    prior_contra_blend,  // C(alpha-blend) < T < C(beta-blend), contra-harmonic C
    ordering_chain,      // G < A < centroidal < S < C  and  A < T < S
};

std::string_view suite_name(Suite suite);

/// Constants of a two-sided bound in user-facing form plus the reduced gaps
/// the slack computation uses. For the three "band" suites (theorem_1_1,
/// theorem_1_2, prior_contra_blend) the bound is
///   upper_gap < 1/3 - r(tau) < lower_gap,
/// and the sharp upper constants correspond to upper_gap == 0 exactly.
/// For prior_root_square, lower_gap is alpha itself and upper_gap = 2 - 3 beta.
struct SuiteSpec {
    Suite suite = Suite::ordering_chain;
    double lower_constant = std::numeric_limits<double>::quiet_NaN();
    double upper_constant = std::numeric_limits<double>::quiet_NaN();
    double lower_gap = 0.0;
    double upper_gap = 0.0;
};

SuiteSpec theorem_1_1(double alpha, double beta);
SuiteSpec theorem_1_2(double alpha1, double beta1);
SuiteSpec prior_root_square(double alpha, double beta);
/// General constants; the gaps 1/3 - (2x - 1)^2 are formed in floating point.
SuiteSpec prior_contra_blend(double alpha, double beta);
/// Sharp constants, with (2 alpha - 1)^2 = 4/pi - 1 and (2 beta - 1)^2 = 1/3
/// substituted in closed form.
SuiteSpec prior_contra_blend_sharp();
SuiteSpec ordering_chain();

/// Outcome for one ratio. Slacks are positive when the inequality holds and
/// are measured in units of C - A = A tau^2 (contra-harmonic minus
/// arithmetic mean), which removes the trivial tau^2 decay at the diagonal.
/// For theorem_1_2 this is exactly the gap in (T - A)/(C - A).
struct SampleOutcome {
    double lower_slack = 0.0;
    double upper_slack = 0.0;
    /// Constant value that would make this ratio tight (NaN for the chain).
    double tight = std::numeric_limits<double>::quiet_NaN();
    /// r(tau) = (T - A)/(C - A).
    double ratio = 0.0;
    /// Largest relative disagreement between the means-core functions and the
    /// reduced closed forms at this ratio.
    double consistency = 0.0;
};

SampleOutcome evaluate_sample(const SuiteSpec& spec, double x);

struct Extremum {
    double value = std::numeric_limits<double>::quiet_NaN();
    std::size_t index = npos;
};

struct SideStats {
    Extremum min_slack;
    std::size_t violations = 0;
    std::size_t first_violation = npos;
};

struct SweepResult {
    std::size_t n = 0;
    SideStats lower;
    SideStats upper;
    Extremum tight_min;
    Extremum tight_max;
    Extremum ratio_min;
    Extremum ratio_max;
    double max_consistency_error = 0.0;
};

void accumulate(SweepResult& into, const SampleOutcome& sample, std::size_t index);
/// Order-independent: merging partial results in any grouping gives the same
/// result as a single serial pass (ties resolve to the smaller index).
void merge(SweepResult& into, const SweepResult& part);

SweepResult run_serial(const SuiteSpec& spec, std::span<const double> ratios);
SweepResult run_openmp(const SuiteSpec& spec, std::span<const double> ratios);
SweepResult run(const SuiteSpec& spec, std::span<const double> ratios, Backend backend = Backend::openmp);

/// Scan of r(t) over an ascending grid of t in (0, 1).
struct RatioScan {
    std::size_t n = 0;
    Extremum inf;
    Extremum sup;
    /// Number of neighbours with r(t[i+1]) >= r(t[i]).
    std::size_t monotonicity_breaks = 0;
    std::size_t first_break = npos;
};

RatioScan scan_ratio_serial(std::span<const double> ascending_t);
RatioScan scan_ratio_openmp(std::span<const double> ascending_t);
RatioScan scan_ratio(std::span<const double> ascending_t, Backend backend = Backend::openmp);

struct SamplingConfig {
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 1;
    double ratio_max = 1e8;
    bool boundary_points = true;
};

/// `samples` ratios log-uniform on (1, ratio_max], followed (when enabled) by
/// 1 + 10^-k for k = 1..12, 10^k <= ratio_max, and ratio_max itself.
/// Uniforms come from std::mt19937_64 as (bits >> 11 + 1) * 2^-53, so the
/// sequence is identical on every conforming platform.
std::vector<double> sample_ratios(const SamplingConfig& config);

/// `points` equally spaced values from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

}  // namespace seiffert::sweep
