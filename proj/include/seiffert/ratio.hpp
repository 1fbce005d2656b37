#pragma once

#include <array>

namespace seiffert::sharp {

/// Coefficients k_j of r(t) = (t/atan(t) - 1)/t^2 = sum_j k_j t^(2j), obtained
/// by dividing the arctangent series into t. Checked against exact series
/// division in the tests.
inline constexpr std::array<double, 11> kRatioSeries = {
    1.0 / 3.0,
    -4.0 / 45.0,
    44.0 / 945.0,
    -428.0 / 14175.0,
    10196.0 / 467775.0,
    -10719068.0 / 638512875.0,
    25865068.0 / 1915538625.0,
    -5472607916.0 / 488462349375.0,
    74185965772.0 / 7795859096025.0,
    -264698472181028.0 / 32157918771103125.0,
    2290048394728148.0 / 316985199315159375.0,
};

/// Below this t the series above is used; the first omitted term is < 1e-24.
inline constexpr double kRatioSeriesThreshold = 0.1;

/// r(t) = (t/atan(t) - 1)/t^2 for 0 < t < 1, equal to (T - A)/(C - A) at
/// t = (a - b)/(a + b). Decreases from 1/3 (t -> 0) to 4/pi - 1 (t -> 1).
double ratio_TA_CA(double t);

/// 1/3 - r(t), computed without cancellation near t = 0. Accepts 0 <= t <= 1.
/// Relative accuracy on the series branch; above it the absolute error is
/// about eps/t^2.
double ratio_excess(double t);

struct RatioValue {
    double ratio;   // r(t)
    double excess;  // 1/3 - r(t)
};

/// Both quantities from a single evaluation; no domain check.
RatioValue ratio_value(double t) noexcept;

}  // namespace seiffert::sharp
