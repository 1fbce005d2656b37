#pragma once

#include <string_view>

namespace seiffert {

/// Arguments (a, b) of a bivariate mean. Both components are finite and
/// strictly positive; a == b is allowed and every mean takes the value a there.
class PositivePair {
public:
    PositivePair(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    double min() const noexcept { return a_ < b_ ? a_ : b_; }
    double max() const noexcept { return a_ < b_ ? b_ : a_; }

    PositivePair swapped() const noexcept { return PositivePair(b_, a_, unchecked{}); }

private:
    struct unchecked {};
    PositivePair(double a, double b, unchecked) noexcept : a_(a), b_(b) {}

    double a_;
    double b_;
};

enum class MeanTag {
    seiffert,
    arithmetic,
    geometric,
    root_square,
    contra_harmonic,
    centroidal,
    power,
};

struct MeanKind {
    MeanTag tag = MeanTag::arithmetic;
    double exponent = 0.0;  // only read for MeanTag::power

    static MeanKind of(MeanTag tag) { return MeanKind{tag, 0.0}; }
    static MeanKind power(double p);
};

std::string_view to_string(MeanTag tag);

/// Seiffert mean (a-b) / (2 atan((a-b)/(a+b))), equal to a on the diagonal.
///
/// With t = (a-b)/(a+b) the mean is A(a,b) * t/atan(t). For |t| below
/// kSeiffertSeriesThreshold the factor t/atan(t) is taken from the reciprocal
/// of the truncated arctangent series, which avoids the 0/0 quotient.
double seiffert_T(const PositivePair& pair);

inline constexpr double kSeiffertSeriesThreshold = 1e-4;

/// Centroidal mean 2(a^2 + ab + b^2) / (3(a + b)).
double centroidal_C(const PositivePair& pair);

/// A, G, S, C, M_p, and also T and the centroidal mean for convenience.
/// Power means are evaluated factored by max(a,b) (p > 0) or min(a,b)
/// (p < 0) so that the inner power never exceeds 1. M_0 is the geometric mean.
double classical_mean(const MeanKind& kind, const PositivePair& pair);

/// J(x) = centroidal mean of (x a + (1-x) b, x b + (1-x) a), x in [1/2, 1].
double blend_mean_J(double x, const PositivePair& pair);

/// Contra-harmonic mean of the same blended pair. Used by the prior
/// C-blend bounds; accepts any x in [0, 1].
double contra_harmonic_blend(double x, const PositivePair& pair);

}  // namespace seiffert
