#include "seiffert/means.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace seiffert {

namespace {

struct Ordered {
    double lo;
    double hi;
};

// Every mean is symmetric; evaluating on the sorted pair makes that exact in
// floating point as well.
Ordered ordered(const PositivePair& pair) { return {pair.min(), pair.max()}; }

// The quadratic means are written in rho = lo/hi so that lo^2 and hi^2 can
// neither overflow nor underflow.
double centroidal_of(double lo, double hi) {
    const double rho = lo / hi;
    return hi * (2.0 * (1.0 + rho * (1.0 + rho))) / (3.0 * (1.0 + rho));
}

double contra_harmonic_of(double lo, double hi) {
    const double rho = lo / hi;
    return hi * (1.0 + rho * rho) / (1.0 + rho);
}

// t / atan(t) for |t| < kSeiffertSeriesThreshold. The first omitted term of
// the arctangent series, t^10/11, is below 1e-41 at the threshold.
double t_over_atan_small(double t) {
    const double s = t * t;
    return 1.0 / (1.0 - s * (1.0 / 3.0 - s * (1.0 / 5.0 - s * (1.0 / 7.0 - s / 9.0))));
}

double power_mean(double p, double lo, double hi) {
    if (p == 0.0) return std::sqrt(lo * hi);
    // ((a^p + b^p)/2)^(1/p) = base * exp(log1p(expm1(p ln r)/2) / p) with the
    // base chosen so that p ln r <= 0 and the inner power cannot overflow.
    const double base = p > 0.0 ? hi : lo;
    const double log_r = p > 0.0 ? std::log(lo / hi) : std::log(hi / lo);
    return base * std::exp(std::log1p(0.5 * std::expm1(p * log_r)) / p);
}

}  // namespace

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("PositivePair: arguments must be finite");
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("PositivePair: arguments must be strictly positive");
}

MeanKind MeanKind::power(double p) {
    if (!std::isfinite(p)) throw std::domain_error("MeanKind::power: exponent must be finite");
    return MeanKind{MeanTag::power, p};
}

std::string_view to_string(MeanTag tag) {
    switch (tag) {
        case MeanTag::seiffert: return "seiffert";
        case MeanTag::arithmetic: return "arithmetic";
        case MeanTag::geometric: return "geometric";
        case MeanTag::root_square: return "rootsquare";
        case MeanTag::contra_harmonic: return "contraharmonic";
        case MeanTag::centroidal: return "centroidal";
        case MeanTag::power: return "power";
    }
    return "unknown";
}

double seiffert_T(const PositivePair& pair) {
    const auto [lo, hi] = ordered(pair);
    const double diff = hi - lo;
    const double t = diff / (hi + lo);
    if (t < kSeiffertSeriesThreshold) return (0.5 * lo + 0.5 * hi) * t_over_atan_small(t);
    return diff / (2.0 * std::atan(t));
}

double centroidal_C(const PositivePair& pair) {
    const auto [lo, hi] = ordered(pair);
    return centroidal_of(lo, hi);
}

double classical_mean(const MeanKind& kind, const PositivePair& pair) {
    const auto [lo, hi] = ordered(pair);
    switch (kind.tag) {
        case MeanTag::seiffert: return seiffert_T(pair);
        case MeanTag::arithmetic: return 0.5 * lo + 0.5 * hi;
        case MeanTag::geometric: return std::sqrt(lo) * std::sqrt(hi);
        case MeanTag::root_square: return std::hypot(lo, hi) * std::numbers::sqrt2 * 0.5;
        case MeanTag::contra_harmonic: return contra_harmonic_of(lo, hi);
        case MeanTag::centroidal: return centroidal_of(lo, hi);
        case MeanTag::power:
            if (!std::isfinite(kind.exponent))
                throw std::domain_error("classical_mean: power exponent must be finite");
            return power_mean(kind.exponent, lo, hi);
    }
    throw std::domain_error("classical_mean: unknown mean kind");
}

double blend_mean_J(double x, const PositivePair& pair) {
    if (!(x >= 0.5 && x <= 1.0))
        throw std::domain_error("blend_mean_J: x must lie in [1/2, 1], got " + std::to_string(x));
    const auto [lo, hi] = ordered(pair);
    const double u = x * hi + (1.0 - x) * lo;
    const double v = x * lo + (1.0 - x) * hi;
    return centroidal_of(std::min(u, v), std::max(u, v));
}

double contra_harmonic_blend(double x, const PositivePair& pair) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("contra_harmonic_blend: x must lie in [0, 1]");
    const auto [lo, hi] = ordered(pair);
    const double u = x * hi + (1.0 - x) * lo;
    const double v = x * lo + (1.0 - x) * hi;
    return contra_harmonic_of(std::min(u, v), std::max(u, v));
}

}  // namespace seiffert
