#include "seiffert/oracle.hpp"

#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "seiffert/series.hpp"

namespace seiffert::oracle {

namespace {

Real from_rational(const series::BigRational& q) {
    const Real num(numerator(q).str());
    const Real den(denominator(q).str());
    return num / den;
}

}  // namespace

ScopedDigits::ScopedDigits(unsigned digits) : saved_(Real::default_precision()) {
    if (digits < 10) throw std::domain_error("ScopedDigits: at least 10 digits required");
    Real::default_precision(digits);
}

ScopedDigits::~ScopedDigits() { Real::default_precision(saved_); }

Real pi() { return boost::math::constants::pi<Real>(); }

Real seiffert_T(double a, double b) {
    const Real x(a);
    const Real y(b);
    if (a == b) return x;
    return (x - y) / (2 * atan((x - y) / (x + y)));
}

Real centroidal_C(double a, double b) {
    const Real x(a);
    const Real y(b);
    return 2 * (x * x + x * y + y * y) / (3 * (x + y));
}

Real classical_mean(const MeanKind& kind, double a, double b) {
    const Real x(a);
    const Real y(b);
    switch (kind.tag) {
        case MeanTag::seiffert: return seiffert_T(a, b);
        case MeanTag::arithmetic: return (x + y) / 2;
        case MeanTag::geometric: return sqrt(x * y);
        case MeanTag::root_square: return sqrt((x * x + y * y) / 2);
        case MeanTag::contra_harmonic: return (x * x + y * y) / (x + y);
        case MeanTag::centroidal: return centroidal_C(a, b);
        case MeanTag::power: {
            if (kind.exponent == 0.0) return sqrt(x * y);
            const Real p(kind.exponent);
            return pow((pow(x, p) + pow(y, p)) / 2, 1 / p);
        }
    }
    throw std::domain_error("oracle::classical_mean: unknown kind");
}

Real blend_mean_J(double x, double a, double b) {
    const Real w(x);
    const Real u = w * a + (1 - w) * b;
    const Real v = w * b + (1 - w) * a;
    return 2 * (u * u + u * v + v * v) / (3 * (u + v));
}

Real zeta_even(int q) {
    const series::BigRational b = series::bernoulli_even(q);
    series::BigInt fact = 1;
    for (int k = 2; k <= 2 * q; ++k) fact *= k;
    const Real two_pi = 2 * pi();
    return abs(from_rational(b)) * pow(two_pi, 2 * q) / (2 * Real(fact.str()));
}

double relative_error(double value, const Real& reference) {
    const Real diff = abs(Real(value) - reference) / abs(reference);
    return diff.convert_to<double>();
}

std::string to_string(const Real& value, unsigned digits) {
    return value.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

}  // namespace seiffert::oracle
