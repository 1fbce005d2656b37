#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "seiffert/means.hpp"

// High-precision reference values. Every function here evaluates the plain
// textbook formula in MPFR arithmetic, with no stabilised rewriting, so that
// it stays independent of the double-precision paths it is used to check.
namespace seiffert::oracle {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 100;

/// Sets the calling thread's default MPFR precision (decimal digits) for the
/// lifetime of the guard.
class ScopedDigits {
public:
    explicit ScopedDigits(unsigned digits);
    ~ScopedDigits();
    ScopedDigits(const ScopedDigits&) = delete;
    ScopedDigits& operator=(const ScopedDigits&) = delete;

private:
    unsigned saved_;
};

Real pi();
Real seiffert_T(double a, double b);
Real centroidal_C(double a, double b);
Real classical_mean(const MeanKind& kind, double a, double b);
Real blend_mean_J(double x, double a, double b);

/// zeta(2q) from B_{2q} (exact) and pi at the current precision.
Real zeta_even(int q);

/// |value - reference| / |reference|.
double relative_error(double value, const Real& reference);

std::string to_string(const Real& value, unsigned digits);

}  // namespace seiffert::oracle
