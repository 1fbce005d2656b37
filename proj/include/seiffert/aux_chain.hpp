#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace seiffert::chain {

/// Raised when a sign change or witness that the argument guarantees cannot
/// be located in the searched range.
class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Blend parameter p in (1/2, 1] of the comparison
///   C(p a + (1-p) b, p b + (1-p) a)  versus  T(a, b),
/// written with t = a/b > 1.
class AuxFamily {
public:
    explicit AuxFamily(double p);

    double p() const noexcept { return p_; }

    // Leading coefficients of the quartic f1:
    //   c1 = 4p^4 - 8p^3 + 18p^2 - 14p + 1
    //   c2 = 4p^4 - 8p^3 +  9p^2 -  5p + 1
    //   c3 = 4p^4 - 8p^3 +  6p^2 -  2p + 1
    double c1() const noexcept { return c1_; }
    double c2() const noexcept { return c2_; }
    double c3() const noexcept { return c3_; }

    /// Quadratic form u^2 + uv + v^2, u = pt + (1-p), v = p + (1-p)t.
    double Q(double t) const noexcept;

    /// f_level(1) summed from the printed coefficients.
    double endpoint(int level) const;

private:
    double p_;
    double c1_, c2_, c3_;
    std::array<double, 4> endpoints_{};
};

/// Monomial coefficients (ascending powers of t) of f1..f4 exactly as
/// printed, for any arithmetic type (double or an exact rational).
template <class Number>
std::array<std::vector<Number>, 4> printed_chain_coefficients(const Number& p) {
    const Number p2 = p * p;
    const Number p3 = p2 * p;
    const Number p4 = p3 * p;
    const Number c1 = 4 * p4 - 8 * p3 + 18 * p2 - 14 * p + 1;
    const Number c2 = 4 * p4 - 8 * p3 + 9 * p2 - 5 * p + 1;
    const Number c3 = 4 * p4 - 8 * p3 + 6 * p2 - 2 * p + 1;
    return {{
        {c1, -4 * c2, 6 * c3, -4 * c2, c1},
        {-c2, 3 * c3, -3 * c2, c1},
        {c3, -2 * c2, c1},
        {-c2, c1},
    }};
}

/// f(t) = 4 atan((t-1)/(t+1)) - 3(t^2 - 1)/Q(t). Requires t > 1.
/// Evaluated as 3 (t-1)^2 atan(tau) (1/3 - r(tau) - 4p(1-p)/3) / Q(t).
double f(double t, const AuxFamily& fam);

/// lim_{t -> inf} f(t) = pi - 3/(p^2 - p + 1).
double f_limit_at_infinity(double p);

/// f1..f4 (level 1..4) for t >= 1. Evaluated in powers of s = t - 1, with the
/// Taylor data at t = 1 summed from the printed coefficients, so the
/// polynomials keep full relative accuracy near t = 1.
double f_chain(double t, const AuxFamily& fam, int level);

/// Same polynomials in the printed monomial basis (Horner in t).
double f_chain_monomial(double t, const AuxFamily& fam, int level);

/// h1(t) = Q(t)^2 (1 + t^2), the denominator in f'(t) = f1(t)/h1(t).
double h1(double t, const AuxFamily& fam);

/// Q / (6 (1 + t) atan((t-1)/(t+1))): with b = 1, a = t,
/// C(blend) - T = prefactor * f(t).
double factorization_prefactor(double t, const AuxFamily& fam);

struct DerivativeCheck {
    double max_abs_residual = 0.0;
    /// max |f' h1 - f1| divided by max |f1| over the grid.
    double max_rel_residual = 0.0;
    double worst_t = 0.0;
};

/// Compares a central finite difference of f (step 1e-6 max(1, t)) times h1
/// with f1 on every grid point. Grid points must exceed 1.
DerivativeCheck f_derivative_identity_check(const AuxFamily& fam, std::span<const double> grid);

struct CriticalPointReport {
    double t0 = 0.0;  // sign change of f4, minimum of f3
    double t1 = 0.0;  // sign change of f3, minimum of f2
    double t2 = 0.0;  // sign change of f2, minimum of f1
    double t3 = 0.0;  // sign change of f1, minimum of f
    double bracket_width = 0.0;
    std::array<double, 4> residuals{};  // |f4(t0)|, |f3(t1)|, |f2(t2)|, |f1(t3)|
};

/// Locates the negative-to-positive sign change of f4, f3, f2, f1 on (1, 1e6]
/// by a log-spaced scan followed by bisection to width 1e-12, then checks
/// 1 < t0 < t1 < t2 < t3 and that f3, f2, f1, f decrease before and increase
/// after their respective point. Meant for p = lambda; throws SearchFailure
/// when any of these claims does not hold for the given family.
CriticalPointReport locate_critical_points(const AuxFamily& fam);

enum class WitnessSide {
    above_lambda,  // lambda < p < 1: some ratio has C(blend) > T
    below_one,     // 1/2 < p < 1: some ratio near 1 has T > C(blend)
};

struct Witness {
    double ratio = 0.0;  // a/b with b = 1
    double blend_mean = 0.0;
    double seiffert = 0.0;
};

/// Scans for a ratio violating the inequality on the given side, comparing
/// the means directly. above_lambda scans (1, 1e12]; below_one scans
/// downward from 1.25 towards 1.
Witness counterexample_witness(double p, WitnessSide side);

}  // namespace seiffert::chain
