#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seiffert::series {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always normalized with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

/// Largest n for which B_{2n} and the series coefficients are served.
inline constexpr int kMaxOrder = 60;
/// Truncation order used by downstream modules.
inline constexpr int kDefaultOrder = 40;

std::string to_string(const BigRational& value);

/// Even-index Bernoulli numbers B_0, B_2, ..., B_{2 max_n}, generated from
///   sum_{k=0}^{m} binom(m+1, k) B_k = 0,  B_0 = 1
/// in exact arithmetic. B_1 = -1/2 and the vanishing odd values take part in
/// the recurrence but are not stored.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_n = kMaxOrder);

    /// B_{2n} for 0 <= n <= max_n().
    const BigRational& even(int n) const;
    int max_n() const noexcept { return static_cast<int>(even_.size()) - 1; }

    /// Process-wide table with max_n = kMaxOrder, built on first use.
    static const BernoulliTable& shared();

private:
    std::vector<BigRational> even_;
};

/// B_{2n}, 1 <= n <= kMaxOrder. Throws std::out_of_range otherwise.
BigRational bernoulli_even(int n);

/// zeta(2q) = (-1)^(q-1) (2 pi)^(2q) / (2q)! * B_{2q} / 2, 1 <= q <= kMaxOrder.
/// In double precision the result rounds to exactly 1 once zeta(2q) - 1 < 2^-53
/// (q >= 27).
double zeta_even(int q);

enum class SeriesKind {
    cot,    // cot x     = 1/x   - sum c_n x^(2n-1)
    csc2,   // 1/sin^2 x = 1/x^2 + sum (2n-1) c_n x^(2n-2)
    ratio,  // R(theta)  = 1     - sum 2n c_n theta^(2n-2)
};
// with c_n = 2^(2n) |B_{2n}| / (2n)!

std::string_view to_string(SeriesKind kind);

/// Magnitude of the n-th term coefficient of each expansion, exact.
BigRational cot_coefficient(int n);
BigRational csc2_coefficient(int n);
BigRational ratio_coefficient(int n);

/// Partial sum of one of the expansions together with a bound on the
/// discarded remainder over 0 < |x| <= radius.
struct TruncatedSeries {
    SeriesKind kind = SeriesKind::cot;
    int order = 0;
    /// Signed coefficient of the n-th term (index n-1), exact and rounded.
    std::vector<BigRational> exact;
    std::vector<double> coefficients;
    double radius = 0.0;
    double tail_bound = 0.0;

    /// Exponent of x carried by the n-th term.
    int power(int n) const;
    double evaluate(double x) const;
};

/// Builds the order-N expansion. The tail bound follows from
/// c_n = 2 zeta(2n) / pi^(2n) < 2 zeta(2) / pi^(2n), which turns the
/// remainder into a geometric-type series in (radius/pi)^2.
/// Requires 1 <= order <= kMaxOrder and 0 < radius < pi.
TruncatedSeries expand(SeriesKind kind, int order, double radius);

/// Remainder bound alone (same formula as expand()).
double tail_bound(SeriesKind kind, int order, double radius);

/// Partial sums. cot/csc2 require 0 < |x| < pi; ratio_series_R requires
/// 0 < theta <= pi/4 (the series converges up to pi, the endpoint is the
/// limit 4/pi - 1 of the mean ratio).
double cot_series(double x, int order);
double csc2_series(double x, int order);
double ratio_series_R(double theta, int order);

}  // namespace seiffert::series
