#include "seiffert/series.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seiffert::series {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int order, const char* where) {
    if (order < 1 || order > kMaxOrder)
        throw std::out_of_range(std::string(where) + ": order must lie in [1, " +
                                std::to_string(kMaxOrder) + "], got " + std::to_string(order));
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

BigRational abs_bernoulli_even(int n) { return abs(BernoulliTable::shared().even(n)); }

// 2^(2n) |B_{2n}| / (2n)!
BigRational base_coefficient(int n) {
    const BigInt pow4 = BigInt(1) << (2 * n);
    return BigRational(pow4) * abs_bernoulli_even(n) / BigRational(factorial(2 * n));
}

struct RoundedTable {
    std::array<double, kMaxOrder + 1> base{};  // index n, entry 0 unused
};

const RoundedTable& rounded() {
    static const RoundedTable table = [] {
        RoundedTable t;
        for (int n = 1; n <= kMaxOrder; ++n)
            t.base[static_cast<std::size_t>(n)] = base_coefficient(n).convert_to<double>();
        return t;
    }();
    return table;
}

double base(int n) { return rounded().base[static_cast<std::size_t>(n)]; }

void check_trig_argument(double x, const char* where) {
    if (!std::isfinite(x) || x == 0.0 || std::abs(x) >= kPi)
        throw std::domain_error(std::string(where) + ": require 0 < |x| < pi");
}

// sum_{n=1}^{order} w(n) c_n y^(n-1) by Horner in y = x^2.
template <class Weight>
double horner(double y, int order, Weight weight) {
    double acc = 0.0;
    for (int n = order; n >= 1; --n) acc = acc * y + weight(n) * base(n);
    return acc;
}

}  // namespace

std::string to_string(const BigRational& value) { return value.str(); }

BernoulliTable::BernoulliTable(int max_n) {
    if (max_n < 0) throw std::out_of_range("BernoulliTable: max_n must be nonnegative");
    const int top = 2 * max_n;
    std::vector<BigRational> all;
    all.reserve(static_cast<std::size_t>(top) + 1);
    all.emplace_back(1);
    // binom row for m + 1, updated in place as m advances.
    std::vector<BigInt> row{1, 1};
    for (int m = 1; m <= top; ++m) {
        std::vector<BigInt> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);  // row[k] = binom(m + 1, k)
        BigRational acc = 0;
        for (int k = 0; k < m; ++k) acc += BigRational(row[static_cast<std::size_t>(k)]) * all[static_cast<std::size_t>(k)];
        all.push_back(-acc / BigRational(m + 1));
    }
    even_.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) even_.push_back(all[static_cast<std::size_t>(2 * n)]);
}

const BigRational& BernoulliTable::even(int n) const {
    if (n < 0 || n > max_n())
        throw std::out_of_range("BernoulliTable::even: index " + std::to_string(n) + " out of range");
    return even_[static_cast<std::size_t>(n)];
}

const BernoulliTable& BernoulliTable::shared() {
    static const BernoulliTable table(kMaxOrder);
    return table;
}

BigRational bernoulli_even(int n) {
    check_order(n, "bernoulli_even");
    return BernoulliTable::shared().even(n);
}

double zeta_even(int q) {
    check_order(q, "zeta_even");
    // Long double keeps the 2q-fold amplified rounding of 2 pi below half an
    // ulp of the double result.
    const BigRational scaled = abs_bernoulli_even(q) / BigRational(factorial(2 * q) * 2);
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    return static_cast<double>(scaled.convert_to<long double>() * std::pow(two_pi, 2 * q));
}

std::string_view to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::cot: return "cot";
        case SeriesKind::csc2: return "csc2";
        case SeriesKind::ratio: return "ratio";
    }
    return "unknown";
}

BigRational cot_coefficient(int n) {
    check_order(n, "cot_coefficient");
    return base_coefficient(n);
}

BigRational csc2_coefficient(int n) {
    check_order(n, "csc2_coefficient");
    const BigInt pow4 = BigInt(1) << (2 * n);
    return BigRational(pow4 * (2 * n - 1)) * abs_bernoulli_even(n) / BigRational(factorial(2 * n));
}

BigRational ratio_coefficient(int n) {
    check_order(n, "ratio_coefficient");
    const BigInt pow = BigInt(1) << (2 * n + 1);
    return BigRational(pow * n) * abs_bernoulli_even(n) / BigRational(factorial(2 * n));
}

int TruncatedSeries::power(int n) const {
    switch (kind) {
        case SeriesKind::cot: return 2 * n - 1;
        case SeriesKind::csc2:
        case SeriesKind::ratio: return 2 * n - 2;
    }
    return 0;
}

double TruncatedSeries::evaluate(double x) const {
    switch (kind) {
        case SeriesKind::cot: return cot_series(x, order);
        case SeriesKind::csc2: return csc2_series(x, order);
        case SeriesKind::ratio: return ratio_series_R(x, order);
    }
    return std::nan("");
}

double tail_bound(SeriesKind kind, int order, double radius) {
    check_order(order, "tail_bound");
    if (!(radius > 0.0 && radius < kPi)) throw std::domain_error("tail_bound: require 0 < radius < pi");
    const double zeta2 = kPi * kPi / 6.0;
    const double q = (radius / kPi) * (radius / kPi);
    const double n = order;
    const double qn = std::pow(q, order);
    switch (kind) {
        case SeriesKind::cot: return 2.0 * zeta2 / radius * qn * q / (1.0 - q);
        case SeriesKind::csc2:
            return 2.0 * zeta2 / (kPi * kPi) * qn * ((2.0 * n + 1.0) / (1.0 - q) + 2.0 * q / ((1.0 - q) * (1.0 - q)));
        case SeriesKind::ratio:
            return 2.0 * zeta2 / (kPi * kPi) * qn * (2.0 * (n + 1.0) / (1.0 - q) + 2.0 * q / ((1.0 - q) * (1.0 - q)));
    }
    return std::nan("");
}

TruncatedSeries expand(SeriesKind kind, int order, double radius) {
    TruncatedSeries s;
    s.kind = kind;
    s.order = order;
    s.radius = radius;
    s.tail_bound = tail_bound(kind, order, radius);
    s.exact.reserve(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) {
        switch (kind) {
            case SeriesKind::cot: s.exact.push_back(-cot_coefficient(n)); break;
            case SeriesKind::csc2: s.exact.push_back(csc2_coefficient(n)); break;
            case SeriesKind::ratio: s.exact.push_back(-ratio_coefficient(n)); break;
        }
        s.coefficients.push_back(s.exact.back().convert_to<double>());
    }
    return s;
}

double cot_series(double x, int order) {
    check_order(order, "cot_series");
    check_trig_argument(x, "cot_series");
    return 1.0 / x - x * horner(x * x, order, [](int) { return 1.0; });
}

double csc2_series(double x, int order) {
    check_order(order, "csc2_series");
    check_trig_argument(x, "csc2_series");
    // 1/x^2 = q + (r - q e)/x2 to first order, with x2 + e = x^2 and
    // q x2 + r = 1 both exact, so the sum is rounded only once at the end.
    const double x2 = x * x;
    const double e = std::fma(x, x, -x2);
    const double q = 1.0 / x2;
    const double r = std::fma(-q, x2, 1.0);
    const double tail = horner(x2, order, [](int n) { return 2.0 * n - 1.0; });
    return q + ((r - q * e) / x2 + tail);
}

double ratio_series_R(double theta, int order) {
    check_order(order, "ratio_series_R");
    if (!(theta > 0.0 && theta <= kPi / 4.0))
        throw std::domain_error("ratio_series_R: require 0 < theta <= pi/4");
    return 1.0 - horner(theta * theta, order, [](int n) { return 2.0 * n; });
}

}  // namespace seiffert::series
