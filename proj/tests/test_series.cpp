#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "seiffert/oracle.hpp"
#include "seiffert/series.hpp"

using namespace seiffert;

using namespace testing_oracles;

TEST_CASE("first Bernoulli numbers") {
    CHECK(series::bernoulli_even(1) == BigRational(1, 6));
    CHECK(series::bernoulli_even(2) == BigRational(-1, 30));
    CHECK(series::bernoulli_even(3) == BigRational(1, 42));
    CHECK(series::bernoulli_even(4) == BigRational(-1, 30));
    CHECK(series::bernoulli_even(5) == BigRational(5, 66));
    CHECK(series::bernoulli_even(6) == BigRational(-691, 2730));
    CHECK(series::bernoulli_even(7) == BigRational(7, 6));
    CHECK(series::BernoulliTable(3).even(0) == 1);
}

TEST_CASE("Bernoulli table matches Akiyama-Tanigawa and the sign law") {
    const auto reference = akiyama_tanigawa(2 * series::kMaxOrder);
    for (int n = 1; n <= series::kMaxOrder; ++n) {
        const BigRational b = series::bernoulli_even(n);
        CHECK(b == reference[static_cast<std::size_t>(2 * n)]);
        CHECK((n % 2 == 1 ? b > 0 : b < 0));
    }
    // B_120: 113-digit numerator
    CHECK(BigInt(abs(numerator(series::bernoulli_even(60)))).str().size() == 113);
    CHECK(denominator(series::bernoulli_even(60)) == 2328255930);
}

TEST_CASE("Bernoulli index range") {
    CHECK_THROWS_AS(series::bernoulli_even(0), std::out_of_range);
    CHECK_THROWS_AS(series::bernoulli_even(61), std::out_of_range);
    CHECK_THROWS_AS(series::BernoulliTable(4).even(5), std::out_of_range);
    CHECK_THROWS_AS(series::BernoulliTable(-1), std::out_of_range);
}

TEST_CASE("zeta at even integers") {
    constexpr double pi = std::numbers::pi;
    CHECK(series::zeta_even(1) == doctest::Approx(pi * pi / 6.0).epsilon(1e-15));
    CHECK(series::zeta_even(2) == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-15));
    CHECK(series::zeta_even(3) == doctest::Approx(std::pow(pi, 6) / 945.0).epsilon(1e-15));
    for (int q = 1; q <= 5; ++q) CHECK(std::abs(series::zeta_even(q) - zeta_partial(q, 2'000'000)) < 1e-10);

    oracle::ScopedDigits digits(100);
    oracle::Real last = oracle::zeta_even(1);
    for (int q = 1; q <= series::kMaxOrder; ++q) {
        const oracle::Real z = oracle::zeta_even(q);
        CHECK(z > 1);
        if (q > 1) CHECK(z < last);
        last = z;
        CHECK(oracle::relative_error(series::zeta_even(q), z) < 4e-15);
    }
    CHECK(series::zeta_even(series::kMaxOrder) == 1.0);
    CHECK_THROWS_AS(series::zeta_even(0), std::out_of_range);
}

TEST_CASE("cot coefficients equal exact division of x cos x by sin x") {
    const auto q = x_cot_x(series::kMaxOrder);
    CHECK(q[0] == 1);
    for (int n = 1; n <= series::kMaxOrder; ++n) {
        CHECK(q[static_cast<std::size_t>(2 * n - 1)] == 0);
        CHECK(series::cot_coefficient(n) == -q[static_cast<std::size_t>(2 * n)]);
    }
}

TEST_CASE("derived coefficient identities hold exactly") {
    for (int n = 1; n <= series::kMaxOrder; ++n) {
        const BigRational c = series::cot_coefficient(n);
        CHECK(series::csc2_coefficient(n) == BigRational(2 * n - 1) * c);
        // cot/x - 1/sin^2 differentiates term by term into -2n c_n
        CHECK(series::ratio_coefficient(n) == c + series::csc2_coefficient(n));
        // c_n = 2 zeta(2n) / pi^(2n)
        const double z = series::zeta_even(n);
        CHECK(c.convert_to<double>() == doctest::Approx(2.0 * z / std::pow(std::numbers::pi, 2 * n)).epsilon(1e-14));
    }
    CHECK(series::ratio_coefficient(1) == BigRational(2, 3));
    CHECK(series::ratio_coefficient(2) == BigRational(4, 45));
}

TEST_CASE("expanded series match trigonometric evaluation") {
    constexpr double pi = std::numbers::pi;
    oracle::ScopedDigits digits(60);
    for (int i = 0; i <= 2000; ++i) {
        const double x = 0.01 + (pi / 2.0 - 0.01) * i / 2000.0;
        const oracle::Real xr = x;
        const oracle::Real s = sin(xr);
        CHECK(static_cast<double>(abs(series::cot_series(x, 40) - cos(xr) / s)) < 1e-12);
        CHECK(static_cast<double>(abs(series::csc2_series(x, 40) - 1 / (s * s))) < 1e-12);
        // one ulp against plain double trigonometry
        CHECK(std::abs(series::csc2_series(x, 40) - 1.0 / (std::sin(x) * std::sin(x))) < 4e-12);
        CHECK(std::abs(series::cot_series(-x, 40) + series::cot_series(x, 40)) == 0.0);
    }
    for (int i = 1; i <= 500; ++i) {
        const double th = pi / 4.0 * i / 500.0;
        const oracle::Real x = th;
        const oracle::Real direct = cos(x) / sin(x) / x - 1 / (sin(x) * sin(x)) + 1;
        CHECK(oracle::relative_error(series::ratio_series_R(th, 40), direct) < 1e-14);
    }
}

TEST_CASE("tail bounds cover the truncation error") {
    oracle::ScopedDigits digits(50);
    constexpr double pi = std::numbers::pi;
    for (int order : {2, 5, 10, 20}) {
        for (double r : {0.5, pi / 4.0, 1.5}) {
            const oracle::Real x = r;
            const oracle::Real c = cos(x) / sin(x);
            const oracle::Real s2 = 1 / (sin(x) * sin(x));
            const double cot_err = static_cast<double>(abs(series::cot_series(r, order) - c));
            const double csc_err = static_cast<double>(abs(series::csc2_series(r, order) - s2));
            // plus a few ulps of rounding in the partial sum
            CHECK(cot_err <= series::tail_bound(series::SeriesKind::cot, order, r) + 4e-16 * static_cast<double>(abs(c)));
            CHECK(csc_err <= series::tail_bound(series::SeriesKind::csc2, order, r) + 4e-16 * static_cast<double>(s2));
            if (r <= pi / 4.0) {
                const double rat_err = static_cast<double>(abs(series::ratio_series_R(r, order) - (c / x - s2 + 1)));
                CHECK(rat_err <= series::tail_bound(series::SeriesKind::ratio, order, r) + 4e-16);
            }
        }
    }
    CHECK(series::tail_bound(series::SeriesKind::cot, 40, pi / 2.0) < 1e-20);
}

TEST_CASE("truncated series object") {
    const auto s = series::expand(series::SeriesKind::ratio, 3, std::numbers::pi / 4.0);
    REQUIRE(s.exact.size() == 3);
    CHECK(series::to_string(s.exact[0]) == "-2/3");
    CHECK(series::to_string(s.exact[1]) == "-4/45");
    CHECK(s.power(1) == 0);
    CHECK(s.power(3) == 4);
    CHECK(s.evaluate(0.3) == series::ratio_series_R(0.3, 3));
    const auto c = series::expand(series::SeriesKind::cot, 2, 1.0);
    CHECK(c.power(2) == 3);
    CHECK(series::to_string(c.exact[0]) == "-1/3");
    CHECK(series::to_string(c.exact[1]) == "-1/45");
}

TEST_CASE("series argument checks") {
    CHECK_THROWS_AS(series::cot_series(0.0, 10), std::domain_error);
    CHECK_THROWS_AS(series::cot_series(3.2, 10), std::domain_error);
    CHECK_THROWS_AS(series::csc2_series(0.5, 61), std::out_of_range);
    CHECK_THROWS_AS(series::ratio_series_R(1.0, 10), std::domain_error);
    CHECK_THROWS_AS(series::ratio_series_R(0.0, 10), std::domain_error);
    CHECK_NOTHROW(series::ratio_series_R(std::numbers::pi / 4.0, 40));
    CHECK_THROWS_AS(series::expand(series::SeriesKind::cot, 0, 1.0), std::out_of_range);
    CHECK_THROWS_AS(series::tail_bound(series::SeriesKind::csc2, 10, 3.5), std::domain_error);
}
