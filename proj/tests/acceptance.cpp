// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seiffert/aux_chain.hpp"
#include "seiffert/means.hpp"
#include "seiffert/oracle.hpp"
#include "seiffert/ratio.hpp"
#include "seiffert/series.hpp"
#include "seiffert/sharp_constants.hpp"

using namespace seiffert;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

sharp::VerifyOptions million(double alpha_shift = 0.0, double beta_shift = 0.0) {
    sharp::VerifyOptions o;
    o.sampling.samples = 1'000'000;
    o.alpha_shift = alpha_shift;
    o.beta_shift = beta_shift;
    return o;
}

void lambda_recovery(Verdict& v) {
    const auto t0 = std::chrono::steady_clock::now();
    const double found = sharp::lambda_numeric();
    const double secs = seconds_since(t0);
    const double gap = std::abs(found - sharp::lambda_closed());
    v.detail << "lambda=" << found << " gap=" << gap << " time=" << secs << "s";
    v.require(gap < 1e-12, "gap < 1e-12");
    v.require(secs < 1.0, "runtime < 1 s");
}

void ratio_extremes(Verdict& v) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto lim = sharp::ratio_limits_scan(1'000'000, 1e-7, 1.0 - 1e-7);
    const double secs = seconds_since(t0);
    const double d_inf = std::abs(lim.inf - (4.0 / kPi - 1.0));
    const double d_sup = std::abs(lim.sup - 1.0 / 3.0);
    v.detail << "inf gap=" << d_inf << " sup gap=" << d_sup << " evaluations=" << lim.evaluations << " time=" << secs << "s";
    v.require(lim.evaluations == 1'000'000, "10^6 evaluations");
    v.require(d_inf < 1e-6, "inf within 1e-6");
    v.require(d_sup < 1e-6, "sup within 1e-6");
    v.require(lim.strictly_decreasing, "monotone decrease");
    v.require(secs < 10.0, "runtime < 10 s");
}

void bulk_verification(Verdict& v) {
    const auto r1 = sharp::theorem_1_1_verify(million());
    const auto r2 = sharp::theorem_1_2_verify(million());
    v.detail << "n=" << r1.n_samples << " violations=" << r1.violations << "+" << r2.violations
             << " consistency=" << std::max(r1.max_consistency_error, r2.max_consistency_error);
    v.require(r1.n_samples >= 1'000'000 && r2.n_samples >= 1'000'000, "10^6 samples");
    v.require(r1.pass && r1.violations == 0, "first double inequality");
    v.require(r2.pass && r2.violations == 0, "second double inequality");
}

void sharpness(Verdict& v) {
    const auto out1 = sharp::theorem_1_1_verify(million(1e-4, 0.0));
    const auto in1 = sharp::theorem_1_1_verify(million(-1e-4, 0.0));
    const auto out2 = sharp::theorem_1_2_verify(million(1e-6, 0.0));
    const auto in2 = sharp::theorem_1_2_verify(million(-1e-6, 0.0));
    v.detail << "outward violations=" << out1.violations << "," << out2.violations
             << " inward violations=" << in1.violations << "," << in2.violations;
    if (out1.witness) v.detail << " witness1=" << out1.witness->ratio;
    if (out2.witness) v.detail << " witness2=" << out2.witness->ratio;
    v.require(out1.violations > 0 && out1.witness.has_value(), "lambda + 1e-4 violated");
    v.require(out2.violations > 0 && out2.witness.has_value(), "4/pi - 1 + 1e-6 violated");
    v.require(in1.pass, "lambda - 1e-4 holds");
    v.require(in2.pass, "4/pi - 1 - 1e-6 holds");
}

void proof_structure(Verdict& v) {
    const chain::AuxFamily fam(sharp::lambda_closed());
    chain::CriticalPointReport rep;
    try {
        rep = chain::locate_critical_points(fam);
    } catch (const std::exception& e) {
        v.require(false, e.what());
        return;
    }
    double worst_residual = 0.0;
    for (double r : rep.residuals) worst_residual = std::max(worst_residual, r);
    v.detail << "t0..t3=" << rep.t0 << "," << rep.t1 << "," << rep.t2 << "," << rep.t3 << " residual=" << worst_residual;
    v.require(1.0 < rep.t0 && rep.t0 < rep.t1 && rep.t1 < rep.t2 && rep.t2 < rep.t3, "ordering");
    v.require(worst_residual < 1e-10, "residuals < 1e-10");

    std::size_t nonnegative = 0;
    const int points = 10000;
    for (int k = 0; k < points; ++k) {
        // log-spaced in t - 1 over (1e-8, 1e8 - 1]
        const double s = 1e-8 * std::pow((1e8 - 1.0) / 1e-8, k / double(points - 1));
        if (!(chain::f(1.0 + s, fam) < 0.0)) ++nonnegative;
    }
    const double at_end = chain::f(1e8, fam);
    v.detail << " f>=0 at " << nonnegative << " grid points, f(1e8)=" << at_end;
    v.require(nonnegative == 0, "f < 0 on the grid");
    v.require(std::abs(at_end) < 1e-6, "f(1e8) near 0");
}

void p_equals_one(Verdict& v) {
    const chain::AuxFamily fam(1.0);
    double worst = 0.0;
    const int points = 100000;
    for (int k = 1; k <= points; ++k) {
        const double s = 1e-6 * std::pow(99.0 / 1e-6, k / double(points));
        const double t = 1.0 + s;
        const double d = t - 1.0;
        const double ref = d * d * d * d;
        worst = std::max(worst, std::abs(chain::f_chain(t, fam, 1) - ref) / ref);
    }
    v.detail << "max relative error=" << worst;
    v.require(worst < 1e-13, "relative error < 1e-13");
}

void series_suite(Verdict& v) {
    double trig = 0.0;
    {
        oracle::ScopedDigits digits(40);
        for (int i = 0; i <= 10000; ++i) {
            const double x = 0.01 + (kPi / 2.0 - 0.01) * i / 10000.0;
            const oracle::Real xr = x;
            const oracle::Real s = sin(xr);
            trig = std::max(trig, static_cast<double>(abs(series::cot_series(x, 40) - cos(xr) / s)));
            trig = std::max(trig, static_cast<double>(abs(series::csc2_series(x, 40) - 1 / (s * s))));
        }
    }
    v.require(trig < 1e-12, "cot/csc2 within 1e-12");

    bool signs = true;
    const auto at = testing_oracles::akiyama_tanigawa(2 * series::kMaxOrder);
    for (int n = 1; n <= 60; ++n) {
        const auto b = series::bernoulli_even(n);
        signs = signs && (n % 2 == 1 ? b > 0 : b < 0) && b == at[static_cast<std::size_t>(2 * n)];
    }
    v.require(signs, "Bernoulli sign law");

    double zeta = 0.0;
    for (int q = 1; q <= 5; ++q) zeta = std::max(zeta, std::abs(series::zeta_even(q) - testing_oracles::zeta_partial(q, 2'000'000)));
    v.require(zeta < 1e-10, "zeta vs partial sums");

    bool identity = true;
    const auto xcot = testing_oracles::x_cot_x(40);
    for (int n = 1; n <= 40; ++n) {
        const auto c = series::cot_coefficient(n);
        identity = identity && c == -xcot[static_cast<std::size_t>(2 * n)] &&
                   series::csc2_coefficient(n) == series::BigRational(2 * n - 1) * c &&
                   series::ratio_coefficient(n) == series::BigRational(2 * n) * c;
    }
    v.require(identity, "exact coefficient identities");
    v.detail << "trig error=" << trig << " zeta error=" << zeta << " signs=" << (signs ? "ok" : "bad")
             << " identities=" << (identity ? "ok" : "bad");
}

void reparametrization(Verdict& v) {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(1.0, 1e6);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double x = u(gen);
        if (!(x > 1.0)) x = std::nextafter(1.0, 2.0);
        const PositivePair p(x, 1.0);
        const double a = classical_mean(MeanKind::of(MeanTag::arithmetic), p);
        const double raw = (seiffert_T(p) - a) / (classical_mean(MeanKind::of(MeanTag::contra_harmonic), p) - a);
        const double t = (x - 1.0) / (x + 1.0);
        const double t_form = sharp::ratio_TA_CA(t);
        const double th = std::atan(t);
        const double theta_form = std::cos(th) / std::sin(th) / th - 1.0 / (std::sin(th) * std::sin(th)) + 1.0;
        worst = std::max({worst, std::abs(raw - t_form) / t_form, std::abs(raw - theta_form) / t_form,
                          std::abs(t_form - theta_form) / t_form});
    }
    v.detail << "max pairwise relative gap=" << worst;
    v.require(worst < 1e-12, "pairwise agreement 1e-12");
}

void stability(Verdict& v) {
    oracle::ScopedDigits digits(100);
    double worst = 0.0;
    for (double scale : {1e-3, 1.0, 7.5, 1e4}) {
        const double a = scale * (1.0 + 1e-12);
        const double b = scale * (1.0 - 1e-12);
        worst = std::max(worst, oracle::relative_error(seiffert_T(PositivePair(a, b)), oracle::seiffert_T(a, b)));
    }
    v.detail << "max relative error=" << worst;
    v.require(worst < 1e-12, "relative error < 1e-12");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Verdict&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "lambda recovered by root finding", lambda_recovery},
        {2, "ratio infimum and supremum from a dense scan", ratio_extremes},
        {3, "both double inequalities on 10^6 samples", bulk_verification},
        {4, "sharpness of lambda and 4/pi - 1", sharpness},
        {5, "critical points and sign of f at p = lambda", proof_structure},
        {6, "f1 = (t - 1)^4 at p = 1", p_equals_one},
        {7, "series, Bernoulli and zeta checks", series_suite},
        {8, "mean ratio, t-form and theta-form agree", reparametrization},
        {9, "Seiffert mean next to the diagonal", stability},
    };
    std::cout.precision(10);
    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        v.detail.precision(6);
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | " << v.detail.str() << '\n';
        if (!v.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
