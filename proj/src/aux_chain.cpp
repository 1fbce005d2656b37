#include "seiffert/aux_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "seiffert/means.hpp"
#include "seiffert/ratio.hpp"

namespace seiffert::chain {

namespace {

constexpr double kPi = std::numbers::pi;

void check_level(int level) {
    if (level < 1 || level > 4)
        throw std::domain_error("f_chain: level must lie in 1..4, got " + std::to_string(level));
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    std::vector<double> grid(points);
    const double step = std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) grid[k] = lo * std::exp(step * static_cast<double>(k));
    grid.back() = hi;
    return grid;
}

struct Root {
    double t;
    double width;
};

template <class Fn>
Root bisect(Fn&& fn, double lo, double hi, double width) {
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (fn(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), hi - lo};
}

// Decreasing on grid points below `turn`, increasing above it. Pairs that
// straddle `turn` are skipped.
template <class Fn>
void require_valley(Fn&& fn, std::span<const double> ts, double turn, const char* name) {
    double prev = fn(ts.front());
    for (std::size_t k = 1; k < ts.size(); ++k) {
        const double cur = fn(ts[k]);
        const bool below = ts[k] <= turn;
        const bool above = ts[k - 1] >= turn;
        if ((below && !(cur < prev)) || (above && !(cur > prev)))
            throw SearchFailure(std::string(name) + " is not decreasing-then-increasing around t = " +
                                std::to_string(turn) + " (violation near t = " + std::to_string(ts[k]) + ")");
        prev = cur;
    }
}

constexpr double kScanLo = 1e-4;       // smallest t - 1 on the scan grid
constexpr double kScanHi = 1e6 - 1.0;  // largest t - 1
constexpr std::size_t kScanPoints = 4001;
constexpr double kBracketWidth = 1e-12;

}  // namespace

AuxFamily::AuxFamily(double p) : p_(p) {
    if (!(p > 0.5 && p <= 1.0))
        throw std::domain_error("AuxFamily: p must lie in (1/2, 1], got " + std::to_string(p));
    const auto printed = printed_chain_coefficients(p);
    c1_ = printed[0][0];
    c2_ = -printed[1][0];
    c3_ = printed[2][0];
    for (std::size_t level = 0; level < 4; ++level) {
        double sum = 0.0;
        for (double c : printed[level]) sum += c;
        endpoints_[level] = sum;
    }
}

double AuxFamily::Q(double t) const noexcept {
    const double u = p_ * t + (1.0 - p_);
    const double v = p_ + (1.0 - p_) * t;
    return u * u + u * v + v * v;
}

double AuxFamily::endpoint(int level) const {
    check_level(level);
    return endpoints_[static_cast<std::size_t>(level - 1)];
}

double f(double t, const AuxFamily& fam) {
    if (!(t > 1.0) || !std::isfinite(t)) throw std::domain_error("f: require finite t > 1");
    // Same function as 4 atan(tau) - 3 (t^2 - 1)/Q with tau = (t-1)/(t+1),
    // rewritten through r(tau) so that nothing cancels as t -> 1.
    const double s = t - 1.0;
    const double tau = s / (t + 1.0);
    const double gap = 4.0 * fam.p() * (1.0 - fam.p()) / 3.0;
    return 3.0 * s * s * std::atan(tau) * (sharp::ratio_excess(tau) - gap) / fam.Q(t);
}

double f_limit_at_infinity(double p) { return kPi - 3.0 / (p * p - p + 1.0); }

double f_chain(double t, const AuxFamily& fam, int level) {
    check_level(level);
    if (!(t >= 1.0) || !std::isfinite(t)) throw std::domain_error("f_chain: require finite t >= 1");
    const double s = t - 1.0;
    const double c1 = fam.c1();
    const double e1 = fam.endpoint(1);
    const double e2 = fam.endpoint(2);
    const double e3 = fam.endpoint(3);
    const double e4 = fam.endpoint(4);
    // Taylor expansion at t = 1; f1' = 4 f2, f2' = 3 f3, f3' = 2 f4, f4' = c1.
    switch (level) {
        case 4: return e4 + c1 * s;
        case 3: return e3 + s * (2.0 * e4 + c1 * s);
        case 2: return e2 + s * (3.0 * e3 + s * (3.0 * e4 + c1 * s));
        default: return e1 + s * (4.0 * e2 + s * (6.0 * e3 + s * (4.0 * e4 + c1 * s)));
    }
}

double f_chain_monomial(double t, const AuxFamily& fam, int level) {
    check_level(level);
    const auto printed = printed_chain_coefficients(fam.p());
    const auto& coeffs = printed[static_cast<std::size_t>(level - 1)];
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double h1(double t, const AuxFamily& fam) {
    const double q = fam.Q(t);
    return q * q * (1.0 + t * t);
}

double factorization_prefactor(double t, const AuxFamily& fam) {
    return fam.Q(t) / (6.0 * (1.0 + t) * std::atan((t - 1.0) / (t + 1.0)));
}

DerivativeCheck f_derivative_identity_check(const AuxFamily& fam, std::span<const double> grid) {
    DerivativeCheck out;
    double scale = 0.0;
    for (double t : grid) {
        const double h = 1e-6 * std::max(1.0, t);
        if (!(t - h > 1.0)) throw std::domain_error("f_derivative_identity_check: grid point too close to 1");
        const double slope = (f(t + h, fam) - f(t - h, fam)) / (2.0 * h);
        const double target = f_chain(t, fam, 1);
        const double residual = std::abs(slope * h1(t, fam) - target);
        scale = std::max(scale, std::abs(target));
        if (residual > out.max_abs_residual) {
            out.max_abs_residual = residual;
            out.worst_t = t;
        }
    }
    out.max_rel_residual = scale > 0.0 ? out.max_abs_residual / scale : out.max_abs_residual;
    return out;
}

CriticalPointReport locate_critical_points(const AuxFamily& fam) {
    const std::vector<double> offsets = log_grid(kScanLo, kScanHi, kScanPoints);
    std::vector<double> ts(offsets.size());
    std::transform(offsets.begin(), offsets.end(), ts.begin(), [](double s) { return 1.0 + s; });

    auto sign_change = [&](int level) {
        auto fn = [&](double t) { return f_chain(t, fam, level); };
        if (!(fn(ts.front()) < 0.0))
            throw SearchFailure("f" + std::to_string(level) + " is not negative just above t = 1");
        std::size_t k = 1;
        while (k < ts.size() && !(fn(ts[k]) > 0.0)) ++k;
        if (k == ts.size())
            throw SearchFailure("f" + std::to_string(level) + " has no sign change on (1, 1e6]");
        for (std::size_t j = k; j < ts.size(); ++j)
            if (!(fn(ts[j]) > 0.0))
                throw SearchFailure("f" + std::to_string(level) + " changes sign more than once");
        return bisect(fn, ts[k - 1], ts[k], kBracketWidth);
    };

    CriticalPointReport report;
    const Root r0 = sign_change(4);
    const Root r1 = sign_change(3);
    const Root r2 = sign_change(2);
    const Root r3 = sign_change(1);
    report.t0 = r0.t;
    report.t1 = r1.t;
    report.t2 = r2.t;
    report.t3 = r3.t;
    report.bracket_width = std::max({r0.width, r1.width, r2.width, r3.width});
    report.residuals = {std::abs(f_chain(r0.t, fam, 4)), std::abs(f_chain(r1.t, fam, 3)),
                        std::abs(f_chain(r2.t, fam, 2)), std::abs(f_chain(r3.t, fam, 1))};

    if (!(1.0 < report.t0 && report.t0 < report.t1 && report.t1 < report.t2 && report.t2 < report.t3))
        throw SearchFailure("critical points are not ordered 1 < t0 < t1 < t2 < t3");

    require_valley([&](double t) { return f_chain(t, fam, 3); }, ts, report.t0, "f3");
    require_valley([&](double t) { return f_chain(t, fam, 2); }, ts, report.t1, "f2");
    require_valley([&](double t) { return f_chain(t, fam, 1); }, ts, report.t2, "f1");
    require_valley([&](double t) { return f(t, fam); }, ts, report.t3, "f");
    return report;
}

Witness counterexample_witness(double p, WitnessSide side) {
    if (!(p > 0.5 && p < 1.0)) throw std::domain_error("counterexample_witness: require 1/2 < p < 1");
    auto probe = [p](double ratio) {
        const PositivePair pair(ratio, 1.0);
        return Witness{ratio, blend_mean_J(p, pair), seiffert_T(pair)};
    };

    if (side == WitnessSide::above_lambda) {
        if (!(f_limit_at_infinity(p) > 0.0))
            throw std::domain_error("counterexample_witness: above_lambda requires p > lambda");
        for (double ratio : log_grid(1.01, 1e12, 6001)) {
            const Witness w = probe(ratio);
            if (w.blend_mean > w.seiffert) return w;
        }
        throw SearchFailure("no ratio in (1, 1e12] with the blend mean above T for p = " + std::to_string(p));
    }

    for (double s = 0.25; s > 1e-9; s *= 0.98) {
        const Witness w = probe(1.0 + s);
        if (w.seiffert > w.blend_mean) return w;
    }
    throw SearchFailure("no ratio near 1 with T above the blend mean for p = " + std::to_string(p));
}

}  // namespace seiffert::chain
