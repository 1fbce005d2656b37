#include "seiffert/ratio.hpp"

#include <cmath>
#include <stdexcept>

namespace seiffert::sharp {

RatioValue ratio_value(double t) noexcept {
    if (t < kRatioSeriesThreshold) {
        const double s = t * t;
        double acc = 0.0;
        for (std::size_t j = kRatioSeries.size() - 1; j >= 1; --j) acc = acc * s - kRatioSeries[j];
        const double excess = acc * s;
        return {kRatioSeries[0] - excess, excess};
    }
    const double r = (t / std::atan(t) - 1.0) / (t * t);
    return {r, 1.0 / 3.0 - r};
}

double ratio_TA_CA(double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("ratio_TA_CA: require 0 < t < 1");
    return ratio_value(t).ratio;
}

double ratio_excess(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("ratio_excess: require 0 <= t <= 1");
    return ratio_value(t).excess;
}

}  // namespace seiffert::sharp
