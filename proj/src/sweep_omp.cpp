#include <cstdint>
#include <vector>

#include <omp.h>

#include "seiffert/ratio.hpp"
#include "seiffert/sweep.hpp"
#include "sweep_detail.hpp"

namespace seiffert::sweep {

SweepResult run_openmp(const SuiteSpec& spec, std::span<const double> ratios) {
    const auto n = static_cast<std::int64_t>(ratios.size());
    SweepResult total;
#pragma omp parallel
    {
        SweepResult local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            accumulate(local, evaluate_sample(spec, ratios[idx]), idx);
        }
#pragma omp critical(seiffert_sweep_merge)
        merge(total, local);
    }
    return total;
}

RatioScan scan_ratio_openmp(std::span<const double> ascending_t) {
    const auto n = static_cast<std::int64_t>(ascending_t.size());
    std::vector<double> values(ascending_t.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        values[idx] = sharp::ratio_value(ascending_t[idx]).ratio;
    }

    RatioScan total;
#pragma omp parallel
    {
        RatioScan local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            ++local.n;
            detail::offer_min(local.inf, values[idx], idx);
            detail::offer_max(local.sup, values[idx], idx);
            if (idx > 0 && !(values[idx] < values[idx - 1])) {
                ++local.monotonicity_breaks;
                if (local.first_break == npos || idx - 1 < local.first_break) local.first_break = idx - 1;
            }
        }
#pragma omp critical(seiffert_scan_merge)
        detail::merge_scan(total, local);
    }
    return total;
}

}  // namespace seiffert::sweep
