// Reference implementations of the sweeps. The OpenMP kernels in
// sweep_omp.cpp must reproduce these results exactly.
#include <vector>

#include "seiffert/ratio.hpp"
#include "seiffert/sweep.hpp"
#include "sweep_detail.hpp"

namespace seiffert::sweep {

SweepResult run_serial(const SuiteSpec& spec, std::span<const double> ratios) {
    SweepResult result;
    for (std::size_t i = 0; i < ratios.size(); ++i) accumulate(result, evaluate_sample(spec, ratios[i]), i);
    return result;
}

RatioScan scan_ratio_serial(std::span<const double> ascending_t) {
    RatioScan scan;
    scan.n = ascending_t.size();
    double prev = 0.0;
    for (std::size_t i = 0; i < ascending_t.size(); ++i) {
        const double r = sharp::ratio_value(ascending_t[i]).ratio;
        detail::offer_min(scan.inf, r, i);
        detail::offer_max(scan.sup, r, i);
        if (i > 0 && !(r < prev)) {
            ++scan.monotonicity_breaks;
            if (scan.first_break == npos) scan.first_break = i - 1;
        }
        prev = r;
    }
    return scan;
}

}  // namespace seiffert::sweep
