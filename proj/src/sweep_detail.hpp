#pragma once

#include <algorithm>
#include <cmath>

#include "seiffert/sweep.hpp"

namespace seiffert::sweep::detail {

// Smaller value wins, ties go to the smaller index; NaN is never offered.
inline void offer_min(Extremum& e, double value, std::size_t index) {
    if (std::isnan(value) || index == npos) return;
    if (e.index == npos || value < e.value || (value == e.value && index < e.index)) e = {value, index};
}

inline void offer_max(Extremum& e, double value, std::size_t index) {
    if (std::isnan(value) || index == npos) return;
    if (e.index == npos || value > e.value || (value == e.value && index < e.index)) e = {value, index};
}

inline void merge_scan(RatioScan& into, const RatioScan& part) {
    into.n += part.n;
    offer_min(into.inf, part.inf.value, part.inf.index);
    offer_max(into.sup, part.sup.value, part.sup.index);
    into.monotonicity_breaks += part.monotonicity_breaks;
    into.first_break = std::min(into.first_break, part.first_break);
}

}  // namespace seiffert::sweep::detail
