#pragma once

#include "contana/collection.hpp"

namespace contana {

// The 2^k closed intervals of length 3^-k left at stage k of the Cantor set
// construction. Endpoints are rounded outward to the adjacent removed gaps,
// where the Cantor function is flat, so each pair rises by exactly 2^-k in
// binary64.
IntervalCollection cantor_stage_cover(int k);

}  // namespace contana
