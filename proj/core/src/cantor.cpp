#include "contana/cantor.hpp"

#include <cmath>
#include <cstdint>

#include "contana/errors.hpp"

namespace contana {

IntervalCollection cantor_stage_cover(int k) {
  if (k < 0 || k > 30) throw DomainError("cantor stage must be in [0, 30]");
  const auto scale = static_cast<std::uint64_t>(std::llround(std::pow(3.0, k)));
  std::vector<Pair> pairs;
  pairs.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    // Ternary digits of the left endpoint: bit i of mask selects digit 2.
    std::uint64_t left = 0;
    for (int i = k - 1; i >= 0; --i) left = 3 * left + (((mask >> i) & 1u) ? 2 : 0);
    const double s = static_cast<double>(scale);
    const double x = left == 0 ? 0.0 : std::nextafter(static_cast<double>(left) / s, -kInf);
    const double y =
        left + 1 == scale ? 1.0 : std::nextafter(static_cast<double>(left + 1) / s, kInf);
    pairs.push_back({x, y});
  }
  return IntervalCollection(std::move(pairs));
}

}  // namespace contana
