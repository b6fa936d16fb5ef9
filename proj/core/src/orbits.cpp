#include "autgrowth/orbits.hpp"

namespace ag {

GrowthTable OrbitPartition::class_count_table() const {
  GrowthTable t;
  t.cumulative = true;
  t.kind = TableKind::upper_bound;
  t.counts.assign(radius + 1, 0);
  for (size_t m : class_min_length)
    if (m <= radius) ++t.counts[m];
  for (size_t n = 1; n <= radius; ++n) t.counts[n] += t.counts[n - 1];
  return t;
}

}  // namespace ag
