#pragma once

#include "lss/raster.hpp"

namespace lss {

struct BinaryEdgeMap {
  Mask mask;
  float threshold = 0.0f;
  // Set when the input map is constant; the mask is then all false.
  bool degenerate = false;
};

// Otsu's method on a 256-level quantization between the map's min and max.
// The threshold maximizing between-class variance is chosen, ties broken
// toward the lowest threshold; mask = (value > threshold).
BinaryEdgeMap otsu_threshold(const EdgeMap& map);

}  // namespace lss
