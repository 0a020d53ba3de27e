#pragma once

#include <vector>

#include "lss/cube.hpp"
#include "lss/raster.hpp"

namespace lss {

// Normalized mutual information 2*I(B;E)/(H(B)+H(E)) between each band
// (quantized to `bins` equal-width levels between its min and max) and the
// binary edge truth. A constant band scores 0; a constant truth is an error.
// Values lie in [0, 1] and are invariant to bijective bin relabeling.
std::vector<double> band_mi_sensitivity(const HsiCube& cube,
                                        const GroundTruthEdges& truth,
                                        int bins = 64);

}  // namespace lss
