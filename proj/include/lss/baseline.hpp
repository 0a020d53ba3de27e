#pragma once

#include <string>
#include <vector>

#include "lss/cube.hpp"
#include "lss/raster.hpp"

namespace lss {

// Gradient baselines use central differences (spacing 2, halved) on the
// spectral Euclidean distance; Sobel baselines filter each band and take the
// Euclidean norm of the responses across bands. Borders replicate.
enum class BaselineKind {
  GRAD_X,        // EU(spectrum(i, j+1), spectrum(i, j-1)) / 2
  GRAD_Y,
  GRAD_XY_MEAN,  // (GRAD_X + GRAD_Y) / 2
  GRAD_UP,       // EU(spectrum(i-1, j+1), spectrum(i+1, j-1)) / 2
  GRAD_DOWN,     // EU(spectrum(i-1, j-1), spectrum(i+1, j+1)) / 2
  GRAD,          // sqrt(GRAD_X^2 + GRAD_Y^2)
  GRAD_UD_MEAN,  // (GRAD_UP + GRAD_DOWN) / 2
  GRAD_ALL6,     // (2*GRAD_X + 2*GRAD_Y + GRAD_UP + GRAD_DOWN) / 6
  SOBEL_X,
  SOBEL_Y,
  SOBEL_XY,      // sqrt(SOBEL_X^2 + SOBEL_Y^2)
};

BaselineKind parse_baseline(const std::string& text);
std::string baseline_name(BaselineKind kind);
const std::vector<BaselineKind>& all_baselines();

// Requires at least a 3x3 image. Row-parallel with the same determinism
// contract as edge_map.
EdgeMap baseline_edge_map(const HsiCube& cube, BaselineKind kind,
                          int threads = 0);

}  // namespace lss
