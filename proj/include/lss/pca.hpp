#pragma once

#include <vector>

#include "lss/cube.hpp"

namespace lss {

struct PcaModel {
  std::vector<double> mean;                // bands
  std::vector<double> components;          // count x bands, row-major, orthonormal
  std::vector<double> explained_variance;  // non-increasing, >= 0
  int bands = 0;
  int count = 0;

  const double* component(int i) const { return components.data() + static_cast<std::size_t>(i) * bands; }
};

// Exact eigendecomposition of the band covariance (normalized by P-1).
// Components are sorted by descending eigenvalue; each is signed so its
// largest-magnitude element is positive. Requires 1 <= components <= bands
// and at least two pixels.
PcaModel pca_fit(const HsiCube& cube, int components);

// Projects each spectrum onto the components: y = C * (x - mean). Output has
// model.count bands and no wavelength table.
HsiCube pca_project(const HsiCube& cube, const PcaModel& model);

}  // namespace lss
