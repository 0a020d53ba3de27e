#pragma once

#include <cstdint>
#include <vector>

#include "lss/cube.hpp"
#include "lss/raster.hpp"

namespace lss {

struct ClusterMap {
  Grid<std::int32_t> labels;  // -1 for masked pixels
  Mask masked;
  int k = 0;
  std::vector<Spectrum> centroids;        // k x bands
  std::vector<double> objective_history;  // WCSS after each assignment pass
  int iterations = 0;
};

// Lloyd's algorithm with Euclidean distance on the unmasked pixels, seeded
// deterministically (k-means++). The assignment pass is row-parallel; the
// update pass accumulates in fixed pixel order, so results are bit-identical
// for any thread count. Ties go to the lowest centroid index. Requires
// k >= 2 and at least k unmasked pixels.
ClusterMap kmeans_cluster(const HsiCube& cube, int k, const Mask* mask,
                          std::uint64_t seed, int max_iter = 100,
                          int threads = 0);

// Assigns each masked pixel the label of its nearest unmasked pixel
// (Euclidean image distance, ties broken in row-major order).
void fill_masked_labels(ClusterMap& map);

// Mismatch count against a reference labeling under the best label
// permutation (k <= 8). Pixels set in `ignore` or labeled -1 are skipped.
long best_permutation_mismatches(const Grid<std::int32_t>& labels,
                                 const Grid<std::int32_t>& truth, int k,
                                 const Mask* ignore = nullptr);

}  // namespace lss
