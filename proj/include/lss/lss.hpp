#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lss/cube.hpp"
#include "lss/metrics.hpp"
#include "lss/raster.hpp"

namespace lss {

enum class Aggregator { MEAN, MEDIAN, MIN, MAX, MIDPOINT, MAD, CONV };
enum class Padding { REPLICATE, ZERO_SKIP };

Aggregator parse_aggregator(const std::string& text);
std::string aggregator_name(Aggregator agg);
Padding parse_padding(const std::string& text);

struct LssConfig {
  int window = 3;  // odd, >= 3
  MetricSpec metric;
  Aggregator aggregator = Aggregator::MEDIAN;
  // Required iff aggregator == CONV; window x window weights.
  std::optional<Grid<float>> kernel;
  Padding padding = Padding::REPLICATE;
};

void validate(const LssConfig& config);

// Uniform kernel summing to 1 over the non-center entries; center weight 0.
// CONV with this kernel reproduces MEAN on full patches.
Grid<float> mean_kernel(int window);

// Window of distances from each neighbor spectrum to the center spectrum.
// The center entry is always excluded from aggregation; ZERO_SKIP also
// excludes entries outside the image, REPLICATE clamps them to the border.
struct SimilarityPatch {
  int window = 0;
  std::vector<float> values;         // window*window, row-major
  std::vector<std::uint8_t> excluded;

  float value(int u, int v) const {  // offsets in [-window/2, window/2]
    int k = window / 2;
    return values[static_cast<std::size_t>(u + k) * window + (v + k)];
  }
  bool is_excluded(int u, int v) const {
    int k = window / 2;
    return excluded[static_cast<std::size_t>(u + k) * window + (v + k)] != 0;
  }
};

SimilarityPatch similarity_patch(const HsiCube& cube, int row, int col,
                                 const LssConfig& config);

// Collapses the non-excluded entries to one response. MEDIAN of an even
// count is the mean of the two middle values; MAD is the median absolute
// deviation from the median; CONV applies the kernel as a convolution
// (weights mirrored in both axes), excluded entries contributing 0.
// Throws DataError when every entry is excluded.
float aggregate(const SimilarityPatch& patch, const LssConfig& config);

// Full per-pixel response map. `exclude_bands` lists band indices removed
// from every spectrum before distances are computed. Work is split into row
// stripes; the result is bit-identical for any thread count (0 = hardware).
// Requires window <= 2*min(rows, cols) - 1.
EdgeMap edge_map(const HsiCube& cube, const LssConfig& config,
                 std::span<const int> exclude_bands = {}, int threads = 0);

// Parses "0-5,107-112,200" into a sorted unique index list.
std::vector<int> parse_band_list(const std::string& text);

}  // namespace lss
