#include "lss/lss.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "parallel.hpp"

namespace lss {
namespace {

struct Scratch {
  std::vector<float> vals;
  std::vector<float> devs;
};

void fill_patch(const HsiCube& cube, int row, int col, const LssConfig& config,
                float* values, std::uint8_t* excluded) {
  const int k = config.window / 2;
  const int rows = cube.rows(), cols = cube.cols();
  auto center = cube.spectrum(row, col);
  std::size_t idx = 0;
  for (int u = -k; u <= k; ++u) {
    for (int v = -k; v <= k; ++v, ++idx) {
      if (u == 0 && v == 0) {  // center never enters the statistics
        values[idx] = 0.0f;
        excluded[idx] = 1;
        continue;
      }
      int rr = row + u, cc = col + v;
      if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) {
        if (config.padding == Padding::ZERO_SKIP) {
          values[idx] = 0.0f;
          excluded[idx] = 1;
          continue;
        }
        rr = std::clamp(rr, 0, rows - 1);
        cc = std::clamp(cc, 0, cols - 1);
      }
      values[idx] =
          static_cast<float>(distance(cube.spectrum(rr, cc), center, config.metric));
      excluded[idx] = 0;
    }
  }
}

float median_sorted(std::vector<float>& v) {
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  if (v.size() % 2) return v[m];
  return static_cast<float>(
      (static_cast<double>(v[m - 1]) + static_cast<double>(v[m])) / 2.0);
}

float aggregate_raw(const float* values, const std::uint8_t* excluded,
                    const LssConfig& config, Scratch& scratch) {
  const int w = config.window;
  const int n = w * w;
  scratch.vals.clear();
  for (int i = 0; i < n; ++i)
    if (!excluded[i]) scratch.vals.push_back(values[i]);
  if (scratch.vals.empty())
    throw DataError("aggregate: every patch entry is excluded");

  switch (config.aggregator) {
    case Aggregator::MEAN: {
      double acc = 0.0;
      for (float v : scratch.vals) acc += v;
      return static_cast<float>(acc / static_cast<double>(scratch.vals.size()));
    }
    case Aggregator::MEDIAN:
      return median_sorted(scratch.vals);
    case Aggregator::MIN:
      return *std::min_element(scratch.vals.begin(), scratch.vals.end());
    case Aggregator::MAX:
      return *std::max_element(scratch.vals.begin(), scratch.vals.end());
    case Aggregator::MIDPOINT: {
      auto [lo, hi] = std::minmax_element(scratch.vals.begin(), scratch.vals.end());
      return static_cast<float>(
          (static_cast<double>(*lo) + static_cast<double>(*hi)) / 2.0);
    }
    case Aggregator::MAD: {
      float med = median_sorted(scratch.vals);
      scratch.devs.clear();
      for (float v : scratch.vals)
        scratch.devs.push_back(static_cast<float>(
            std::fabs(static_cast<double>(v) - static_cast<double>(med))));
      return median_sorted(scratch.devs);
    }
    case Aggregator::CONV: {
      const Grid<float>& ker = *config.kernel;
      double acc = 0.0;
      for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) {
          int i = r * w + c;
          if (excluded[i]) continue;
          acc += static_cast<double>(values[i]) *
                 static_cast<double>(ker.at(w - 1 - r, w - 1 - c));
        }
      return static_cast<float>(acc);
    }
  }
  throw DataError("aggregate: unknown aggregator");
}

}  // namespace

Aggregator parse_aggregator(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "mean") return Aggregator::MEAN;
  if (s == "median") return Aggregator::MEDIAN;
  if (s == "min") return Aggregator::MIN;
  if (s == "max") return Aggregator::MAX;
  if (s == "midpoint") return Aggregator::MIDPOINT;
  if (s == "mad") return Aggregator::MAD;
  if (s == "conv") return Aggregator::CONV;
  throw UsageError("unknown aggregator '" + text +
                   "' (known: mean, median, min, max, midpoint, mad, conv)");
}

std::string aggregator_name(Aggregator agg) {
  switch (agg) {
    case Aggregator::MEAN: return "mean";
    case Aggregator::MEDIAN: return "median";
    case Aggregator::MIN: return "min";
    case Aggregator::MAX: return "max";
    case Aggregator::MIDPOINT: return "midpoint";
    case Aggregator::MAD: return "mad";
    case Aggregator::CONV: return "conv";
  }
  return "?";
}

Padding parse_padding(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "replicate") return Padding::REPLICATE;
  if (s == "zero-skip" || s == "zeroskip" || s == "zero_skip")
    return Padding::ZERO_SKIP;
  throw UsageError("unknown padding '" + text + "' (known: replicate, zero-skip)");
}

void validate(const LssConfig& config) {
  if (config.window < 3 || config.window % 2 == 0)
    throw UsageError("window must be odd and >= 3, got " +
                     std::to_string(config.window));
  validate(config.metric);
  if (config.aggregator == Aggregator::CONV) {
    if (!config.kernel) throw UsageError("conv aggregator requires a kernel");
    if (config.kernel->rows() != config.window ||
        config.kernel->cols() != config.window)
      throw UsageError("kernel is " + std::to_string(config.kernel->rows()) + "x" +
                       std::to_string(config.kernel->cols()) + " but window is " +
                       std::to_string(config.window));
  } else if (config.kernel) {
    throw UsageError("kernel given but aggregator is not conv");
  }
}

Grid<float> mean_kernel(int window) {
  if (window < 3 || window % 2 == 0)
    throw UsageError("window must be odd and >= 3");
  float w = 1.0f / static_cast<float>(window * window - 1);
  Grid<float> ker(window, window, w);
  ker.at(window / 2, window / 2) = 0.0f;
  return ker;
}

SimilarityPatch similarity_patch(const HsiCube& cube, int row, int col,
                                 const LssConfig& config) {
  validate(config);
  if (row < 0 || row >= cube.rows() || col < 0 || col >= cube.cols())
    throw DataError("similarity_patch: pixel out of bounds");
  SimilarityPatch patch;
  patch.window = config.window;
  patch.values.resize(static_cast<std::size_t>(config.window) * config.window);
  patch.excluded.resize(patch.values.size());
  fill_patch(cube, row, col, config, patch.values.data(), patch.excluded.data());
  return patch;
}

float aggregate(const SimilarityPatch& patch, const LssConfig& config) {
  validate(config);
  if (patch.window != config.window)
    throw DataError("aggregate: patch window does not match config");
  if (patch.values.size() != static_cast<std::size_t>(patch.window) * patch.window ||
      patch.excluded.size() != patch.values.size())
    throw DataError("aggregate: malformed patch");
  Scratch scratch;
  return aggregate_raw(patch.values.data(), patch.excluded.data(), config, scratch);
}

std::vector<int> parse_band_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        int lo = std::stoi(item.substr(0, dash));
        int hi = std::stoi(item.substr(dash + 1));
        if (hi < lo) throw UsageError("descending band range '" + item + "'");
        for (int b = lo; b <= hi; ++b) out.push_back(b);
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad band list item '" + item + "'");
    }
  }
  for (int b : out)
    if (b < 0) throw UsageError("negative band index in band list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeMap edge_map(const HsiCube& cube, const LssConfig& config,
                 std::span<const int> exclude_bands, int threads) {
  validate(config);
  const int rows = cube.rows(), cols = cube.cols();
  if (rows <= 0 || cols <= 0) throw DataError("edge_map: empty cube");
  if (config.window > 2 * std::min(rows, cols) - 1)
    throw DataError("edge_map: window " + std::to_string(config.window) +
                    " too large for a " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " image");

  const HsiCube* src = &cube;
  HsiCube reduced;
  if (!exclude_bands.empty()) {
    std::vector<char> drop(cube.bands(), 0);
    for (int b : exclude_bands) {
      if (b < 0 || b >= cube.bands())
        throw DataError("edge_map: band " + std::to_string(b) +
                        " out of range for " + std::to_string(cube.bands()) + " bands");
      drop[b] = 1;
    }
    std::vector<int> kept;
    for (int b = 0; b < cube.bands(); ++b)
      if (!drop[b]) kept.push_back(b);
    if (kept.empty()) throw DataError("edge_map: all bands excluded");
    reduced = HsiCube(rows, cols, static_cast<int>(kept.size()));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        for (std::size_t i = 0; i < kept.size(); ++i)
          reduced.at(r, c, static_cast<int>(i)) = cube.at(r, c, kept[i]);
    src = &reduced;
  }

  EdgeMap out(rows, cols);
  const int w = config.window;
  detail::parallel_rows(rows, threads, [&](int r0, int r1) {
    std::vector<float> values(static_cast<std::size_t>(w) * w);
    std::vector<std::uint8_t> excluded(values.size());
    Scratch scratch;
    for (int r = r0; r < r1; ++r)
      for (int c = 0; c < cols; ++c) {
        fill_patch(*src, r, c, config, values.data(), excluded.data());
        out.at(r, c) = aggregate_raw(values.data(), excluded.data(), config, scratch);
      }
  });
  return out;
}

}  // namespace lss
