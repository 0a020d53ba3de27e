#include "lss/binarize.hpp"

#include <array>
#include <cmath>

namespace lss {

BinaryEdgeMap otsu_threshold(const EdgeMap& map) {
  if (map.empty()) throw DataError("otsu_threshold: empty map");
  for (std::size_t i = 0; i < map.size(); ++i)
    if (!std::isfinite(map.data()[i]))
      throw DataError("otsu_threshold: non-finite value in map");

  float lo = map.data()[0], hi = map.data()[0];
  for (std::size_t i = 0; i < map.size(); ++i) {
    lo = std::min(lo, map.data()[i]);
    hi = std::max(hi, map.data()[i]);
  }

  BinaryEdgeMap result;
  result.mask = Mask(map.rows(), map.cols(), 0);
  if (lo == hi) {
    result.threshold = lo;
    result.degenerate = true;
    return result;
  }

  constexpr int kLevels = 256;
  std::array<long, kLevels> hist{};
  const double range = static_cast<double>(hi) - static_cast<double>(lo);
  for (std::size_t i = 0; i < map.size(); ++i) {
    int bin = static_cast<int>((static_cast<double>(map.data()[i]) - lo) / range *
                               kLevels);
    if (bin > kLevels - 1) bin = kLevels - 1;
    if (bin < 0) bin = 0;
    ++hist[bin];
  }

  const double total = static_cast<double>(map.size());
  double mu_total = 0.0;
  for (int t = 0; t < kLevels; ++t) mu_total += t * (hist[t] / total);

  // Maximize between-class variance; strict > keeps the lowest tied level.
  int best_t = 0;
  double best_sigma = -1.0;
  double w0 = 0.0, mu0_acc = 0.0;
  for (int t = 0; t < kLevels - 1; ++t) {
    double p = hist[t] / total;
    w0 += p;
    mu0_acc += t * p;
    if (w0 <= 0.0) continue;
    double w1 = 1.0 - w0;
    if (w1 <= 0.0) break;
    double mu0 = mu0_acc / w0;
    double mu1 = (mu_total - mu0_acc) / w1;
    double sigma = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (sigma > best_sigma) {
      best_sigma = sigma;
      best_t = t;
    }
  }

  // Real-valued threshold at the upper edge of the chosen level.
  result.threshold = static_cast<float>(
      lo + range * (static_cast<double>(best_t) + 1.0) / kLevels);
  for (int r = 0; r < map.rows(); ++r)
    for (int c = 0; c < map.cols(); ++c)
      result.mask.at(r, c) = map.at(r, c) > result.threshold ? 1 : 0;
  return result;
}

}  // namespace lss
