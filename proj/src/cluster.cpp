#include "lss/cluster.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "parallel.hpp"

namespace lss {
namespace {

double dist2(std::span<const float> x, const std::vector<double>& c) {
  double s = 0.0;
  for (std::size_t b = 0; b < c.size(); ++b) {
    double d = static_cast<double>(x[b]) - c[b];
    s += d * d;
  }
  return s;
}

}  // namespace

ClusterMap kmeans_cluster(const HsiCube& cube, int k, const Mask* mask,
                          std::uint64_t seed, int max_iter, int threads) {
  if (k < 2) throw DataError("kmeans_cluster: k must be >= 2");
  if (max_iter < 1) throw DataError("kmeans_cluster: max_iter must be >= 1");
  const int rows = cube.rows(), cols = cube.cols(), bands = cube.bands();
  if (rows <= 0 || cols <= 0) throw DataError("kmeans_cluster: empty cube");
  if (mask && (mask->rows() != rows || mask->cols() != cols))
    throw DataError("kmeans_cluster: mask dimensions do not match cube");

  // Row-major list of unmasked pixels; all later iteration respects it.
  std::vector<long> active;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!mask || !mask->at(r, c)) active.push_back(static_cast<long>(r) * cols + c);
  const long m = static_cast<long>(active.size());
  if (m < k)
    throw DataError("kmeans_cluster: only " + std::to_string(m) +
                    " unmasked pixels for k=" + std::to_string(k));

  auto spectrum_of = [&](long flat) {
    return cube.spectrum(static_cast<int>(flat / cols), static_cast<int>(flat % cols));
  };

  // k-means++ seeding.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> centroids;
  centroids.reserve(k);
  {
    std::uniform_int_distribution<long> pick(0, m - 1);
    auto first = spectrum_of(active[pick(rng)]);
    centroids.emplace_back(first.begin(), first.end());
    std::vector<double> d2(m);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int j = 1; j < k; ++j) {
      double total = 0.0;
      for (long i = 0; i < m; ++i) {
        double best = dist2(spectrum_of(active[i]), centroids[0]);
        for (std::size_t cc = 1; cc < centroids.size(); ++cc)
          best = std::min(best, dist2(spectrum_of(active[i]), centroids[cc]));
        d2[i] = best;
        total += best;
      }
      long chosen;
      if (total > 0.0) {
        double u = unit(rng) * total;
        double acc = 0.0;
        chosen = m - 1;
        for (long i = 0; i < m; ++i) {
          acc += d2[i];
          if (acc > u) {
            chosen = i;
            break;
          }
        }
      } else {
        chosen = pick(rng);
      }
      auto s = spectrum_of(active[chosen]);
      centroids.emplace_back(s.begin(), s.end());
    }
  }

  ClusterMap result;
  result.k = k;
  result.labels = Grid<std::int32_t>(rows, cols, -1);
  result.masked = mask ? *mask : Mask(rows, cols, 0);

  std::vector<std::int32_t> labels(m, -1);
  std::vector<double> point_d2(m);

  for (int iter = 0; iter < max_iter; ++iter) {
    // Assignment: parallel over the active list; ties to the lowest index.
    std::atomic<long> changed{0};
    detail::parallel_rows(static_cast<int>(m), threads, [&](int i0, int i1) {
      long local_changed = 0;
      for (int i = i0; i < i1; ++i) {
        auto s = spectrum_of(active[i]);
        int best = 0;
        double best_d = dist2(s, centroids[0]);
        for (int cc = 1; cc < k; ++cc) {
          double d = dist2(s, centroids[cc]);
          if (d < best_d) {
            best_d = d;
            best = cc;
          }
        }
        if (labels[i] != best) ++local_changed;
        labels[i] = best;
        point_d2[i] = best_d;
      }
      changed += local_changed;
    });

    // Objective in fixed pixel order, independent of the stripe layout.
    double objective = 0.0;
    for (long i = 0; i < m; ++i) objective += point_d2[i];
    result.objective_history.push_back(objective);
    result.iterations = iter + 1;
    if (changed.load() == 0 && iter > 0) break;

    // Update: ordered accumulation; an emptied cluster keeps its centroid.
    std::vector<std::vector<double>> sums(k, std::vector<double>(bands, 0.0));
    std::vector<long> counts(k, 0);
    for (long i = 0; i < m; ++i) {
      auto s = spectrum_of(active[i]);
      auto& acc = sums[labels[i]];
      for (int b = 0; b < bands; ++b) acc[b] += s[b];
      ++counts[labels[i]];
    }
    for (int cc = 0; cc < k; ++cc)
      if (counts[cc] > 0)
        for (int b = 0; b < bands; ++b)
          centroids[cc][b] = sums[cc][b] / static_cast<double>(counts[cc]);
  }

  for (long i = 0; i < m; ++i)
    result.labels.at(static_cast<int>(active[i] / cols),
                     static_cast<int>(active[i] % cols)) = labels[i];
  result.centroids.resize(k);
  for (int cc = 0; cc < k; ++cc) {
    result.centroids[cc].resize(bands);
    for (int b = 0; b < bands; ++b)
      result.centroids[cc][b] = static_cast<float>(centroids[cc][b]);
  }
  return result;
}

void fill_masked_labels(ClusterMap& map) {
  const int rows = map.labels.rows(), cols = map.labels.cols();
  Grid<std::int32_t> filled = map.labels;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (map.labels.at(r, c) != -1) continue;
      // Expand Chebyshev rings; a ring at radius ring has Euclidean distance
      // at least ring, so the scan can stop once that exceeds the best hit.
      double best_d2 = std::numeric_limits<double>::infinity();
      std::int32_t best_label = -1;
      int limit = std::max(rows, cols);
      for (int ring = 1; ring <= limit; ++ring) {
        if (best_label != -1 &&
            static_cast<double>(ring) * ring > best_d2) break;
        for (int dr = -ring; dr <= ring; ++dr)
          for (int dc = -ring; dc <= ring; ++dc) {
            if (std::max(std::abs(dr), std::abs(dc)) != ring) continue;
            int rr = r + dr, cc = c + dc;
            if (!map.labels.in_bounds(rr, cc)) continue;
            if (map.labels.at(rr, cc) == -1) continue;
            double d2v = static_cast<double>(dr) * dr + static_cast<double>(dc) * dc;
            if (d2v < best_d2) {
              best_d2 = d2v;
              best_label = map.labels.at(rr, cc);
            }
          }
      }
      filled.at(r, c) = best_label;
    }
  map.labels = filled;
}

long best_permutation_mismatches(const Grid<std::int32_t>& labels,
                                 const Grid<std::int32_t>& truth, int k,
                                 const Mask* ignore) {
  if (labels.rows() != truth.rows() || labels.cols() != truth.cols())
    throw DataError("best_permutation_mismatches: dimensions differ");
  if (k < 1 || k > 8)
    throw DataError("best_permutation_mismatches: k must lie in [1, 8]");
  if (ignore && (ignore->rows() != labels.rows() || ignore->cols() != labels.cols()))
    throw DataError("best_permutation_mismatches: ignore mask dimensions differ");

  // Joint counts, then the best of all k! label-to-truth assignments.
  std::vector<long> joint(static_cast<std::size_t>(k) * k, 0);
  long usable = 0;
  for (int r = 0; r < labels.rows(); ++r)
    for (int c = 0; c < labels.cols(); ++c) {
      if (ignore && ignore->at(r, c)) continue;
      std::int32_t a = labels.at(r, c), t = truth.at(r, c);
      if (a < 0 || t < 0) continue;
      if (a >= k || t >= k)
        throw DataError("best_permutation_mismatches: label outside [0, k)");
      ++joint[static_cast<std::size_t>(a) * k + t];
      ++usable;
    }

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  long best_agree = -1;
  do {
    long agree = 0;
    for (int a = 0; a < k; ++a)
      agree += joint[static_cast<std::size_t>(a) * k + perm[a]];
    best_agree = std::max(best_agree, agree);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return usable - best_agree;
}

}  // namespace lss
