#include "lss/evaluate.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace lss {
namespace {

// "Within 1.5 px" is exactly the 8-neighborhood plus the pixel itself:
// Chebyshev distance 1 implies Euclidean <= sqrt(2) < 1.5, and Chebyshev
// distance 2 implies Euclidean >= 2.
bool has_neighbor(const Mask& mask, int r, int c) {
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      int rr = r + dr, cc = c + dc;
      if (mask.in_bounds(rr, cc) && mask.at(rr, cc)) return true;
    }
  return false;
}

}  // namespace

EvalReport evaluate(const BinaryEdgeMap& actual, const GroundTruthEdges& ideal,
                    double alpha) {
  const Mask& a = actual.mask;
  const Mask& g = ideal.mask;
  if (a.rows() != g.rows() || a.cols() != g.cols())
    throw DataError("evaluate: actual and ideal dimensions differ");
  if (!(alpha > 0.0)) throw DataError("evaluate: alpha must be positive");

  std::vector<std::pair<int, int>> ideal_px;
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (g.at(r, c)) ideal_px.emplace_back(r, c);
  if (ideal_px.empty())
    throw DataError("evaluate: ideal edge set is empty, FOM undefined");

  EvalReport report;
  report.alpha = alpha;
  report.n_ideal = static_cast<long>(ideal_px.size());

  double sum = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (!a.at(r, c)) continue;
      ++report.n_actual;
      if (!has_neighbor(g, r, c)) ++report.fac;
      double d2;
      if (g.at(r, c)) {
        d2 = 0.0;
      } else {
        d2 = std::numeric_limits<double>::infinity();
        for (const auto& [ir, ic] : ideal_px) {
          double dr = r - ir, dc = c - ic;
          double cand = dr * dr + dc * dc;
          if (cand < d2) d2 = cand;
        }
      }
      sum += 1.0 / (1.0 + alpha * d2);
    }

  for (const auto& [ir, ic] : ideal_px)
    if (!has_neighbor(a, ir, ic)) ++report.mc;

  long normalizer = std::max(report.n_ideal, report.n_actual);
  report.fom = report.n_actual == 0 ? 0.0 : sum / static_cast<double>(normalizer);
  return report;
}

}  // namespace lss
