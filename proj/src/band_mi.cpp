#include "lss/band_mi.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lss/error.hpp"

namespace lss {
namespace {

double entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

}  // namespace

std::vector<double> band_mi_sensitivity(const HsiCube& cube,
                                        const GroundTruthEdges& truth,
                                        int bins) {
  if (bins < 2) throw DataError("band_mi_sensitivity: bins must be >= 2");
  const Mask& e = truth.mask;
  if (e.rows() != cube.rows() || e.cols() != cube.cols())
    throw DataError("band_mi_sensitivity: truth dimensions do not match cube");
  const double n = static_cast<double>(e.size());

  long edge_count = 0;
  for (int r = 0; r < e.rows(); ++r)
    for (int c = 0; c < e.cols(); ++c)
      if (e.at(r, c)) ++edge_count;
  if (edge_count == 0 || edge_count == static_cast<long>(e.size()))
    throw DataError("band_mi_sensitivity: edge truth is constant");

  std::vector<double> pe = {1.0 - edge_count / n, edge_count / n};
  const double he = entropy(pe);

  std::vector<double> out(cube.bands());
  std::vector<long> joint(static_cast<std::size_t>(bins) * 2);
  for (int b = 0; b < cube.bands(); ++b) {
    float lo = cube.at(0, 0, b), hi = lo;
    for (int r = 0; r < cube.rows(); ++r)
      for (int c = 0; c < cube.cols(); ++c) {
        lo = std::min(lo, cube.at(r, c, b));
        hi = std::max(hi, cube.at(r, c, b));
      }
    if (!(hi > lo)) {  // constant band carries no information
      out[b] = 0.0;
      continue;
    }
    std::fill(joint.begin(), joint.end(), 0L);
    const double scale = bins / (static_cast<double>(hi) - lo);
    for (int r = 0; r < cube.rows(); ++r)
      for (int c = 0; c < cube.cols(); ++c) {
        int bin = static_cast<int>((static_cast<double>(cube.at(r, c, b)) - lo) * scale);
        if (bin > bins - 1) bin = bins - 1;
        if (bin < 0) bin = 0;
        ++joint[static_cast<std::size_t>(bin) * 2 + (e.at(r, c) ? 1 : 0)];
      }

    std::vector<double> pb(bins, 0.0);
    double mi = 0.0;
    for (int i = 0; i < bins; ++i)
      pb[i] = (joint[i * 2] + joint[i * 2 + 1]) / n;
    for (int i = 0; i < bins; ++i)
      for (int j = 0; j < 2; ++j) {
        double pij = joint[i * 2 + j] / n;
        if (pij > 0.0) mi += pij * std::log(pij / (pb[i] * pe[j]));
      }
    double hb = entropy(pb);
    out[b] = (hb + he) > 0.0 ? 2.0 * mi / (hb + he) : 0.0;
    out[b] = std::clamp(out[b], 0.0, 1.0);
  }
  return out;
}

}  // namespace lss
