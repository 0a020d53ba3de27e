#pragma once

#include "lss/binarize.hpp"
#include "lss/raster.hpp"

namespace lss {

struct EvalReport {
  long fac = 0;       // actual pixels with no ideal pixel within 1.5 px
  long mc = 0;        // ideal pixels with no actual pixel within 1.5 px
  double fom = 0.0;   // in [0, 1]
  double alpha = 0.0;
  long n_ideal = 0;
  long n_actual = 0;

  double fom100() const { return 100.0 * fom; }
};

// Pratt figure of merit: FOM = (1/I_n) * sum over actual pixels of
// 1/(1 + alpha*d^2), d the Euclidean distance to the nearest ideal pixel,
// I_n = max(n_ideal, n_actual). FOM == 1 iff the two sets are equal.
// Requires matching dimensions, alpha > 0 and a non-empty ideal set.
EvalReport evaluate(const BinaryEdgeMap& actual, const GroundTruthEdges& ideal,
                    double alpha = 1.0 / 9.0);

}  // namespace lss
