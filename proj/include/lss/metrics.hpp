#pragma once

#include <span>
#include <string>
#include <vector>

namespace lss {

enum class MetricKind { EU, MAN, FRACT, CHE, COS, COR, SID, EMD };

struct MetricSpec {
  MetricKind kind = MetricKind::EU;
  // FRACT only: L_k exponent, 0 < k < 1.
  double k_exponent = 0.5;
  // SID only: probability floor applied after sum-normalization.
  double epsilon = 1e-12;
};

// Throws UsageError on out-of-range parameters.
void validate(const MetricSpec& spec);

// Distance between two spectra of equal length (>= 2 for COS/COR, >= 1
// otherwise). Accumulation is double precision in band order; SID and EMD
// require non-negative spectra with a positive sum.
double distance(std::span<const float> a, std::span<const float> b,
                const MetricSpec& spec);

// Grammar: name[:param], e.g. "eu", "fract:0.5", "sid:1e-10". The parameter
// is the FRACT exponent or the SID floor; other metrics take none.
MetricSpec parse_metric(const std::string& text);

std::string metric_name(MetricKind kind);
const std::vector<std::string>& metric_names();

}  // namespace lss
