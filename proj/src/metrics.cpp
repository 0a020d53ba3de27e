#include "lss/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lss/error.hpp"

namespace lss {
namespace {

void require_nonnegative(std::span<const float> a, std::span<const float> b,
                         const char* name) {
  double sa = 0.0, sb = 0.0;
  for (float v : a) {
    if (v < 0.0f) throw DataError(std::string(name) + ": negative component");
    sa += v;
  }
  for (float v : b) {
    if (v < 0.0f) throw DataError(std::string(name) + ": negative component");
    sb += v;
  }
  if (sa <= 0.0 || sb <= 0.0)
    throw DataError(std::string(name) + ": spectrum sums to zero");
}

}  // namespace

void validate(const MetricSpec& spec) {
  if (spec.kind == MetricKind::FRACT &&
      !(spec.k_exponent > 0.0 && spec.k_exponent < 1.0))
    throw UsageError("fract exponent must lie in (0, 1)");
  if (spec.kind == MetricKind::SID && !(spec.epsilon > 0.0))
    throw UsageError("sid floor must be positive");
}

double distance(std::span<const float> a, std::span<const float> b,
                const MetricSpec& spec) {
  if (a.size() != b.size())
    throw DataError("distance: spectra lengths differ (" +
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  const std::size_t n = a.size();
  if (n == 0) throw DataError("distance: empty spectra");
  validate(spec);

  switch (spec.kind) {
    case MetricKind::EU: {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        s += d * d;
      }
      return std::sqrt(s);
    }
    case MetricKind::MAN: {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        s += std::fabs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
      return s;
    }
    case MetricKind::FRACT: {
      const double k = spec.k_exponent;
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        s += std::pow(std::fabs(static_cast<double>(a[i]) - static_cast<double>(b[i])), k);
      return std::pow(s, 1.0 / k);
    }
    case MetricKind::CHE: {
      double m = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, std::fabs(static_cast<double>(a[i]) - static_cast<double>(b[i])));
      return m;
    }
    case MetricKind::COS: {
      if (n < 2) throw DataError("cos needs at least 2 bands");
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
        na += static_cast<double>(a[i]) * static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]) * static_cast<double>(b[i]);
      }
      if (na == 0.0 || nb == 0.0) throw DataError("cos: zero-norm spectrum");
      return std::max(0.0, 1.0 - dot / (std::sqrt(na) * std::sqrt(nb)));
    }
    case MetricKind::COR: {
      if (n < 2) throw DataError("cor needs at least 2 bands");
      double ma = 0.0, mb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
      }
      ma /= static_cast<double>(n);
      mb /= static_cast<double>(n);
      double sab = 0.0, saa = 0.0, sbb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double da = static_cast<double>(a[i]) - ma;
        double db = static_cast<double>(b[i]) - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
      }
      if (saa == 0.0 || sbb == 0.0) throw DataError("cor: zero-variance spectrum");
      return std::max(0.0, 1.0 - sab / (std::sqrt(saa) * std::sqrt(sbb)));
    }
    case MetricKind::SID: {
      require_nonnegative(a, b, "sid");
      double sa = 0.0, sb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
      }
      const double eps = spec.epsilon;
      double s1 = 0.0, s2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double p = std::max(static_cast<double>(a[i]) / sa, eps);
        double q = std::max(static_cast<double>(b[i]) / sb, eps);
        s1 += p * std::log(p / q);
        s2 += q * std::log(q / p);
      }
      return s1 + s2;
    }
    case MetricKind::EMD: {
      require_nonnegative(a, b, "emd");
      double sa = 0.0, sb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
      }
      double ca = 0.0, cb = 0.0, s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        ca += static_cast<double>(a[i]) / sa;
        cb += static_cast<double>(b[i]) / sb;
        s += std::fabs(ca - cb);
      }
      return s;
    }
  }
  throw DataError("distance: unknown metric");
}

std::string metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::EU: return "eu";
    case MetricKind::MAN: return "man";
    case MetricKind::FRACT: return "fract";
    case MetricKind::CHE: return "che";
    case MetricKind::COS: return "cos";
    case MetricKind::COR: return "cor";
    case MetricKind::SID: return "sid";
    case MetricKind::EMD: return "emd";
  }
  return "?";
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {"eu",  "man", "fract", "che",
                                                 "cos", "cor", "sid",   "emd"};
  return names;
}

MetricSpec parse_metric(const std::string& text) {
  std::string name = text, param;
  std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    param = text.substr(colon + 1);
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });

  MetricSpec spec;
  if (name == "eu") spec.kind = MetricKind::EU;
  else if (name == "man") spec.kind = MetricKind::MAN;
  else if (name == "fract") spec.kind = MetricKind::FRACT;
  else if (name == "che") spec.kind = MetricKind::CHE;
  else if (name == "cos") spec.kind = MetricKind::COS;
  else if (name == "cor") spec.kind = MetricKind::COR;
  else if (name == "sid") spec.kind = MetricKind::SID;
  else if (name == "emd") spec.kind = MetricKind::EMD;
  else {
    std::string known;
    for (const auto& m : metric_names()) known += (known.empty() ? "" : ", ") + m;
    throw UsageError("unknown metric '" + text + "' (known: " + known + ")");
  }

  if (!param.empty()) {
    double value;
    try {
      value = std::stod(param);
    } catch (const std::exception&) {
      throw UsageError("bad metric parameter '" + param + "'");
    }
    if (spec.kind == MetricKind::FRACT) spec.k_exponent = value;
    else if (spec.kind == MetricKind::SID) spec.epsilon = value;
    else throw UsageError("metric '" + name + "' takes no parameter");
  }
  validate(spec);
  return spec;
}

}  // namespace lss
