#include "lss/baseline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "parallel.hpp"

namespace lss {
namespace {

double eu(std::span<const float> a, std::span<const float> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

int clampi(int v, int hi) { return std::clamp(v, 0, hi); }

enum class Diff { X, Y, UP, DOWN };

EdgeMap central_diff(const HsiCube& cube, Diff which, int threads) {
  const int rows = cube.rows(), cols = cube.cols();
  EdgeMap out(rows, cols);
  detail::parallel_rows(rows, threads, [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r)
      for (int c = 0; c < cols; ++c) {
        int ra, ca, rb, cb;
        switch (which) {
          case Diff::X:    ra = r; ca = c + 1; rb = r; cb = c - 1; break;
          case Diff::Y:    ra = r + 1; ca = c; rb = r - 1; cb = c; break;
          case Diff::UP:   ra = r - 1; ca = c + 1; rb = r + 1; cb = c - 1; break;
          default:         ra = r - 1; ca = c - 1; rb = r + 1; cb = c + 1; break;
        }
        double d = eu(cube.spectrum(clampi(ra, rows - 1), clampi(ca, cols - 1)),
                      cube.spectrum(clampi(rb, rows - 1), clampi(cb, cols - 1)));
        out.at(r, c) = static_cast<float>(d / 2.0);
      }
  });
  return out;
}

EdgeMap sobel(const HsiCube& cube, bool x_direction, int threads) {
  const int rows = cube.rows(), cols = cube.cols(), bands = cube.bands();
  EdgeMap out(rows, cols);
  detail::parallel_rows(rows, threads, [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r)
      for (int c = 0; c < cols; ++c) {
        const float* p[3][3];
        for (int dr = -1; dr <= 1; ++dr)
          for (int dc = -1; dc <= 1; ++dc)
            p[dr + 1][dc + 1] =
                cube.spectrum(clampi(r + dr, rows - 1), clampi(c + dc, cols - 1)).data();
        double acc = 0.0;
        for (int b = 0; b < bands; ++b) {
          double g;
          if (x_direction) {
            g = (p[0][2][b] + 2.0 * p[1][2][b] + p[2][2][b]) -
                (p[0][0][b] + 2.0 * p[1][0][b] + p[2][0][b]);
          } else {
            g = (p[2][0][b] + 2.0 * p[2][1][b] + p[2][2][b]) -
                (p[0][0][b] + 2.0 * p[0][1][b] + p[0][2][b]);
          }
          acc += g * g;
        }
        out.at(r, c) = static_cast<float>(std::sqrt(acc));
      }
  });
  return out;
}

EdgeMap combine(const EdgeMap& a, const EdgeMap& b, bool quadrature) {
  EdgeMap out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      double x = a.at(r, c), y = b.at(r, c);
      out.at(r, c) = quadrature ? static_cast<float>(std::sqrt(x * x + y * y))
                                : static_cast<float>((x + y) / 2.0);
    }
  return out;
}

}  // namespace

BaselineKind parse_baseline(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "gradx") return BaselineKind::GRAD_X;
  if (s == "grady") return BaselineKind::GRAD_Y;
  if (s == "gradxy") return BaselineKind::GRAD_XY_MEAN;
  if (s == "gradup") return BaselineKind::GRAD_UP;
  if (s == "graddown") return BaselineKind::GRAD_DOWN;
  if (s == "grad") return BaselineKind::GRAD;
  if (s == "gradud") return BaselineKind::GRAD_UD_MEAN;
  if (s == "gradall6") return BaselineKind::GRAD_ALL6;
  if (s == "sobelx") return BaselineKind::SOBEL_X;
  if (s == "sobely") return BaselineKind::SOBEL_Y;
  if (s == "sobelxy") return BaselineKind::SOBEL_XY;
  throw UsageError("unknown baseline '" + text +
                   "' (known: gradx, grady, gradxy, gradup, graddown, grad, "
                   "gradud, gradall6, sobelx, sobely, sobelxy)");
}

std::string baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::GRAD_X: return "gradx";
    case BaselineKind::GRAD_Y: return "grady";
    case BaselineKind::GRAD_XY_MEAN: return "gradxy";
    case BaselineKind::GRAD_UP: return "gradup";
    case BaselineKind::GRAD_DOWN: return "graddown";
    case BaselineKind::GRAD: return "grad";
    case BaselineKind::GRAD_UD_MEAN: return "gradud";
    case BaselineKind::GRAD_ALL6: return "gradall6";
    case BaselineKind::SOBEL_X: return "sobelx";
    case BaselineKind::SOBEL_Y: return "sobely";
    case BaselineKind::SOBEL_XY: return "sobelxy";
  }
  return "?";
}

const std::vector<BaselineKind>& all_baselines() {
  static const std::vector<BaselineKind> kinds = {
      BaselineKind::GRAD_X,   BaselineKind::GRAD_Y,  BaselineKind::GRAD_XY_MEAN,
      BaselineKind::GRAD_UP,  BaselineKind::GRAD_DOWN, BaselineKind::GRAD,
      BaselineKind::GRAD_UD_MEAN, BaselineKind::GRAD_ALL6, BaselineKind::SOBEL_X,
      BaselineKind::SOBEL_Y,  BaselineKind::SOBEL_XY};
  return kinds;
}

EdgeMap baseline_edge_map(const HsiCube& cube, BaselineKind kind, int threads) {
  if (cube.rows() < 3 || cube.cols() < 3)
    throw DataError("baseline_edge_map: image must be at least 3x3");
  switch (kind) {
    case BaselineKind::GRAD_X:
      return central_diff(cube, Diff::X, threads);
    case BaselineKind::GRAD_Y:
      return central_diff(cube, Diff::Y, threads);
    case BaselineKind::GRAD_UP:
      return central_diff(cube, Diff::UP, threads);
    case BaselineKind::GRAD_DOWN:
      return central_diff(cube, Diff::DOWN, threads);
    case BaselineKind::GRAD_XY_MEAN:
      return combine(central_diff(cube, Diff::X, threads),
                     central_diff(cube, Diff::Y, threads), false);
    case BaselineKind::GRAD:
      return combine(central_diff(cube, Diff::X, threads),
                     central_diff(cube, Diff::Y, threads), true);
    case BaselineKind::GRAD_UD_MEAN:
      return combine(central_diff(cube, Diff::UP, threads),
                     central_diff(cube, Diff::DOWN, threads), false);
    case BaselineKind::GRAD_ALL6: {
      EdgeMap x = central_diff(cube, Diff::X, threads);
      EdgeMap y = central_diff(cube, Diff::Y, threads);
      EdgeMap u = central_diff(cube, Diff::UP, threads);
      EdgeMap d = central_diff(cube, Diff::DOWN, threads);
      EdgeMap out(x.rows(), x.cols());
      for (int r = 0; r < x.rows(); ++r)
        for (int c = 0; c < x.cols(); ++c)
          out.at(r, c) = static_cast<float>(
              (2.0 * x.at(r, c) + 2.0 * y.at(r, c) + u.at(r, c) + d.at(r, c)) / 6.0);
      return out;
    }
    case BaselineKind::SOBEL_X:
      return sobel(cube, true, threads);
    case BaselineKind::SOBEL_Y:
      return sobel(cube, false, threads);
    case BaselineKind::SOBEL_XY:
      return combine(sobel(cube, true, threads), sobel(cube, false, threads), true);
  }
  throw DataError("baseline_edge_map: unknown kind");
}

}  // namespace lss
