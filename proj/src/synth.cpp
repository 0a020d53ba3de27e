#include "lss/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lss {
namespace {

// Ring offsets ordered by (Chebyshev distance, du, dv) so the mixing partner
// search is deterministic.
std::vector<std::tuple<int, int, int>> ring_offsets(int max_d) {
  std::vector<std::tuple<int, int, int>> offsets;
  for (int d = 1; d <= max_d; ++d)
    for (int du = -d; du <= d; ++du)
      for (int dv = -d; dv <= d; ++dv)
        if (std::max(std::abs(du), std::abs(dv)) == d)
          offsets.emplace_back(d, du, dv);
  return offsets;
}

}  // namespace

SceneSpec make_two_region_spec(int rows, int cols, int bands, int mix_width,
                               std::uint64_t seed) {
  SceneSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.bands = bands;
  spec.boundary_mix_width = mix_width;
  spec.seed = seed;
  int split = cols / 2;
  spec.regions.push_back({0, 0, rows, split, {}});
  spec.regions.push_back({0, split, rows, cols, {}});
  return spec;
}

SceneSpec make_quadrant_spec(int rows, int cols, int bands, int mix_width,
                             std::uint64_t seed) {
  SceneSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.bands = bands;
  spec.boundary_mix_width = mix_width;
  spec.seed = seed;
  int rs = rows / 2, cs = cols / 2;
  spec.regions.push_back({0, 0, rs, cs, {}});
  spec.regions.push_back({0, cs, rs, cols, {}});
  spec.regions.push_back({rs, 0, rows, cs, {}});
  spec.regions.push_back({rs, cs, rows, cols, {}});
  return spec;
}

SynthScene synth_scene(const SceneSpec& spec) {
  if (spec.rows <= 0 || spec.cols <= 0 || spec.bands <= 0)
    throw DataError("synth_scene: dimensions must be positive");
  if (spec.regions.empty()) throw DataError("synth_scene: no regions");
  if (spec.boundary_mix_width < 0)
    throw DataError("synth_scene: negative boundary_mix_width");

  // Region rectangles must partition the grid.
  Grid<std::int32_t> labels(spec.rows, spec.cols, -1);
  for (std::size_t i = 0; i < spec.regions.size(); ++i) {
    const Region& reg = spec.regions[i];
    if (reg.row0 < 0 || reg.col0 < 0 || reg.row1 > spec.rows ||
        reg.col1 > spec.cols || reg.row0 >= reg.row1 || reg.col0 >= reg.col1)
      throw DataError("synth_scene: region " + std::to_string(i) +
                      " has a bad rectangle");
    for (int r = reg.row0; r < reg.row1; ++r)
      for (int c = reg.col0; c < reg.col1; ++c) {
        if (labels.at(r, c) != -1)
          throw DataError("synth_scene: regions overlap at (" +
                          std::to_string(r) + "," + std::to_string(c) + ")");
        labels.at(r, c) = static_cast<std::int32_t>(i);
      }
  }
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c)
      if (labels.at(r, c) == -1)
        throw DataError("synth_scene: regions do not cover (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");

  // Fill in missing endmembers from the seed, then require pairwise distinct.
  std::vector<Spectrum> endmembers;
  endmembers.reserve(spec.regions.size());
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const Region& reg : spec.regions) {
    if (reg.endmember.empty()) {
      Spectrum s(spec.bands);
      for (int b = 0; b < spec.bands; ++b) s[b] = static_cast<float>(unit(rng));
      endmembers.push_back(std::move(s));
    } else {
      if (static_cast<int>(reg.endmember.size()) != spec.bands)
        throw DataError("synth_scene: endmember length does not match bands");
      endmembers.push_back(reg.endmember);
    }
  }
  for (std::size_t i = 0; i < endmembers.size(); ++i)
    for (std::size_t j = i + 1; j < endmembers.size(); ++j)
      if (endmembers[i] == endmembers[j])
        throw DataError("synth_scene: regions " + std::to_string(i) + " and " +
                        std::to_string(j) + " share an endmember");

  SynthScene scene;
  scene.labels = labels;
  scene.cube = HsiCube(spec.rows, spec.cols, spec.bands);
  const int mw = spec.boundary_mix_width;
  const auto offsets = ring_offsets(mw);
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      int own = labels.at(r, c);
      int other = -1, dist = 0;
      for (const auto& [d, du, dv] : offsets) {
        int rr = r + du, cc = c + dv;
        if (!labels.in_bounds(rr, cc)) continue;
        if (labels.at(rr, cc) != own) {
          other = labels.at(rr, cc);
          dist = d;
          break;
        }
      }
      const Spectrum& a = endmembers[own];
      if (other < 0) {
        for (int b = 0; b < spec.bands; ++b) scene.cube.at(r, c, b) = a[b];
      } else {
        const Spectrum& o = endmembers[other];
        double w = 0.5 + (dist - 1) / (2.0 * mw);
        for (int b = 0; b < spec.bands; ++b)
          scene.cube.at(r, c, b) =
              static_cast<float>(w * a[b] + (1.0 - w) * o[b]);
      }
    }
  }

  scene.truth.mask = Mask(spec.rows, spec.cols, 0);
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c) {
      int own = labels.at(r, c);
      bool edge = (labels.in_bounds(r - 1, c) && labels.at(r - 1, c) != own) ||
                  (labels.in_bounds(r + 1, c) && labels.at(r + 1, c) != own) ||
                  (labels.in_bounds(r, c - 1) && labels.at(r, c - 1) != own) ||
                  (labels.in_bounds(r, c + 1) && labels.at(r, c + 1) != own);
      scene.truth.mask.at(r, c) = edge ? 1 : 0;
    }
  return scene;
}

HsiCube add_gaussian_noise(const HsiCube& cube, double max_variance,
                           std::uint64_t seed) {
  if (max_variance < 0) throw DataError("add_gaussian_noise: negative variance");
  cube.validate();
  HsiCube out = cube;
  if (max_variance == 0.0) return out;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, max_variance);
  std::vector<double> sigma(cube.bands());
  for (int b = 0; b < cube.bands(); ++b) sigma[b] = std::sqrt(uni(rng));

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int b = 0; b < cube.bands(); ++b)
    for (int r = 0; r < cube.rows(); ++r)
      for (int c = 0; c < cube.cols(); ++c)
        out.at(r, c, b) = static_cast<float>(out.at(r, c, b) + sigma[b] * gauss(rng));
  return out;
}

HsiCube downsample(const HsiCube& cube, int factor) {
  if (factor < 1) throw DataError("downsample: factor must be >= 1");
  int rows = cube.rows() / factor, cols = cube.cols() / factor;
  if (rows < 1 || cols < 1)
    throw DataError("downsample: factor " + std::to_string(factor) +
                    " exceeds image size");
  HsiCube out(rows, cols, cube.bands());
  const double norm = 1.0 / (static_cast<double>(factor) * factor);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (int b = 0; b < cube.bands(); ++b) {
        double acc = 0.0;
        for (int dr = 0; dr < factor; ++dr)
          for (int dc = 0; dc < factor; ++dc)
            acc += cube.at(r * factor + dr, c * factor + dc, b);
        out.at(r, c, b) = static_cast<float>(acc * norm);
      }
  if (!cube.wavelengths().empty()) out.set_wavelengths(cube.wavelengths());
  return out;
}

}  // namespace lss
