#pragma once

#include <cstdint>
#include <vector>

#include "lss/cube.hpp"
#include "lss/raster.hpp"

namespace lss {

// Axis-aligned rectangle [row0,row1) x [col0,col1) with the endmember
// spectrum of the pixels it owns. An empty endmember is drawn uniformly from
// [0,1) per band using the scene seed.
struct Region {
  int row0 = 0;
  int col0 = 0;
  int row1 = 0;
  int col1 = 0;
  Spectrum endmember;
};

struct SceneSpec {
  int rows = 0;
  int cols = 0;
  int bands = 0;
  std::vector<Region> regions;
  // Pixels whose nearest different-region pixel lies within this Chebyshev
  // distance d get a linear mix of the two endmembers. d=1 pixels are 50/50;
  // the own-region weight ramps to pure at d = boundary_mix_width + 1.
  int boundary_mix_width = 0;
  std::uint64_t seed = 0;
};

struct SynthScene {
  HsiCube cube;
  GroundTruthEdges truth;  // pixels whose 4-neighborhood spans >= 2 regions
  Grid<std::int32_t> labels;
};

// Deterministic given the spec. Region rectangles must partition the grid and
// endmembers must be pairwise distinct.
SynthScene synth_scene(const SceneSpec& spec);

// Two vertical half-planes split at cols/2.
SceneSpec make_two_region_spec(int rows, int cols, int bands, int mix_width,
                               std::uint64_t seed);

// Four quadrants split at rows/2, cols/2.
SceneSpec make_quadrant_spec(int rows, int cols, int bands, int mix_width,
                             std::uint64_t seed);

// Adds zero-mean Gaussian noise with a per-band variance drawn uniformly from
// [0, max_variance]. Deterministic given seed; max_variance 0 is the identity.
HsiCube add_gaussian_noise(const HsiCube& cube, double max_variance,
                           std::uint64_t seed);

// factor x factor block mean per band; trailing rows/cols that do not fill a
// block are dropped.
HsiCube downsample(const HsiCube& cube, int factor);

}  // namespace lss
