#pragma once

#include <cstdint>
#include <string>

#include "lss/raster.hpp"

namespace lss {

// Binary PGM (P5), maxval 255.
void write_pgm(const Grid<std::uint8_t>& img, const std::string& path);
Grid<std::uint8_t> read_pgm(const std::string& path);

// Mask convention: 255 = set, 0 = clear on disk; >127 reads back as set.
void write_mask_pgm(const Mask& mask, const std::string& path);
Mask read_mask_pgm(const std::string& path);

// Min-max scaled 8-bit preview of a float map. A constant map scales to 0.
Grid<std::uint8_t> scale_to_u8(const EdgeMap& map);

// Raw little-endian float32, row-major, with a small text sidecar at
// path + ".hdr" recording the dimensions.
void write_float_raster(const EdgeMap& map, const std::string& path);
EdgeMap read_float_raster(const std::string& path);

}  // namespace lss
