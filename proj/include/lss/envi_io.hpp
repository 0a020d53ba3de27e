#pragma once

#include <string>

#include "lss/cube.hpp"

namespace lss {

// Reads an ENVI cube. `path` may name either the text header or the raw data
// file; the companion is located by the usual ".hdr" convention. Supported
// data types: 2 (int16), 4 (float32), 12 (uint16), all little-endian
// (byte order 0). Values are converted to float32 and returned in BIP order.
HsiCube read_envi(const std::string& path);

// Writes `cube` as a raw data file plus ".hdr" text header. Data is always
// written as float32, byte order 0, in the requested interleave, so a
// read-back reproduces the cube bit for bit.
void write_envi(const HsiCube& cube, const std::string& path,
                Interleave interleave = Interleave::BIP);

}  // namespace lss
