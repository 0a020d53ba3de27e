#include "lss/cube.hpp"

#include <cmath>

namespace lss {

std::string to_string(Interleave il) {
  switch (il) {
    case Interleave::BSQ: return "bsq";
    case Interleave::BIL: return "bil";
    case Interleave::BIP: return "bip";
  }
  throw DataError("unknown interleave value");
}

Interleave interleave_from_string(const std::string& text) {
  std::string low;
  for (char c : text) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "bsq") return Interleave::BSQ;
  if (low == "bil") return Interleave::BIL;
  if (low == "bip") return Interleave::BIP;
  throw DataError("unknown interleave '" + text + "' (expected bsq, bil or bip)");
}

HsiCube::HsiCube(int rows, int cols, int bands)
    : rows_(rows), cols_(cols), bands_(bands) {
  if (rows <= 0 || cols <= 0 || bands <= 0)
    throw DataError("cube dimensions must be positive, got " +
                    std::to_string(rows) + "x" + std::to_string(cols) + "x" +
                    std::to_string(bands));
  data_.assign(static_cast<std::size_t>(rows) * cols * bands, 0.0f);
}

void HsiCube::set_wavelengths(std::vector<float> wl) {
  if (!wl.empty() && static_cast<int>(wl.size()) != bands_)
    throw DataError("wavelength table has " + std::to_string(wl.size()) +
                    " entries for " + std::to_string(bands_) + " bands");
  wavelengths_ = std::move(wl);
}

void HsiCube::validate() const {
  if (rows_ <= 0 || cols_ <= 0 || bands_ <= 0)
    throw DataError("cube is empty");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!std::isfinite(data_[i]))
      throw DataError("cube contains a non-finite value at flat index " +
                      std::to_string(i));
  if (wavelengths_.empty()) return;
  if (static_cast<int>(wavelengths_.size()) != bands_)
    throw DataError("wavelength table length does not match band count");
  for (std::size_t i = 0; i + 1 < wavelengths_.size(); ++i)
    if (!(wavelengths_[i] < wavelengths_[i + 1]))
      throw DataError("wavelengths must be strictly increasing");
}

}  // namespace lss
