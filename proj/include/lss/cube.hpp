#pragma once

#include <span>
#include <string>
#include <vector>

#include "lss/error.hpp"

namespace lss {

using Spectrum = std::vector<float>;

// On-disk band ordering. In memory a cube is always BIP so that one pixel's
// spectrum is contiguous.
enum class Interleave { BSQ, BIL, BIP };

std::string to_string(Interleave il);
Interleave interleave_from_string(const std::string& text);

class HsiCube {
 public:
  HsiCube() = default;
  HsiCube(int rows, int cols, int bands);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int bands() const { return bands_; }
  std::size_t size() const { return data_.size(); }

  float at(int r, int c, int b) const {
    return data_[(static_cast<std::size_t>(r) * cols_ + c) * bands_ + b];
  }
  float& at(int r, int c, int b) {
    return data_[(static_cast<std::size_t>(r) * cols_ + c) * bands_ + b];
  }

  std::span<const float> spectrum(int r, int c) const {
    return {data_.data() + (static_cast<std::size_t>(r) * cols_ + c) * bands_,
            static_cast<std::size_t>(bands_)};
  }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }

  // Empty when the cube carries no wavelength table.
  const std::vector<float>& wavelengths() const { return wavelengths_; }
  void set_wavelengths(std::vector<float> wl);

  // Checks that every value is finite and the wavelength table (if any) is
  // strictly increasing with one entry per band. Throws DataError.
  void validate() const;

  friend bool operator==(const HsiCube& a, const HsiCube& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bands_ == b.bands_ &&
           a.data_ == b.data_ && a.wavelengths_ == b.wavelengths_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int bands_ = 0;
  std::vector<float> data_;
  std::vector<float> wavelengths_;
};

}  // namespace lss
