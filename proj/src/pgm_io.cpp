#include "lss/pgm_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>

namespace lss {
namespace {

// Skips whitespace and '#' comment lines between PGM header tokens.
int next_token(std::istream& in) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF) throw DataError("truncated PGM header");
  int value = 0;
  bool any = false;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    any = true;
    c = in.get();
  }
  if (!any) throw DataError("malformed PGM header");
  return value;
}

}  // namespace

void write_pgm(const Grid<std::uint8_t>& img, const std::string& path) {
  if (img.empty()) throw DataError("write_pgm: empty image");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << "P5\n" << img.cols() << " " << img.rows() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data()),
            static_cast<std::streamsize>(img.size()));
  if (!out) throw DataError("short write to '" + path + "'");
}

Grid<std::uint8_t> read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (m0 != 'P' || m1 != '5') throw DataError("'" + path + "' is not a binary PGM");
  int cols = next_token(in);
  int rows = next_token(in);
  int maxval = next_token(in);
  if (maxval <= 0 || maxval > 255)
    throw DataError("'" + path + "' has unsupported maxval " + std::to_string(maxval));
  if (rows <= 0 || cols <= 0) throw DataError("'" + path + "' has empty dimensions");
  Grid<std::uint8_t> img(rows, cols);
  in.read(reinterpret_cast<char*>(img.data()),
          static_cast<std::streamsize>(img.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.size()))
    throw DataError("'" + path + "' is truncated");
  return img;
}

void write_mask_pgm(const Mask& mask, const std::string& path) {
  Grid<std::uint8_t> img(mask.rows(), mask.cols());
  for (int r = 0; r < mask.rows(); ++r)
    for (int c = 0; c < mask.cols(); ++c)
      img.at(r, c) = mask.at(r, c) ? 255 : 0;
  write_pgm(img, path);
}

Mask read_mask_pgm(const std::string& path) {
  Grid<std::uint8_t> img = read_pgm(path);
  Mask mask(img.rows(), img.cols());
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      mask.at(r, c) = img.at(r, c) > 127 ? 1 : 0;
  return mask;
}

Grid<std::uint8_t> scale_to_u8(const EdgeMap& map) {
  if (map.empty()) throw DataError("scale_to_u8: empty map");
  float lo = map.data()[0], hi = map.data()[0];
  for (std::size_t i = 0; i < map.size(); ++i) {
    lo = std::min(lo, map.data()[i]);
    hi = std::max(hi, map.data()[i]);
  }
  Grid<std::uint8_t> img(map.rows(), map.cols());
  if (hi > lo) {
    double scale = 255.0 / (static_cast<double>(hi) - lo);
    for (int r = 0; r < map.rows(); ++r)
      for (int c = 0; c < map.cols(); ++c)
        img.at(r, c) = static_cast<std::uint8_t>(
            std::lround((static_cast<double>(map.at(r, c)) - lo) * scale));
  }
  return img;
}

void write_float_raster(const EdgeMap& map, const std::string& path) {
  if (map.empty()) throw DataError("write_float_raster: empty map");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(map.data()),
            static_cast<std::streamsize>(map.size() * sizeof(float)));
  if (!out) throw DataError("short write to '" + path + "'");
  std::ofstream hdr(path + ".hdr");
  if (!hdr) throw DataError("cannot write '" + path + ".hdr'");
  hdr << "rows = " << map.rows() << "\n"
      << "cols = " << map.cols() << "\n"
      << "dtype = float32\n"
      << "byte order = 0\n";
}

EdgeMap read_float_raster(const std::string& path) {
  std::ifstream hdr(path + ".hdr");
  if (!hdr) throw DataError("cannot open '" + path + ".hdr'");
  int rows = -1, cols = -1;
  std::string key, eq;
  while (hdr >> key >> eq) {
    std::string value;
    std::getline(hdr, value);
    if (key == "rows") rows = std::stoi(value);
    else if (key == "cols") cols = std::stoi(value);
    else if (key == "dtype" || key == "byte") continue;
  }
  if (rows <= 0 || cols <= 0)
    throw DataError("'" + path + ".hdr' lacks valid rows/cols");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  EdgeMap map(rows, cols);
  in.read(reinterpret_cast<char*>(map.data()),
          static_cast<std::streamsize>(map.size() * sizeof(float)));
  if (in.gcount() != static_cast<std::streamsize>(map.size() * sizeof(float)))
    throw DataError("'" + path + "' is truncated");
  return map;
}

}  // namespace lss
