#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "lss/cube.hpp"
#include "lss/envi_io.hpp"
#include "lss/error.hpp"
#include "lss/pgm_io.hpp"
#include "lss/raster.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lss_io_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_bytes(const std::string& path, const void* data, std::size_t n) {
  std::ofstream out(path, std::ios::binary);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("grid rejects bad dimensions and compares by content") {
  CHECK_THROWS_AS(lss::Grid<float>(0, 4), lss::DataError);
  CHECK_THROWS_AS(lss::Grid<float>(4, -1), lss::DataError);
  lss::Grid<int> a(2, 3, 7), b(2, 3, 7);
  CHECK(a == b);
  b.at(1, 2) = 0;
  CHECK_FALSE(a == b);
}

TEST_CASE("cube accessors and validation") {
  CHECK_THROWS_AS(lss::HsiCube(0, 1, 1), lss::DataError);

  lss::HsiCube cube(2, 3, 4);
  cube.at(1, 2, 3) = 9.0f;
  CHECK(cube.spectrum(1, 2)[3] == 9.0f);
  CHECK(cube.spectrum(1, 2).size() == 4);
  CHECK(cube.size() == 24);

  CHECK_NOTHROW(cube.validate());
  cube.at(0, 0, 0) = std::numeric_limits<float>::quiet_NaN();
  CHECK_THROWS_AS(cube.validate(), lss::DataError);
  cube.at(0, 0, 0) = 0.0f;

  CHECK_THROWS_AS(cube.set_wavelengths({1.0f, 2.0f}), lss::DataError);
  cube.set_wavelengths({400.0f, 500.0f, 600.0f, 700.0f});
  CHECK_NOTHROW(cube.validate());
  cube.set_wavelengths({400.0f, 500.0f, 500.0f, 700.0f});
  CHECK_THROWS_AS(cube.validate(), lss::DataError);
}

TEST_CASE("interleave names round-trip") {
  for (auto il : {lss::Interleave::BSQ, lss::Interleave::BIL, lss::Interleave::BIP})
    CHECK(lss::interleave_from_string(lss::to_string(il)) == il);
  CHECK(lss::interleave_from_string("BIP") == lss::Interleave::BIP);
  CHECK_THROWS_AS(lss::interleave_from_string("bandwise"), lss::DataError);
}

TEST_CASE("envi round-trip is exact for every interleave") {
  TempDir tmp;
  std::mt19937_64 rng(11);
  lss::HsiCube cube = oracle::random_cube(rng, 5, 7, 3, -4.0f, 4.0f);
  cube.set_wavelengths({403.62f, 517.91f, 694.05f});

  for (auto il : {lss::Interleave::BSQ, lss::Interleave::BIL, lss::Interleave::BIP}) {
    std::string base = tmp.file("cube_" + lss::to_string(il));
    lss::write_envi(cube, base, il);
    lss::HsiCube back = lss::read_envi(base + ".hdr");
    CHECK(back == cube);
    // The raw data path works as an entry point too.
    CHECK(lss::read_envi(base) == cube);
  }
}

TEST_CASE("envi reads int16 and uint16 payloads") {
  TempDir tmp;
  // 1 row, 2 cols, 2 bands, BIP: values laid out pixel-major.
  std::int16_t i16[4] = {-5, 100, 32767, 0};
  write_bytes(tmp.file("a.raw"), i16, sizeof i16);
  write_text(tmp.file("a.hdr"),
             "ENVI\nsamples = 2\nlines = 1\nbands = 2\ndata type = 2\n"
             "interleave = bip\nbyte order = 0\n");
  lss::HsiCube a = lss::read_envi(tmp.file("a.hdr"));
  CHECK(a.at(0, 0, 0) == -5.0f);
  CHECK(a.at(0, 0, 1) == 100.0f);
  CHECK(a.at(0, 1, 0) == 32767.0f);

  std::uint16_t u16[4] = {0, 65535, 7, 9};
  write_bytes(tmp.file("b.raw"), u16, sizeof u16);
  write_text(tmp.file("b.hdr"),
             "ENVI\nsamples = 2\nlines = 1\nbands = 2\ndata type = 12\n"
             "interleave = bsq\nbyte order = 0\n");
  lss::HsiCube b = lss::read_envi(tmp.file("b.hdr"));
  // BSQ: band 0 plane first.
  CHECK(b.at(0, 0, 0) == 0.0f);
  CHECK(b.at(0, 1, 0) == 65535.0f);
  CHECK(b.at(0, 0, 1) == 7.0f);
  CHECK(b.at(0, 1, 1) == 9.0f);
}

TEST_CASE("envi header parsing is case-insensitive and brace-aware") {
  TempDir tmp;
  float payload[6] = {1, 2, 3, 4, 5, 6};
  write_bytes(tmp.file("c.img"), payload, sizeof payload);
  write_text(tmp.file("c.hdr"),
             "ENVI\ndescription = {\n  two lines\n  of text}\n"
             "SAMPLES = 3\nLines = 1\nBands = 2\nData Type = 4\n"
             "Interleave = BIL\nByte Order = 0\n"
             "wavelength = {\n 400.0, 500.0\n}\n");
  lss::HsiCube c = lss::read_envi(tmp.file("c.hdr"));
  CHECK(c.cols() == 3);
  CHECK(c.bands() == 2);
  REQUIRE(c.wavelengths().size() == 2);
  CHECK(c.wavelengths()[1] == 500.0f);
  // BIL: per row, band 0 line then band 1 line.
  CHECK(c.at(0, 0, 0) == 1.0f);
  CHECK(c.at(0, 0, 1) == 4.0f);
  CHECK(c.at(0, 2, 1) == 6.0f);
}

TEST_CASE("envi rejects malformed inputs") {
  TempDir tmp;
  float payload[4] = {1, 2, 3, 4};

  auto hdr = [&](const std::string& name, const std::string& text) {
    write_bytes(tmp.file(name + ".raw"), payload, sizeof payload);
    write_text(tmp.file(name + ".hdr"), text);
    return tmp.file(name + ".hdr");
  };

  CHECK_THROWS_AS(lss::read_envi(tmp.file("absent.hdr")), lss::DataError);
  // Missing required key.
  CHECK_THROWS_AS(
      lss::read_envi(hdr("m1", "ENVI\nsamples = 2\nlines = 1\ndata type = 4\n"
                               "interleave = bip\nbyte order = 0\n")),
      lss::DataError);
  // Big-endian payloads are unsupported.
  CHECK_THROWS_AS(
      lss::read_envi(hdr("m2", "ENVI\nsamples = 2\nlines = 1\nbands = 2\n"
                               "data type = 4\ninterleave = bip\nbyte order = 1\n")),
      lss::DataError);
  // Unsupported data type.
  CHECK_THROWS_AS(
      lss::read_envi(hdr("m3", "ENVI\nsamples = 2\nlines = 1\nbands = 2\n"
                               "data type = 5\ninterleave = bip\nbyte order = 0\n")),
      lss::DataError);
  // Payload size does not match the declared shape.
  CHECK_THROWS_AS(
      lss::read_envi(hdr("m4", "ENVI\nsamples = 3\nlines = 3\nbands = 3\n"
                               "data type = 4\ninterleave = bip\nbyte order = 0\n")),
      lss::DataError);
  // Wavelength count disagrees with bands.
  CHECK_THROWS_AS(
      lss::read_envi(hdr("m5", "ENVI\nsamples = 2\nlines = 1\nbands = 2\n"
                               "data type = 4\ninterleave = bip\nbyte order = 0\n"
                               "wavelength = { 400.0 }\n")),
      lss::DataError);
}

TEST_CASE("envi locates data files by common extensions") {
  TempDir tmp;
  float payload[4] = {1, 2, 3, 4};
  write_text(tmp.file("d.hdr"),
             "ENVI\nsamples = 2\nlines = 1\nbands = 2\ndata type = 4\n"
             "interleave = bip\nbyte order = 0\n");
  write_bytes(tmp.file("d.dat"), payload, sizeof payload);
  CHECK(lss::read_envi(tmp.file("d.hdr")).at(0, 1, 1) == 4.0f);
}

TEST_CASE("wavelengths survive a write-read cycle at float precision") {
  TempDir tmp;
  lss::HsiCube cube(1, 1, 3);
  cube.set_wavelengths({400.123456f, 1003.25f, 2399.99976f});
  lss::write_envi(cube, tmp.file("wl"));
  CHECK(lss::read_envi(tmp.file("wl")).wavelengths() == cube.wavelengths());
}

TEST_CASE("pgm round-trip and header handling") {
  TempDir tmp;
  lss::Grid<std::uint8_t> img(3, 5, 0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 5; ++c) img.at(r, c) = static_cast<std::uint8_t>(r * 50 + c);
  lss::write_pgm(img, tmp.file("a.pgm"));
  CHECK(lss::read_pgm(tmp.file("a.pgm")) == img);

  // Comments between header tokens are legal P5.
  std::string body = "P5\n# comment\n2 2\n# another\n255\n";
  body += std::string("\x01\x02\x03\x04", 4);
  write_bytes(tmp.file("b.pgm"), body.data(), body.size());
  lss::Grid<std::uint8_t> b = lss::read_pgm(tmp.file("b.pgm"));
  CHECK(b.at(1, 1) == 4);

  CHECK_THROWS_AS(lss::read_pgm(tmp.file("missing.pgm")), lss::DataError);
  write_text(tmp.file("c.pgm"), "P6\n2 2\n255\nxxxx");
  CHECK_THROWS_AS(lss::read_pgm(tmp.file("c.pgm")), lss::DataError);
  write_text(tmp.file("d.pgm"), "P5\n2 2\n255\nxx");  // truncated pixels
  CHECK_THROWS_AS(lss::read_pgm(tmp.file("d.pgm")), lss::DataError);
}

TEST_CASE("mask pgm convention") {
  TempDir tmp;
  lss::Mask mask(2, 2, 0);
  mask.at(0, 1) = 1;
  mask.at(1, 0) = 200;  // any nonzero counts as set
  lss::write_mask_pgm(mask, tmp.file("m.pgm"));

  lss::Grid<std::uint8_t> raw = lss::read_pgm(tmp.file("m.pgm"));
  CHECK(raw.at(0, 1) == 255);
  CHECK(raw.at(0, 0) == 0);

  lss::Mask back = lss::read_mask_pgm(tmp.file("m.pgm"));
  CHECK(back.at(0, 1) == 1);
  CHECK(back.at(1, 0) == 1);
  CHECK(back.at(0, 0) == 0);
}

TEST_CASE("preview scaling maps the range onto 0..255") {
  lss::EdgeMap map(1, 3);
  map.at(0, 0) = 2.0f;
  map.at(0, 1) = 4.0f;
  map.at(0, 2) = 3.0f;
  lss::Grid<std::uint8_t> u8 = lss::scale_to_u8(map);
  CHECK(u8.at(0, 0) == 0);
  CHECK(u8.at(0, 1) == 255);
  CHECK(u8.at(0, 2) == 128);

  lss::EdgeMap flat(2, 2, 7.5f);
  lss::Grid<std::uint8_t> fu8 = lss::scale_to_u8(flat);
  CHECK(fu8.at(1, 1) == 0);
}

TEST_CASE("float raster round-trip with sidecar") {
  TempDir tmp;
  std::mt19937_64 rng(5);
  lss::EdgeMap map(4, 6);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 6; ++c) map.at(r, c) = dist(rng);

  lss::write_float_raster(map, tmp.file("e.f32"));
  CHECK(fs::exists(tmp.file("e.f32.hdr")));
  CHECK(lss::read_float_raster(tmp.file("e.f32")) == map);

  // Truncated payload must be rejected.
  float half[3] = {1, 2, 3};
  write_bytes(tmp.file("bad.f32"), half, sizeof half);
  write_text(tmp.file("bad.f32.hdr"),
             "rows = 2\ncols = 2\ndtype = float32\nbyte order = 0\n");
  CHECK_THROWS_AS(lss::read_float_raster(tmp.file("bad.f32")), lss::DataError);
}
