#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lss/cli.hpp"
#include "lss/cube.hpp"
#include "lss/envi_io.hpp"
#include "lss/pgm_io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lss_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(std::initializer_list<std::string> args) {
  std::vector<std::string> full = {"lss"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  return lss::run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("synthesize, detect, binarize and score end to end") {
  TempDir tmp;
  REQUIRE(run({"synth", "--preset", "two-region", "--rows", "32", "--cols", "32",
               "--bands", "16", "--mix-width", "1", "--seed", "11", "--out",
               tmp.file("scene"), "--truth", tmp.file("truth.pgm")}) == 0);
  CHECK(fs::exists(tmp.file("scene.hdr")));
  CHECK(fs::exists(tmp.file("truth.pgm")));
  CHECK(fs::exists(tmp.file("scene.manifest")));
  CHECK(slurp(tmp.file("scene.manifest")).find("command = ") != std::string::npos);

  REQUIRE(run({"info", tmp.file("scene.hdr")}) == 0);

  REQUIRE(run({"edges", "--in", tmp.file("scene.hdr"), "--metric", "eu", "--agg",
               "median", "--window", "5", "--threads", "1", "--out",
               tmp.file("edges.pgm"), "--out-float", tmp.file("edges.f32")}) == 0);
  CHECK(fs::exists(tmp.file("edges.pgm")));
  CHECK(fs::exists(tmp.file("edges.f32")));
  CHECK(fs::exists(tmp.file("edges.pgm.manifest")));

  REQUIRE(run({"binarize", "--in", tmp.file("edges.f32"), "--out",
               tmp.file("mask.pgm")}) == 0);

  REQUIRE(run({"eval", "--edges", tmp.file("mask.pgm"), "--truth",
               tmp.file("truth.pgm"), "--out", tmp.file("score.csv")}) == 0);
  std::string csv = slurp(tmp.file("score.csv"));
  CHECK(csv.find("fac,mc,fom,fom100") != std::string::npos);
  // A clean two-region ramp is detected exactly: no false or missed pixels.
  CHECK(csv.find("0,0,1,100") != std::string::npos);
}

TEST_CASE("usage problems exit 1, data problems exit 2") {
  TempDir tmp;
  CHECK(run({}) == 1);                       // a subcommand is required
  CHECK(run({"transmogrify"}) == 1);         // unknown subcommand
  CHECK(run({"info"}) == 1);                 // missing required argument
  CHECK(run({"info", "--bogus", "x"}) == 1); // unknown flag
  CHECK(run({"info", tmp.file("absent.hdr")}) == 2);
  CHECK(run({"binarize", "--in", tmp.file("absent.f32"), "--out",
             tmp.file("m.pgm")}) == 2);
  CHECK(run({"repro", "nonsense", "--outdir", tmp.file("out")}) == 1);

  CHECK(run({"--help"}) == 0);
  CHECK(run({"--version"}) == 0);
  CHECK(run({"edges", "--help"}) == 0);
}

TEST_CASE("metric grammar and kernel rules are enforced up front") {
  TempDir tmp;
  REQUIRE(run({"synth", "--preset", "two-region", "--rows", "8", "--cols", "8",
               "--bands", "4", "--seed", "3", "--out", tmp.file("s")}) == 0);

  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--metric", "euclid", "--out",
             tmp.file("e.pgm")}) == 1);
  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--metric", "fract:1.5",
             "--out", tmp.file("e.pgm")}) == 1);
  // conv without --kernel falls back to the built-in mean kernel
  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--agg", "conv", "--out",
             tmp.file("e.pgm")}) == 0);
  // A kernel without conv is a contradiction, not silently ignored.
  std::ofstream(tmp.file("k.txt")) << "0 0 0 0 0 0 0 0 0";
  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--agg", "median", "--kernel",
             tmp.file("k.txt"), "--out", tmp.file("e.pgm")}) == 1);
  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--window", "4", "--out",
             tmp.file("e.pgm")}) == 1);

  std::ofstream(tmp.file("mean.txt"))
      << "0.125 0.125 0.125 0.125 0 0.125 0.125 0.125 0.125";
  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--agg", "conv", "--kernel",
             tmp.file("mean.txt"), "--out", tmp.file("e.pgm")}) == 0);
  // Wrong weight count for the window is a data error.
  CHECK(run({"edges", "--in", tmp.file("s.hdr"), "--agg", "conv", "--window",
             "5", "--kernel", tmp.file("mean.txt"), "--out",
             tmp.file("e.pgm")}) == 2);
}

TEST_CASE("cluster labels map to distinct gray levels with masked pixels black") {
  TempDir tmp;
  // Two flat half-planes clustered with k=2, with one column masked out.
  lss::HsiCube cube(8, 8, 3);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      for (int b = 0; b < 3; ++b) cube.at(r, c, b) = c < 4 ? 0.1f : 0.9f;
  lss::write_envi(cube, tmp.file("blob"), lss::Interleave::BSQ);

  lss::Mask mask(8, 8, 0);
  for (int r = 0; r < 8; ++r) mask.at(r, 4) = 255;
  lss::write_pgm(mask, tmp.file("mask.pgm"));

  REQUIRE(run({"cluster", "--in", tmp.file("blob.hdr"), "--k", "2", "--mask",
               tmp.file("mask.pgm"), "--seed", "9", "--out",
               tmp.file("labels.pgm"), "--centroids", tmp.file("c.csv")}) == 0);

  lss::Mask labels = lss::read_pgm(tmp.file("labels.pgm"));
  for (int r = 0; r < 8; ++r) {
    CHECK(labels.at(r, 4) == 0);  // masked
    CHECK(labels.at(r, 0) == labels.at(r, 1));
    CHECK(labels.at(r, 7) == labels.at(r, 6));
    CHECK(labels.at(r, 0) != labels.at(r, 7));
    bool lo_ok = labels.at(r, 0) == 127 || labels.at(r, 0) == 255;
    CHECK(lo_ok);
  }
  std::string csv = slurp(tmp.file("c.csv"));
  CHECK(csv.find("label,b0,b1,b2") != std::string::npos);

  REQUIRE(run({"cluster", "--in", tmp.file("blob.hdr"), "--k", "2", "--mask",
               tmp.file("mask.pgm"), "--seed", "9", "--fill-masked", "--out",
               tmp.file("filled.pgm")}) == 0);
  lss::Mask filled = lss::read_pgm(tmp.file("filled.pgm"));
  for (int r = 0; r < 8; ++r) CHECK(filled.at(r, 4) != 0);
}

TEST_CASE("auxiliary transforms run and leave manifests behind") {
  TempDir tmp;
  REQUIRE(run({"synth", "--preset", "quadrant", "--rows", "16", "--cols", "16",
               "--bands", "8", "--mix-width", "1", "--seed", "4", "--out",
               tmp.file("q"), "--truth", tmp.file("qt.pgm")}) == 0);

  CHECK(run({"noise", "--in", tmp.file("q.hdr"), "--max-variance", "0.01",
             "--seed", "5", "--out", tmp.file("qn")}) == 0);
  CHECK(fs::exists(tmp.file("qn.hdr")));
  CHECK(fs::exists(tmp.file("qn.manifest")));

  CHECK(run({"downsample", "--in", tmp.file("q.hdr"), "--factor", "2", "--out",
             tmp.file("qd")}) == 0);
  CHECK(run({"info", tmp.file("qd.hdr")}) == 0);

  CHECK(run({"pca", "--in", tmp.file("q.hdr"), "--components", "3", "--out",
             tmp.file("qp")}) == 0);
  CHECK(fs::exists(tmp.file("qp.hdr")));

  CHECK(run({"baseline", "--in", tmp.file("q.hdr"), "--kind", "sobelxy",
             "--out", tmp.file("qb.pgm"), "--out-float",
             tmp.file("qb.f32")}) == 0);
  CHECK(run({"baseline", "--in", tmp.file("q.hdr"), "--kind", "canny", "--out",
             tmp.file("qb.pgm")}) == 1);

  CHECK(run({"bandsens", "--in", tmp.file("q.hdr"), "--truth", tmp.file("qt.pgm"),
             "--bins", "16", "--out", tmp.file("nmi.csv")}) == 0);
  std::string csv = slurp(tmp.file("nmi.csv"));
  CHECK(csv.find("band,") != std::string::npos);
}

TEST_CASE("repro writes its artifacts into the requested directory") {
  TempDir tmp;
  REQUIRE(run({"repro", "windows", "--outdir", tmp.file("out"), "--seed", "42",
               "--threads", "1"}) == 0);
  std::string csv = slurp(tmp.file("out/windows.csv"));
  CHECK(csv.find("window,otsu_positives") != std::string::npos);
}
