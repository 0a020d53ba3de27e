#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "lss/error.hpp"
#include "lss/metrics.hpp"
#include "oracles.hpp"

using lss::MetricKind;
using lss::MetricSpec;

namespace {

MetricSpec spec_of(MetricKind kind) {
  MetricSpec spec;
  spec.kind = kind;
  return spec;
}

// SID/EMD need non-negative spectra; keep the rest signed to exercise abs().
std::pair<std::vector<float>, std::vector<float>> random_pair(
    std::mt19937_64& rng, MetricKind kind, int bands) {
  float lo = (kind == MetricKind::SID || kind == MetricKind::EMD) ? 0.01f : -2.0f;
  return {oracle::random_spectrum(rng, bands, lo, 2.0f),
          oracle::random_spectrum(rng, bands, lo, 2.0f)};
}

}  // namespace

TEST_CASE("every metric matches the straight-formula oracle on random pairs") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> len(2, 64);
  for (MetricKind kind :
       {MetricKind::EU, MetricKind::MAN, MetricKind::FRACT, MetricKind::CHE,
        MetricKind::COS, MetricKind::COR, MetricKind::SID, MetricKind::EMD}) {
    CAPTURE(lss::metric_name(kind));
    MetricSpec spec = spec_of(kind);
    for (int i = 0; i < 1000; ++i) {
      auto [a, b] = random_pair(rng, kind, len(rng));
      double got = lss::distance(a, b, spec);
      double want = static_cast<double>(oracle::straight_distance(a, b, spec));
      CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("fract oracle agreement holds across exponents") {
  std::mt19937_64 rng(31337);
  for (double k : {0.2, 0.5, 0.9}) {
    MetricSpec spec = spec_of(MetricKind::FRACT);
    spec.k_exponent = k;
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_spectrum(rng, 16, -1.0f, 1.0f);
      auto b = oracle::random_spectrum(rng, 16, -1.0f, 1.0f);
      double want = static_cast<double>(oracle::straight_distance(a, b, spec));
      CHECK(lss::distance(a, b, spec) == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("hand-checked values") {
  MetricSpec eu = spec_of(MetricKind::EU);
  CHECK(lss::distance(std::vector<float>{0, 0}, std::vector<float>{3, 4}, eu) ==
        doctest::Approx(5.0).epsilon(1e-12));

  MetricSpec man = spec_of(MetricKind::MAN);
  CHECK(lss::distance(std::vector<float>{1, -1, 2}, std::vector<float>{0, 1, 0},
                      man) == doctest::Approx(5.0).epsilon(1e-12));

  MetricSpec che = spec_of(MetricKind::CHE);
  CHECK(lss::distance(std::vector<float>{1, 5, 2}, std::vector<float>{2, 1, 2},
                      che) == doctest::Approx(4.0).epsilon(1e-12));

  // L_0.5 of |a-b| = (1, 4): (1 + 2)^2 = 9.
  MetricSpec fr = spec_of(MetricKind::FRACT);
  CHECK(lss::distance(std::vector<float>{1, 4}, std::vector<float>{0, 0}, fr) ==
        doctest::Approx(9.0).epsilon(1e-12));

  // Orthogonal vectors: cosine similarity 0, distance 1.
  MetricSpec cos = spec_of(MetricKind::COS);
  CHECK(lss::distance(std::vector<float>{1, 0}, std::vector<float>{0, 1}, cos) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Parallel vectors of different magnitude: distance 0.
  CHECK(lss::distance(std::vector<float>{1, 2}, std::vector<float>{2, 4}, cos) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Perfectly anti-correlated: 1 - (-1) = 2.
  MetricSpec cor = spec_of(MetricKind::COR);
  CHECK(lss::distance(std::vector<float>{0, 1, 2}, std::vector<float>{2, 1, 0},
                      cor) == doctest::Approx(2.0).epsilon(1e-12));
  // Affine images of each other correlate perfectly: distance 0.
  CHECK(lss::distance(std::vector<float>{0, 1, 2}, std::vector<float>{5, 7, 9},
                      cor) == doctest::Approx(0.0).epsilon(1e-12));

  // All mass moved across one bin.
  MetricSpec emd = spec_of(MetricKind::EMD);
  CHECK(lss::distance(std::vector<float>{1, 0}, std::vector<float>{0, 1}, emd) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // ... and across two bins.
  CHECK(lss::distance(std::vector<float>{1, 0, 0}, std::vector<float>{0, 0, 1},
                      emd) == doctest::Approx(2.0).epsilon(1e-12));

  // Symmetric KL of (1/2,1/2) vs (1/4,3/4): (1/2-1/4)log2 + (1/2-3/4)log(2/3).
  MetricSpec sid = spec_of(MetricKind::SID);
  double want = 0.25 * std::log(2.0) - 0.25 * std::log(2.0 / 3.0);
  CHECK(lss::distance(std::vector<float>{2, 2}, std::vector<float>{1, 3}, sid) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("identity of indiscernibles and symmetry") {
  std::mt19937_64 rng(99);
  for (MetricKind kind :
       {MetricKind::EU, MetricKind::MAN, MetricKind::FRACT, MetricKind::CHE,
        MetricKind::COS, MetricKind::COR, MetricKind::SID, MetricKind::EMD}) {
    CAPTURE(lss::metric_name(kind));
    MetricSpec spec = spec_of(kind);
    for (int i = 0; i < 100; ++i) {
      auto [a, b] = random_pair(rng, kind, 12);
      CHECK(lss::distance(a, a, spec) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(lss::distance(a, b, spec) ==
            doctest::Approx(lss::distance(b, a, spec)).epsilon(1e-12));
      CHECK(lss::distance(a, b, spec) >= 0.0);
    }
  }
}

TEST_CASE("triangle inequality for the true metrics") {
  std::mt19937_64 rng(4242);
  for (MetricKind kind : {MetricKind::EU, MetricKind::MAN, MetricKind::CHE,
                          MetricKind::EMD}) {
    CAPTURE(lss::metric_name(kind));
    MetricSpec spec = spec_of(kind);
    float lo = (kind == MetricKind::SID || kind == MetricKind::EMD) ? 0.01f : -2.0f;
    for (int i = 0; i < 500; ++i) {
      auto [a, b] = random_pair(rng, kind, 8);
      auto c = oracle::random_spectrum(rng, 8, lo, 2.0f);
      double ab = lss::distance(a, b, spec);
      double bc = lss::distance(b, c, spec);
      double ac = lss::distance(a, c, spec);
      CHECK(ac <= ab + bc + 1e-9);
    }
  }
}

TEST_CASE("cosine and correlation never go negative on near-parallel input") {
  // 1 - similarity can land a hair below zero in floating point; the
  // distance must clamp it.
  std::mt19937_64 rng(7);
  MetricSpec cos = spec_of(MetricKind::COS);
  MetricSpec cor = spec_of(MetricKind::COR);
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_spectrum(rng, 32, 0.1f, 1.0f);
    std::vector<float> b(a);
    for (auto& v : b) v *= 3.0f;
    CHECK(lss::distance(a, b, cos) >= 0.0);
    std::vector<float> shifted(a);
    for (auto& v : shifted) v += 2.0f;
    CHECK(lss::distance(a, shifted, cor) >= 0.0);
  }
}

TEST_CASE("one-dimensional earth mover matches the transportation solver") {
  std::mt19937_64 rng(60221409);
  std::uniform_int_distribution<int> len(2, 5);
  std::uniform_real_distribution<float> mass(0.0f, 3.0f);
  MetricSpec emd = spec_of(MetricKind::EMD);
  int done = 0;
  while (done < 200) {
    int n = len(rng);
    std::vector<float> a(n), b(n);
    std::vector<double> ad(n), bd(n);
    double sa = 0.0, sb = 0.0;
    for (int i = 0; i < n; ++i) {
      a[i] = mass(rng);
      b[i] = mass(rng);
      ad[i] = a[i];
      bd[i] = b[i];
      sa += a[i];
      sb += b[i];
    }
    if (sa <= 0.0 || sb <= 0.0) continue;
    double got = lss::distance(a, b, emd);
    double want = oracle::emd_transport_lp(ad, bd);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
    ++done;
  }
}

TEST_CASE("earth mover transportation solver on point masses") {
  // Unit mass at bin 0 vs bin 4: all mass travels distance 4.
  CHECK(oracle::emd_transport_lp({1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}) ==
        doctest::Approx(4.0).epsilon(1e-12));
  // Split destinations: half goes 1 step, half goes 2.
  CHECK(oracle::emd_transport_lp({0, 1, 0}, {0.5, 0, 0.5}) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("domain errors") {
  MetricSpec sid = spec_of(MetricKind::SID);
  MetricSpec emd = spec_of(MetricKind::EMD);
  std::vector<float> neg{1.0f, -0.5f};
  std::vector<float> pos{0.5f, 0.5f};
  std::vector<float> zero{0.0f, 0.0f};
  CHECK_THROWS_AS(lss::distance(neg, pos, sid), lss::DataError);
  CHECK_THROWS_AS(lss::distance(pos, zero, sid), lss::DataError);
  CHECK_THROWS_AS(lss::distance(neg, pos, emd), lss::DataError);
  CHECK_THROWS_AS(lss::distance(pos, zero, emd), lss::DataError);

  MetricSpec cos = spec_of(MetricKind::COS);
  std::vector<float> single{1.0f};
  CHECK_THROWS_AS(lss::distance(single, single, cos), lss::DataError);
  CHECK_THROWS_AS(lss::distance(zero, pos, cos), lss::DataError);

  MetricSpec cor = spec_of(MetricKind::COR);
  std::vector<float> flat{1.0f, 1.0f};
  CHECK_THROWS_AS(lss::distance(flat, pos, cor), lss::DataError);

  std::vector<float> longer{1.0f, 2.0f, 3.0f};
  CHECK_THROWS_AS(lss::distance(pos, longer, spec_of(MetricKind::EU)),
                  lss::DataError);
  CHECK_THROWS_AS(lss::distance(std::vector<float>{}, std::vector<float>{},
                                spec_of(MetricKind::EU)),
                  lss::DataError);
}

TEST_CASE("spec validation") {
  MetricSpec fr = spec_of(MetricKind::FRACT);
  fr.k_exponent = 1.0;
  CHECK_THROWS_AS(lss::validate(fr), lss::UsageError);
  fr.k_exponent = 0.0;
  CHECK_THROWS_AS(lss::validate(fr), lss::UsageError);
  fr.k_exponent = -0.5;
  CHECK_THROWS_AS(lss::validate(fr), lss::UsageError);
  fr.k_exponent = 0.5;
  CHECK_NOTHROW(lss::validate(fr));

  MetricSpec sid = spec_of(MetricKind::SID);
  sid.epsilon = 0.0;
  CHECK_THROWS_AS(lss::validate(sid), lss::UsageError);
}

TEST_CASE("metric grammar") {
  CHECK(lss::parse_metric("eu").kind == MetricKind::EU);
  CHECK(lss::parse_metric("EU").kind == MetricKind::EU);
  CHECK(lss::parse_metric("fract").k_exponent == doctest::Approx(0.5));
  CHECK(lss::parse_metric("fract:0.7").k_exponent == doctest::Approx(0.7));
  CHECK(lss::parse_metric("sid:1e-10").epsilon == doctest::Approx(1e-10));
  CHECK(lss::parse_metric("emd").kind == MetricKind::EMD);

  CHECK_THROWS_AS(lss::parse_metric("euclid"), lss::UsageError);
  CHECK_THROWS_AS(lss::parse_metric("man:0.5"), lss::UsageError);
  CHECK_THROWS_AS(lss::parse_metric("fract:abc"), lss::UsageError);
  CHECK_THROWS_AS(lss::parse_metric("fract:1.5"), lss::UsageError);
  CHECK_THROWS_AS(lss::parse_metric(""), lss::UsageError);
}
