#include "lss/repro.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "lss/binarize.hpp"
#include "lss/cluster.hpp"
#include "lss/envi_io.hpp"
#include "lss/evaluate.hpp"
#include "lss/lss.hpp"
#include "lss/pgm_io.hpp"
#include "lss/synth.hpp"

namespace lss {
namespace {

LssConfig median_config(int window, MetricKind kind) {
  LssConfig cfg;
  cfg.window = window;
  cfg.metric.kind = kind;
  cfg.aggregator = Aggregator::MEDIAN;
  return cfg;
}

EvalReport run_cell(const HsiCube& cube, const GroundTruthEdges& truth,
                    const LssConfig& cfg, int threads) {
  EdgeMap map = edge_map(cube, cfg, {}, threads);
  return evaluate(otsu_threshold(map), truth);
}

long positives(const Mask& mask) {
  long n = 0;
  for (int r = 0; r < mask.rows(); ++r)
    for (int c = 0; c < mask.cols(); ++c)
      if (mask.at(r, c)) ++n;
  return n;
}

float map_max(const EdgeMap& map) {
  float m = map.data()[0];
  for (std::size_t i = 0; i < map.size(); ++i) m = std::max(m, map.data()[i]);
  return m;
}

// Boundary-scene grid: median vs mean aggregation for six metrics. The
// median column must never show more false alarms than the mean column.
bool repro_table1(const std::string& outdir, std::uint64_t seed, int threads) {
  auto scene = synth_scene(make_two_region_spec(64, 64, 50, 1, seed));
  write_envi(scene.cube, outdir + "/table1_scene");
  write_mask_pgm(scene.truth.mask, outdir + "/table1_truth.pgm");

  const MetricKind kinds[] = {MetricKind::EU,  MetricKind::COS, MetricKind::COR,
                              MetricKind::CHE, MetricKind::EMD, MetricKind::FRACT};
  std::ofstream csv(outdir + "/table1.csv");
  csv << "metric,agg,fac,mc,fom100\n";
  std::cout << std::left << std::setw(8) << "metric" << std::right
            << std::setw(10) << "med.fac" << std::setw(9) << "med.mc"
            << std::setw(10) << "med.fom" << std::setw(10) << "mean.fac"
            << std::setw(9) << "mean.mc" << std::setw(10) << "mean.fom" << "\n";
  bool ok = true;
  for (MetricKind kind : kinds) {
    LssConfig cfg = median_config(5, kind);
    EvalReport med = run_cell(scene.cube, scene.truth, cfg, threads);
    cfg.aggregator = Aggregator::MEAN;
    EvalReport mean = run_cell(scene.cube, scene.truth, cfg, threads);
    csv << std::fixed << std::setprecision(2);
    csv << metric_name(kind) << ",median," << med.fac << ',' << med.mc << ','
        << med.fom100() << "\n";
    csv << metric_name(kind) << ",mean," << mean.fac << ',' << mean.mc << ','
        << mean.fom100() << "\n";
    std::cout << std::left << std::setw(8) << metric_name(kind) << std::right
              << std::setw(10) << med.fac << std::setw(9) << med.mc
              << std::setw(10) << std::fixed << std::setprecision(2)
              << med.fom100() << std::setw(10) << mean.fac << std::setw(9)
              << mean.mc << std::setw(10) << mean.fom100() << "\n";
    if (med.fac > mean.fac) ok = false;
  }
  std::cout << (ok ? "table1: median fac <= mean fac for every metric\n"
                   : "table1: FAILED, median fac exceeds mean fac\n");
  return ok;
}

// Noise sweep: a larger median window should win under heavy band noise.
bool repro_noise(const std::string& outdir, std::uint64_t seed, int threads) {
  auto scene = synth_scene(make_two_region_spec(64, 64, 50, 1, seed));
  std::ofstream csv(outdir + "/noise.csv");
  csv << "seed,fom3,fom7\n";
  int agree = 0;
  double avg3 = 0.0, avg7 = 0.0;
  const int n_seeds = 10;
  for (int s = 0; s < n_seeds; ++s) {
    HsiCube noisy = add_gaussian_noise(scene.cube, 0.05, seed + 1000 + s);
    LssConfig cfg = median_config(3, MetricKind::FRACT);
    double fom3 = run_cell(noisy, scene.truth, cfg, threads).fom;
    cfg.window = 7;
    double fom7 = run_cell(noisy, scene.truth, cfg, threads).fom;
    csv << (seed + 1000 + s) << ',' << fom3 << ',' << fom7 << "\n";
    std::cout << "seed " << seed + 1000 + s << ": fom 3x3 = " << std::fixed
              << std::setprecision(4) << fom3 << ", fom 7x7 = " << fom7 << "\n";
    if (fom7 > fom3) ++agree;
    avg3 += fom3 / n_seeds;
    avg7 += fom7 / n_seeds;
  }
  std::cout << "7x7 beats 3x3 on " << agree << "/" << n_seeds
            << " seeds (avg " << avg7 << " vs " << avg3 << ")\n";
  return agree >= 9 && avg7 > avg3;
}

// Window sweep: the detected ridge grows with the window.
bool repro_windows(const std::string& outdir, std::uint64_t seed, int threads) {
  auto scene = synth_scene(make_two_region_spec(64, 64, 50, 1, seed));
  std::ofstream csv(outdir + "/windows.csv");
  csv << "window,otsu_positives\n";
  long counts[2] = {0, 0};
  int windows[2] = {3, 7};
  for (int i = 0; i < 2; ++i) {
    EdgeMap map =
        edge_map(scene.cube, median_config(windows[i], MetricKind::EU), {}, threads);
    counts[i] = positives(otsu_threshold(map).mask);
    csv << windows[i] << ',' << counts[i] << "\n";
    std::cout << windows[i] << "x" << windows[i]
              << " otsu positives: " << counts[i] << "\n";
  }
  return counts[1] > counts[0];
}

// Downsampling: the edge response weakens as the boundary is averaged away,
// but the boundary survives a factor-2 downsample.
bool repro_downsample(const std::string& outdir, std::uint64_t seed, int threads) {
  auto scene = synth_scene(make_two_region_spec(64, 64, 50, 1, seed));
  std::ofstream csv(outdir + "/downsample.csv");
  csv << "factor,max_response,mc\n";
  const LssConfig cfg = median_config(5, MetricKind::EU);
  float prev = 0.0f;
  bool ok = true;
  for (int factor : {1, 2, 4}) {
    HsiCube small = downsample(scene.cube, factor);
    EdgeMap map = edge_map(small, cfg, {}, threads);
    float mx = map_max(map);
    auto truth = synth_scene(make_two_region_spec(64 / factor, 64 / factor, 50,
                                                  1, seed))
                     .truth;
    long mc = evaluate(otsu_threshold(map), truth).mc;
    csv << factor << ',' << mx << ',' << mc << "\n";
    std::cout << "factor " << factor << ": max response = " << mx
              << ", mc = " << mc << "\n";
    if (factor > 1 && mx > prev) ok = false;
    if (factor == 2 && mc != 0) ok = false;
    prev = mx;
  }
  return ok;
}

// Masked clustering: mixed boundary pixels derail k-means; masking them with
// the detected edges removes every misassignment among the kept pixels.
bool repro_cluster(const std::string& outdir, std::uint64_t seed, int threads) {
  auto scene = synth_scene(make_two_region_spec(64, 64, 50, 2, seed));
  Mask mask =
      otsu_threshold(edge_map(scene.cube, median_config(7, MetricKind::EU), {}, threads))
          .mask;
  write_mask_pgm(mask, outdir + "/cluster_mask.pgm");

  std::ofstream csv(outdir + "/cluster.csv");
  csv << "seed,mismatch_unmasked,mismatch_masked\n";
  bool ok = true;
  for (int s = 0; s < 10; ++s) {
    ClusterMap plain = kmeans_cluster(scene.cube, 2, nullptr, seed + s, 100, threads);
    ClusterMap masked = kmeans_cluster(scene.cube, 2, &mask, seed + s, 100, threads);
    long mis_plain = best_permutation_mismatches(plain.labels, scene.labels, 2);
    long mis_masked = best_permutation_mismatches(masked.labels, scene.labels, 2);
    csv << (seed + s) << ',' << mis_plain << ',' << mis_masked << "\n";
    std::cout << "seed " << seed + s << ": mismatches unmasked = " << mis_plain
              << ", masked = " << mis_masked << "\n";
    if (mis_plain < 1 || mis_masked != 0) ok = false;
  }
  return ok;
}

}  // namespace

const std::vector<std::string>& repro_names() {
  static const std::vector<std::string> names = {"table1", "noise", "windows",
                                                 "downsample", "cluster"};
  return names;
}

bool run_repro(const std::string& pipeline, const std::string& outdir,
               std::uint64_t seed, int threads) {
  std::filesystem::create_directories(outdir);
  if (pipeline == "table1") return repro_table1(outdir, seed, threads);
  if (pipeline == "noise") return repro_noise(outdir, seed, threads);
  if (pipeline == "windows") return repro_windows(outdir, seed, threads);
  if (pipeline == "downsample") return repro_downsample(outdir, seed, threads);
  if (pipeline == "cluster") return repro_cluster(outdir, seed, threads);
  std::string known;
  for (const auto& n : repro_names()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown pipeline '" + pipeline + "' (known: " + known + ")");
}

}  // namespace lss
