#include "lss/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "lss/band_mi.hpp"
#include "lss/baseline.hpp"
#include "lss/binarize.hpp"
#include "lss/cluster.hpp"
#include "lss/envi_io.hpp"
#include "lss/evaluate.hpp"
#include "lss/lss.hpp"
#include "lss/manifest.hpp"
#include "lss/pca.hpp"
#include "lss/pgm_io.hpp"
#include "lss/repro.hpp"
#include "lss/synth.hpp"
#include "lss/version.hpp"

namespace lss {
namespace {

class Timer {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Grid<float> load_kernel(const std::string& path, int window) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open kernel file '" + path + "'");
  std::vector<float> weights;
  double v;
  while (in >> v) weights.push_back(static_cast<float>(v));
  if (static_cast<int>(weights.size()) != window * window)
    throw DataError("kernel file '" + path + "' has " +
                    std::to_string(weights.size()) + " weights, expected " +
                    std::to_string(window * window));
  Grid<float> kernel(window, window);
  for (int r = 0; r < window; ++r)
    for (int c = 0; c < window; ++c)
      kernel.at(r, c) = weights[static_cast<std::size_t>(r) * window + c];
  return kernel;
}

struct EdgesOpts {
  std::string in, metric = "eu", agg = "median", pad = "replicate";
  std::string exclude, kernel_path, out, out_float;
  int window = 3;
  int threads = 0;
};

struct SynthOpts {
  std::string preset = "two-region", out, truth, interleave = "bip";
  int rows = 64, cols = 64, bands = 50, mix_width = 1;
  std::uint64_t seed = 42;
};

void cmd_info(const std::string& path) {
  HsiCube cube = read_envi(path);
  float lo = cube.data()[0], hi = lo;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    lo = std::min(lo, cube.data()[i]);
    hi = std::max(hi, cube.data()[i]);
  }
  std::cout << "rows = " << cube.rows() << "\n"
            << "cols = " << cube.cols() << "\n"
            << "bands = " << cube.bands() << "\n"
            << "wavelengths = " << (cube.wavelengths().empty() ? "absent" : "present")
            << "\n"
            << "min = " << lo << "\n"
            << "max = " << hi << "\n";
}

void cmd_synth(const SynthOpts& o, const std::string& cmdline) {
  Timer timer;
  SceneSpec spec;
  if (o.preset == "two-region")
    spec = make_two_region_spec(o.rows, o.cols, o.bands, o.mix_width, o.seed);
  else if (o.preset == "quadrant")
    spec = make_quadrant_spec(o.rows, o.cols, o.bands, o.mix_width, o.seed);
  else
    throw UsageError("unknown preset '" + o.preset +
                     "' (known: two-region, quadrant)");
  SynthScene scene = synth_scene(spec);
  write_envi(scene.cube, o.out, interleave_from_string(o.interleave));
  if (!o.truth.empty()) write_mask_pgm(scene.truth.mask, o.truth);

  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add("config.preset", o.preset);
  m.add("config.rows", static_cast<long long>(o.rows));
  m.add("config.cols", static_cast<long long>(o.cols));
  m.add("config.bands", static_cast<long long>(o.bands));
  m.add("config.mix_width", static_cast<long long>(o.mix_width));
  m.add("seed", static_cast<long long>(o.seed));
  m.add("duration_ms", timer.ms());
  m.write(o.out + ".manifest");
  std::cout << "wrote " << o.out << " (" << scene.cube.rows() << "x"
            << scene.cube.cols() << "x" << scene.cube.bands() << ")\n";
}

void cmd_noise(const std::string& in, double max_variance, std::uint64_t seed,
               const std::string& out, const std::string& interleave,
               const std::string& cmdline) {
  Timer timer;
  HsiCube noisy = add_gaussian_noise(read_envi(in), max_variance, seed);
  write_envi(noisy, out, interleave_from_string(interleave));
  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", in);
  m.add("config.max_variance", max_variance);
  m.add("seed", static_cast<long long>(seed));
  m.add("duration_ms", timer.ms());
  m.write(out + ".manifest");
  std::cout << "wrote " << out << "\n";
}

void cmd_downsample(const std::string& in, int factor, const std::string& out,
                    const std::string& interleave, const std::string& cmdline) {
  Timer timer;
  HsiCube small = downsample(read_envi(in), factor);
  write_envi(small, out, interleave_from_string(interleave));
  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", in);
  m.add("config.factor", static_cast<long long>(factor));
  m.add("duration_ms", timer.ms());
  m.write(out + ".manifest");
  std::cout << "wrote " << out << " (" << small.rows() << "x" << small.cols()
            << "x" << small.bands() << ")\n";
}

void cmd_edges(const EdgesOpts& o, const std::string& cmdline) {
  Timer timer;
  HsiCube cube = read_envi(o.in);
  LssConfig cfg;
  cfg.window = o.window;
  cfg.metric = parse_metric(o.metric);
  cfg.aggregator = parse_aggregator(o.agg);
  cfg.padding = parse_padding(o.pad);
  if (cfg.aggregator == Aggregator::CONV)
    cfg.kernel = o.kernel_path.empty() ? mean_kernel(o.window)
                                       : load_kernel(o.kernel_path, o.window);
  else if (!o.kernel_path.empty())
    throw UsageError("--kernel requires --agg conv");
  std::vector<int> exclude = parse_band_list(o.exclude);

  EdgeMap map = edge_map(cube, cfg, exclude, o.threads);
  write_pgm(scale_to_u8(map), o.out);
  if (!o.out_float.empty()) write_float_raster(map, o.out_float);

  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", o.in);
  m.add("config.metric", o.metric);
  m.add("config.agg", o.agg);
  m.add("config.window", static_cast<long long>(o.window));
  m.add("config.pad", o.pad);
  m.add("config.exclude_bands", o.exclude.empty() ? "none" : o.exclude);
  m.add("config.threads", static_cast<long long>(o.threads));
  m.add("duration_ms", timer.ms());
  m.write(o.out + ".manifest");
  std::cout << "wrote " << o.out;
  if (!o.out_float.empty()) std::cout << " and " << o.out_float;
  std::cout << "\n";
}

void cmd_baseline(const std::string& in, const std::string& kind,
                  const std::string& out, const std::string& out_float,
                  int threads, const std::string& cmdline) {
  Timer timer;
  EdgeMap map = baseline_edge_map(read_envi(in), parse_baseline(kind), threads);
  write_pgm(scale_to_u8(map), out);
  if (!out_float.empty()) write_float_raster(map, out_float);
  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", in);
  m.add("config.kind", kind);
  m.add("duration_ms", timer.ms());
  m.write(out + ".manifest");
  std::cout << "wrote " << out << "\n";
}

void cmd_pca(const std::string& in, int components, const std::string& out,
             const std::string& interleave, const std::string& cmdline) {
  Timer timer;
  HsiCube cube = read_envi(in);
  PcaModel model = pca_fit(cube, components);
  HsiCube projected = pca_project(cube, model);
  write_envi(projected, out, interleave_from_string(interleave));
  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", in);
  m.add("config.components", static_cast<long long>(components));
  m.add("duration_ms", timer.ms());
  m.write(out + ".manifest");
  std::cout << "explained variance:";
  for (double ev : model.explained_variance) std::cout << " " << ev;
  std::cout << "\nwrote " << out << "\n";
}

void cmd_binarize(const std::string& in, const std::string& out,
                  const std::string& cmdline) {
  Timer timer;
  BinaryEdgeMap bem = otsu_threshold(read_float_raster(in));
  write_mask_pgm(bem.mask, out);
  long n = 0;
  for (int r = 0; r < bem.mask.rows(); ++r)
    for (int c = 0; c < bem.mask.cols(); ++c)
      if (bem.mask.at(r, c)) ++n;
  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", in);
  m.add("threshold", static_cast<double>(bem.threshold));
  m.add("degenerate", static_cast<long long>(bem.degenerate ? 1 : 0));
  m.add("duration_ms", timer.ms());
  m.write(out + ".manifest");
  std::cout << "threshold = " << bem.threshold << "\n"
            << "degenerate = " << (bem.degenerate ? 1 : 0) << "\n"
            << "positives = " << n << "\n"
            << "wrote " << out << "\n";
}

void cmd_eval(const std::string& edges, const std::string& truth, double alpha,
              const std::string& out, const std::string& cmdline) {
  Timer timer;
  BinaryEdgeMap actual;
  actual.mask = read_mask_pgm(edges);
  GroundTruthEdges ideal{read_mask_pgm(truth)};
  EvalReport rep = evaluate(actual, ideal, alpha);

  char csv[128];
  std::snprintf(csv, sizeof csv, "%ld,%ld,%.9g,%.9g", rep.fac, rep.mc, rep.fom,
                rep.fom100());
  std::cout << csv << "\n";
  std::cout << "n_actual = " << rep.n_actual << "\n"
            << "n_ideal = " << rep.n_ideal << "\n"
            << "fac = " << rep.fac << "\n"
            << "mc = " << rep.mc << "\n"
            << "fom = " << rep.fom << "\n"
            << "alpha = " << rep.alpha << "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw DataError("cannot write '" + out + "'");
    f << "fac,mc,fom,fom100\n" << csv << "\n";
    RunManifest m;
    m.add("command", cmdline);
    m.add("version", kVersion);
    m.add_input("edges", edges);
    m.add_input("truth", truth);
    m.add("config.alpha", alpha);
    m.add("duration_ms", timer.ms());
    m.write(out + ".manifest");
  }
}

void cmd_cluster(const std::string& in, int k, const std::string& mask_path,
                 std::uint64_t seed, int max_iter, bool fill, int threads,
                 const std::string& out, const std::string& centroids_path,
                 const std::string& cmdline) {
  Timer timer;
  HsiCube cube = read_envi(in);
  Mask mask;
  if (!mask_path.empty()) mask = read_mask_pgm(mask_path);
  ClusterMap result = kmeans_cluster(cube, k, mask_path.empty() ? nullptr : &mask,
                                     seed, max_iter, threads);
  if (fill) fill_masked_labels(result);

  Grid<std::uint8_t> img(result.labels.rows(), result.labels.cols(), 0);
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c) {
      std::int32_t label = result.labels.at(r, c);
      if (label >= 0)
        img.at(r, c) = static_cast<std::uint8_t>((label + 1) * 255 / k);
    }
  write_pgm(img, out);

  if (!centroids_path.empty()) {
    std::ofstream f(centroids_path);
    if (!f) throw DataError("cannot write '" + centroids_path + "'");
    f << "label";
    for (int b = 0; b < cube.bands(); ++b) f << ",b" << b;
    f << "\n";
    f.precision(9);
    for (int cc = 0; cc < k; ++cc) {
      f << cc;
      for (float v : result.centroids[cc]) f << ',' << v;
      f << "\n";
    }
  }

  RunManifest m;
  m.add("command", cmdline);
  m.add("version", kVersion);
  m.add_input("in", in);
  if (!mask_path.empty()) m.add_input("mask", mask_path);
  m.add("config.k", static_cast<long long>(k));
  m.add("config.max_iter", static_cast<long long>(max_iter));
  m.add("config.fill_masked", static_cast<long long>(fill ? 1 : 0));
  m.add("seed", static_cast<long long>(seed));
  m.add("duration_ms", timer.ms());
  m.write(out + ".manifest");
  std::cout << "iterations = " << result.iterations << "\n"
            << "objective = " << result.objective_history.back() << "\n"
            << "wrote " << out << "\n";
}

void cmd_bandsens(const std::string& in, const std::string& truth, int bins,
                  const std::string& out, const std::string& cmdline) {
  Timer timer;
  HsiCube cube = read_envi(in);
  GroundTruthEdges ideal{read_mask_pgm(truth)};
  std::vector<double> nmi = band_mi_sensitivity(cube, ideal, bins);

  std::ostringstream csv;
  csv << "band,nmi\n";
  csv.precision(9);
  for (std::size_t b = 0; b < nmi.size(); ++b) csv << b << ',' << nmi[b] << "\n";
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out);
    if (!f) throw DataError("cannot write '" + out + "'");
    f << csv.str();
    RunManifest m;
    m.add("command", cmdline);
    m.add("version", kVersion);
    m.add_input("in", in);
    m.add_input("truth", truth);
    m.add("config.bins", static_cast<long long>(bins));
    m.add("duration_ms", timer.ms());
    m.write(out + ".manifest");
    std::cout << "wrote " << out << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  std::string cmdline;
  for (int i = 0; i < argc; ++i) {
    if (i) cmdline += ' ';
    cmdline += argv[i];
  }

  CLI::App app{"local spectral similarity edge detection for hyperspectral cubes"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "print cube dimensions and value range");
  auto info_path = std::make_shared<std::string>();
  info->add_option("path", *info_path, "ENVI header or data file")->required();
  info->callback([info_path] { cmd_info(*info_path); });

  auto* synth = app.add_subcommand("synth", "generate a synthetic scene");
  auto so = std::make_shared<SynthOpts>();
  synth->add_option("--preset", so->preset, "two-region or quadrant");
  synth->add_option("--rows", so->rows);
  synth->add_option("--cols", so->cols);
  synth->add_option("--bands", so->bands);
  synth->add_option("--mix-width", so->mix_width, "boundary mixing width in px");
  synth->add_option("--seed", so->seed);
  synth->add_option("--interleave", so->interleave, "bsq, bil or bip");
  synth->add_option("--out", so->out, "output ENVI base path")->required();
  synth->add_option("--truth", so->truth, "optional ground-truth PGM");
  synth->callback([so, &cmdline] { cmd_synth(*so, cmdline); });

  auto* noise = app.add_subcommand("noise", "add per-band Gaussian noise");
  auto no_in = std::make_shared<std::string>();
  auto no_out = std::make_shared<std::string>();
  auto no_il = std::make_shared<std::string>("bip");
  auto no_var = std::make_shared<double>(0.05);
  auto no_seed = std::make_shared<std::uint64_t>(0);
  noise->add_option("--in", *no_in)->required();
  noise->add_option("--max-variance", *no_var, "per-band variance upper bound");
  noise->add_option("--seed", *no_seed);
  noise->add_option("--interleave", *no_il);
  noise->add_option("--out", *no_out)->required();
  noise->callback([=, &cmdline] {
    cmd_noise(*no_in, *no_var, *no_seed, *no_out, *no_il, cmdline);
  });

  auto* down = app.add_subcommand("downsample", "block-mean spatial downsample");
  auto dn_in = std::make_shared<std::string>();
  auto dn_out = std::make_shared<std::string>();
  auto dn_il = std::make_shared<std::string>("bip");
  auto dn_factor = std::make_shared<int>(2);
  down->add_option("--in", *dn_in)->required();
  down->add_option("--factor", *dn_factor)->required();
  down->add_option("--interleave", *dn_il);
  down->add_option("--out", *dn_out)->required();
  down->callback([=, &cmdline] {
    cmd_downsample(*dn_in, *dn_factor, *dn_out, *dn_il, cmdline);
  });

  auto* edges = app.add_subcommand("edges", "windowed spectral-similarity edge map");
  auto eo = std::make_shared<EdgesOpts>();
  edges->add_option("--in", eo->in)->required();
  edges->add_option("--metric", eo->metric, "name[:param], e.g. eu or fract:0.5");
  edges->add_option("--agg", eo->agg, "mean, median, min, max, midpoint, mad, conv");
  edges->add_option("--window", eo->window, "odd window size >= 3");
  edges->add_option("--pad", eo->pad, "replicate or zero-skip");
  edges->add_option("--exclude-bands", eo->exclude, "e.g. 0-5,107-112");
  edges->add_option("--kernel", eo->kernel_path, "conv kernel file (window^2 weights)");
  edges->add_option("--threads", eo->threads, "0 = hardware");
  edges->add_option("--out", eo->out, "8-bit preview PGM")->required();
  edges->add_option("--out-float", eo->out_float, "raw float32 map + .hdr sidecar");
  edges->callback([eo, &cmdline] { cmd_edges(*eo, cmdline); });

  auto* base = app.add_subcommand("baseline", "gradient/Sobel baseline edge map");
  auto ba_in = std::make_shared<std::string>();
  auto ba_kind = std::make_shared<std::string>("sobelxy");
  auto ba_out = std::make_shared<std::string>();
  auto ba_outf = std::make_shared<std::string>();
  auto ba_threads = std::make_shared<int>(0);
  base->add_option("--in", *ba_in)->required();
  base->add_option("--kind", *ba_kind,
                   "gradx, grady, gradxy, gradup, graddown, grad, gradud, "
                   "gradall6, sobelx, sobely, sobelxy");
  base->add_option("--threads", *ba_threads);
  base->add_option("--out", *ba_out)->required();
  base->add_option("--out-float", *ba_outf);
  base->callback([=, &cmdline] {
    cmd_baseline(*ba_in, *ba_kind, *ba_out, *ba_outf, *ba_threads, cmdline);
  });

  auto* pca = app.add_subcommand("pca", "project onto principal band components");
  auto pc_in = std::make_shared<std::string>();
  auto pc_out = std::make_shared<std::string>();
  auto pc_il = std::make_shared<std::string>("bip");
  auto pc_n = std::make_shared<int>(3);
  pca->add_option("--in", *pc_in)->required();
  pca->add_option("--components", *pc_n)->required();
  pca->add_option("--interleave", *pc_il);
  pca->add_option("--out", *pc_out)->required();
  pca->callback([=, &cmdline] { cmd_pca(*pc_in, *pc_n, *pc_out, *pc_il, cmdline); });

  auto* bin = app.add_subcommand("binarize", "Otsu-threshold a float edge map");
  auto bi_in = std::make_shared<std::string>();
  auto bi_out = std::make_shared<std::string>();
  bin->add_option("--in", *bi_in, "float raster from --out-float")->required();
  bin->add_option("--out", *bi_out, "binary PGM")->required();
  bin->callback([=, &cmdline] { cmd_binarize(*bi_in, *bi_out, cmdline); });

  auto* eval = app.add_subcommand("eval", "score edges against ground truth");
  auto ev_edges = std::make_shared<std::string>();
  auto ev_truth = std::make_shared<std::string>();
  auto ev_out = std::make_shared<std::string>();
  auto ev_alpha = std::make_shared<double>(1.0 / 9.0);
  eval->add_option("--edges", *ev_edges)->required();
  eval->add_option("--truth", *ev_truth)->required();
  eval->add_option("--alpha", *ev_alpha, "figure-of-merit distance weight");
  eval->add_option("--out", *ev_out, "optional CSV path");
  eval->callback([=, &cmdline] {
    cmd_eval(*ev_edges, *ev_truth, *ev_alpha, *ev_out, cmdline);
  });

  auto* cluster = app.add_subcommand("cluster", "k-means with optional edge mask");
  auto cl_in = std::make_shared<std::string>();
  auto cl_mask = std::make_shared<std::string>();
  auto cl_out = std::make_shared<std::string>();
  auto cl_cent = std::make_shared<std::string>();
  auto cl_k = std::make_shared<int>(2);
  auto cl_seed = std::make_shared<std::uint64_t>(42);
  auto cl_iter = std::make_shared<int>(100);
  auto cl_threads = std::make_shared<int>(0);
  auto cl_fill = std::make_shared<bool>(false);
  cluster->add_option("--in", *cl_in)->required();
  cluster->add_option("--k", *cl_k)->required();
  cluster->add_option("--mask", *cl_mask, "PGM mask of pixels to exclude");
  cluster->add_option("--seed", *cl_seed);
  cluster->add_option("--max-iter", *cl_iter);
  cluster->add_option("--threads", *cl_threads);
  cluster->add_flag("--fill-masked", *cl_fill,
                    "backfill masked pixels from the nearest unmasked label");
  cluster->add_option("--out", *cl_out, "label PGM")->required();
  cluster->add_option("--centroids", *cl_cent, "optional centroid CSV");
  cluster->callback([=, &cmdline] {
    cmd_cluster(*cl_in, *cl_k, *cl_mask, *cl_seed, *cl_iter, *cl_fill,
                *cl_threads, *cl_out, *cl_cent, cmdline);
  });

  auto* bands = app.add_subcommand("bandsens", "per-band NMI against edge truth");
  auto bs_in = std::make_shared<std::string>();
  auto bs_truth = std::make_shared<std::string>();
  auto bs_out = std::make_shared<std::string>();
  auto bs_bins = std::make_shared<int>(64);
  bands->add_option("--in", *bs_in)->required();
  bands->add_option("--truth", *bs_truth)->required();
  bands->add_option("--bins", *bs_bins);
  bands->add_option("--out", *bs_out, "optional CSV path (default stdout)");
  bands->callback([=, &cmdline] {
    cmd_bandsens(*bs_in, *bs_truth, *bs_bins, *bs_out, cmdline);
  });

  auto* repro = app.add_subcommand("repro", "run a named benchmark pipeline");
  auto rp_name = std::make_shared<std::string>();
  auto rp_outdir = std::make_shared<std::string>();
  auto rp_seed = std::make_shared<std::uint64_t>(42);
  auto rp_threads = std::make_shared<int>(0);
  std::string pipelines;
  for (const auto& n : repro_names()) pipelines += (pipelines.empty() ? "" : ", ") + n;
  repro->add_option("pipeline", *rp_name, pipelines)->required();
  repro->add_option("--outdir", *rp_outdir)->required();
  repro->add_option("--seed", *rp_seed);
  repro->add_option("--threads", *rp_threads);
  repro->callback([=] {
    if (!run_repro(*rp_name, *rp_outdir, *rp_seed, *rp_threads))
      throw DataError("repro " + *rp_name + ": structural check failed");
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run 'lss --help' for usage\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lss
