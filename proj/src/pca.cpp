#include "lss/pca.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace lss {

PcaModel pca_fit(const HsiCube& cube, int components) {
  const int bands = cube.bands();
  const long pixels = static_cast<long>(cube.rows()) * cube.cols();
  if (components < 1 || components > bands)
    throw DataError("pca_fit: components must lie in [1, " +
                    std::to_string(bands) + "]");
  if (pixels < 2) throw DataError("pca_fit: need at least two pixels");

  using RowMajorF =
      Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorF> raw(cube.data(), pixels, bands);
  Eigen::MatrixXd x = raw.cast<double>();
  Eigen::RowVectorXd mu = x.colwise().mean();
  x.rowwise() -= mu;
  Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(pixels - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success)
    throw DataError("pca_fit: eigendecomposition failed");

  PcaModel model;
  model.bands = bands;
  model.count = components;
  model.mean.assign(mu.data(), mu.data() + bands);
  model.components.resize(static_cast<std::size_t>(components) * bands);
  model.explained_variance.resize(components);

  // Solver returns ascending eigenvalues; take the top `components` and sign
  // each vector so its largest-magnitude element is positive.
  for (int i = 0; i < components; ++i) {
    int src = bands - 1 - i;
    Eigen::VectorXd v = solver.eigenvectors().col(src);
    int arg = 0;
    for (int b = 1; b < bands; ++b)
      if (std::fabs(v[b]) > std::fabs(v[arg])) arg = b;
    if (v[arg] < 0.0) v = -v;
    for (int b = 0; b < bands; ++b)
      model.components[static_cast<std::size_t>(i) * bands + b] = v[b];
    model.explained_variance[i] = std::max(0.0, solver.eigenvalues()[src]);
  }
  return model;
}

HsiCube pca_project(const HsiCube& cube, const PcaModel& model) {
  if (cube.bands() != model.bands)
    throw DataError("pca_project: cube has " + std::to_string(cube.bands()) +
                    " bands but model expects " + std::to_string(model.bands));
  if (model.count < 1 || model.components.size() !=
                             static_cast<std::size_t>(model.count) * model.bands)
    throw DataError("pca_project: malformed model");

  HsiCube out(cube.rows(), cube.cols(), model.count);
  std::vector<double> centered(model.bands);
  for (int r = 0; r < cube.rows(); ++r)
    for (int c = 0; c < cube.cols(); ++c) {
      auto s = cube.spectrum(r, c);
      for (int b = 0; b < model.bands; ++b)
        centered[b] = static_cast<double>(s[b]) - model.mean[b];
      for (int i = 0; i < model.count; ++i) {
        const double* comp = model.component(i);
        double acc = 0.0;
        for (int b = 0; b < model.bands; ++b) acc += comp[b] * centered[b];
        out.at(r, c, i) = static_cast<float>(acc);
      }
    }
  return out;
}

}  // namespace lss
