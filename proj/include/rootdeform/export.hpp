#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rootdeform/io.hpp"

namespace rootdeform {

enum class Model { calogero, toda };

/// Calogero potential data. The pairing (root . q) is the bilinear form of
/// the root system (its Gram matrix) with q in simple-root coordinates; no
/// complex conjugation is applied.
struct CalogeroParams {
  double omega = 1.0;
  double coupling = 1.0;
  std::optional<Eigen::VectorXd> sample_point;
};

/// Numeric root data of a deformed space for downstream model studies.
struct ModelExport {
  Model model = Model::calogero;
  std::string system;
  Candidate candidate;
  int order = 1;
  double epsilon = 0.0;
  /// Rows of the deformed reduced root space (calogero only).
  Eigen::MatrixXcd roots;
  /// Deformed simple roots, one per row.
  Eigen::MatrixXcd simple_roots;
  std::optional<std::complex<double>> potential;
  CalogeroParams calogero;
  /// Toda: marks n_0 = 1, n_1..n_l of the highest root and the deformed
  /// affine root -sum n_i theta(alpha_i).
  std::vector<long long> marks;
  Eigen::RowVectorXcd affine_root;
};

/// V(q) = omega^2/4 sum (r.q)^2 + g sum 1/(r.q)^2 over the rows of roots.
/// Throws Errc::singular_sample when some |r.q| vanishes.
std::complex<double> calogero_potential(const Eigen::MatrixXcd& roots, const Eigen::MatrixXd& gram,
                                        const Eigen::VectorXd& q, double omega, double coupling);

ModelExport export_model(const RootSystem& rs, const FactorizedElement& fe, const DeformMatrix& theta,
                         double epsilon, Model model, const CalogeroParams& params = {});

Json to_json(const ModelExport& e);

}  // namespace rootdeform
