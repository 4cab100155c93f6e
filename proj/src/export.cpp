#include "rootdeform/export.hpp"

#include <cmath>

namespace rootdeform {

std::complex<double> calogero_potential(const Eigen::MatrixXcd& roots, const Eigen::MatrixXd& gram,
                                        const Eigen::VectorXd& q, double omega, double coupling) {
  if (q.size() != gram.rows()) throw Error(Errc::invalid_argument, "sample point has wrong dimension");
  const Eigen::VectorXcd pairing = roots * (gram * q).cast<std::complex<double>>();
  std::complex<double> harmonic = 0.0, inverse = 0.0;
  for (Eigen::Index k = 0; k < pairing.size(); ++k) {
    const std::complex<double> x = pairing(k);
    if (std::abs(x) < 1e-12) throw Error(Errc::singular_sample, "singular sample point: a root is orthogonal to q");
    harmonic += x * x;
    inverse += 1.0 / (x * x);
  }
  return omega * omega / 4.0 * harmonic + coupling * inverse;
}

ModelExport export_model(const RootSystem& rs, const FactorizedElement& fe, const DeformMatrix& theta,
                         double epsilon, Model model, const CalogeroParams& params) {
  if (!std::isfinite(epsilon)) throw Error(Errc::invalid_argument, "epsilon must be finite");
  ModelExport out;
  out.model = model;
  out.system = rs.name();
  out.candidate = {fe.v_minus, fe.v_plus};
  out.order = fe.order;
  out.epsilon = epsilon;
  out.simple_roots = evaluate(theta, epsilon);
  if (model == Model::calogero) {
    const ReducedRootSpace space = reduced_root_space(rs, fe);
    out.roots = deformed_space(theta, space).evaluate(epsilon);
    out.calogero = params;
    if (params.sample_point)
      out.potential = calogero_potential(out.roots, rs.gram(), *params.sample_point, params.omega, params.coupling);
  } else {
    const Root top = highest_root(rs);
    out.marks.push_back(1);
    for (auto v : top.coords) out.marks.push_back(static_cast<long long>(v));
    out.affine_root = -(top.coords.cast<std::complex<double>>() * out.simple_roots);
  }
  return out;
}

Json to_json(const ModelExport& e) {
  Json meta{{"model", e.model == Model::calogero ? "calogero" : "toda"},
            {"system", e.system},
            {"v_minus", e.candidate.v_minus},
            {"v_plus", e.candidate.v_plus},
            {"order", e.order},
            {"epsilon", e.epsilon},
            {"basis", "simple roots"}};
  Json out{{"metadata", meta}, {"simple_roots", numeric_json(e.simple_roots)}};
  if (e.model == Model::calogero) {
    out["roots"] = numeric_json(e.roots);
    out["metadata"]["root_count"] = e.roots.rows();
    out["metadata"]["omega"] = e.calogero.omega;
    out["metadata"]["coupling"] = e.calogero.coupling;
    out["metadata"]["pairing"] = "root system bilinear form, no conjugation";
    if (e.calogero.sample_point) {
      out["metadata"]["sample_point"] = std::vector<double>(e.calogero.sample_point->begin(), e.calogero.sample_point->end());
    }
    if (e.potential) out["potential"] = to_json(*e.potential);
  } else {
    out["marks"] = e.marks;
    out["affine_root"] = numeric_json(e.affine_root);
    out["metadata"]["note"] = "marks n_0..n_l are the highest-root coefficients with n_0 = 1";
  }
  return out;
}

}  // namespace rootdeform
