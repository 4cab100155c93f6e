#include "rootdeform/reduced.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace rootdeform {

bool ReducedRootSpace::contains(const Root& r) const {
  return std::binary_search(root_set.begin(), root_set.end(), r);
}

std::optional<std::pair<int, int>> ReducedRootSpace::locate(const Root& r) const {
  for (int n = 0; n < order; ++n)
    for (int i = 0; i < rank(); ++i)
      if (orbits[i][n] == r) return std::pair{n, i + 1};
  return std::nullopt;
}

std::vector<Root> reduced_orbit(const RootSystem& rs, const FactorizedElement& fe, int vertex, bool use_gamma) {
  rs.check_vertex(vertex);
  Root seed = Root::simple(rs.rank(), vertex);
  if (use_gamma && rs.sign(vertex) < 0) seed = -seed;
  std::vector<Root> orbit;
  orbit.reserve(static_cast<std::size_t>(fe.order));
  for (int n = 0; n < fe.order; ++n) {
    orbit.push_back(seed);
    seed = fe.sigma.apply(seed);
  }
  return orbit;
}

ReducedRootSpace reduced_root_space(const RootSystem& rs, const FactorizedElement& fe, bool use_gamma) {
  ReducedRootSpace space;
  space.order = fe.order;
  space.use_gamma = use_gamma;
  std::set<Root> unique;
  for (int v = 1; v <= rs.rank(); ++v) {
    space.orbits.push_back(reduced_orbit(rs, fe, v, use_gamma));
    unique.insert(space.orbits.back().begin(), space.orbits.back().end());
    space.multiset_size += space.orbits.back().size();
  }
  space.root_set.assign(unique.begin(), unique.end());
  return space;
}

namespace {

FactorInvariance factor_invariance(const WeylElement& factor, const ReducedRootSpace& space) {
  FactorInvariance out;
  for (const Root& r : space.root_set) {
    Root image = factor.apply(r);
    if (!space.contains(image)) out.offending.push_back(r);
  }
  out.invariant = out.offending.empty();
  for (int v = 1; v <= space.rank(); ++v) {
    SimpleRootImage s;
    s.vertex = v;
    s.image = factor.apply(Root::simple(space.rank(), v));
    s.witness = space.locate(s.image);
    out.simple_images.push_back(std::move(s));
  }
  return out;
}

}  // namespace

InvarianceReport check_invariance(const FactorizedElement& fe, const ReducedRootSpace& space) {
  return {factor_invariance(fe.sigma_minus, space), factor_invariance(fe.sigma_plus, space)};
}

DeformedRootSpace deformed_space(const DeformMatrix& theta, const ReducedRootSpace& space) {
  DeformedRootSpace out;
  out.roots.reserve(space.root_set.size());
  for (const Root& r : space.root_set) out.roots.emplace_back(to_ring(r.coords) * theta);
  return out;
}

Eigen::MatrixXcd DeformedRootSpace::evaluate(double epsilon) const {
  const Eigen::Index cols = roots.empty() ? 0 : roots.front().cols();
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(roots.size()), cols);
  for (std::size_t k = 0; k < roots.size(); ++k)
    out.row(static_cast<Eigen::Index>(k)) = rootdeform::evaluate(roots[k], epsilon);
  return out;
}

std::optional<std::vector<std::size_t>> antilinear_permutation(const Eigen::MatrixXcd& roots, const IntMatrix& factor,
                                                               double tol) {
  const Eigen::MatrixXcd images = roots.conjugate() * factor.cast<std::complex<double>>();
  std::vector<std::size_t> perm(static_cast<std::size_t>(roots.rows()));
  std::vector<bool> taken(perm.size(), false);
  for (Eigen::Index k = 0; k < images.rows(); ++k) {
    Eigen::Index best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index m = 0; m < roots.rows(); ++m) {
      const double d = (images.row(k) - roots.row(m)).norm();
      if (d < best_dist) {
        best_dist = d;
        best = m;
      }
    }
    if (best < 0 || best_dist > tol || taken[static_cast<std::size_t>(best)]) return std::nullopt;
    taken[static_cast<std::size_t>(best)] = true;
    perm[static_cast<std::size_t>(k)] = static_cast<std::size_t>(best);
  }
  return perm;
}

namespace {

bool involutive(const std::vector<std::size_t>& perm) {
  for (std::size_t k = 0; k < perm.size(); ++k)
    if (perm[perm[k]] != k) return false;
  return true;
}

}  // namespace

AntilinearCheck check_antilinear_action(const DeformedRootSpace& deformed, const FactorizedElement& fe,
                                        double epsilon, double tol) {
  const Eigen::MatrixXcd numeric = deformed.evaluate(epsilon);
  AntilinearCheck out;
  if (auto p = antilinear_permutation(numeric, fe.sigma_minus.matrix, tol)) {
    out.minus_permutes = true;
    out.minus_involutive = involutive(*p);
  }
  if (auto p = antilinear_permutation(numeric, fe.sigma_plus.matrix, tol)) {
    out.plus_permutes = true;
    out.plus_involutive = involutive(*p);
  }
  return out;
}

}  // namespace rootdeform
