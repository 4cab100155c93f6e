#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "rootdeform/deform.hpp"

namespace rootdeform {

/// Orbits of the seeds gamma_i (or alpha_i) under sigma, truncated at the
/// element order, and their deduplicated union.
struct ReducedRootSpace {
  int order = 1;
  bool use_gamma = false;
  /// orbits[i - 1][n] = sigma^n seed_i for n = 0..order-1.
  std::vector<std::vector<Root>> orbits;
  /// Sorted, duplicate-free.
  std::vector<Root> root_set;
  std::size_t multiset_size = 0;

  int rank() const { return static_cast<int>(orbits.size()); }
  bool contains(const Root& r) const;
  /// First (n, vertex) with sigma^n seed_vertex == r, scanning n then vertex.
  std::optional<std::pair<int, int>> locate(const Root& r) const;
};

/// Exactly fe.order entries; seeds are c_i alpha_i when use_gamma is set.
std::vector<Root> reduced_orbit(const RootSystem& rs, const FactorizedElement& fe, int vertex, bool use_gamma = false);

ReducedRootSpace reduced_root_space(const RootSystem& rs, const FactorizedElement& fe, bool use_gamma = false);

struct SimpleRootImage {
  int vertex = 0;
  Root image;
  /// (n, j) with image == sigma^n seed_j, if the image lies in the space.
  std::optional<std::pair<int, int>> witness;
};

struct FactorInvariance {
  bool invariant = false;
  std::vector<SimpleRootImage> simple_images;
  /// Elements of the space mapped outside it.
  std::vector<Root> offending;
};

struct InvarianceReport {
  FactorInvariance minus;
  FactorInvariance plus;
  bool invariant() const { return minus.invariant && plus.invariant; }
};

InvarianceReport check_invariance(const FactorizedElement& fe, const ReducedRootSpace& space);

/// theta-images of the roots of a reduced space, aligned with space.root_set.
struct DeformedRootSpace {
  std::vector<RingRow> roots;

  /// One row per root.
  Eigen::MatrixXcd evaluate(double epsilon) const;
};

DeformedRootSpace deformed_space(const DeformMatrix& theta, const ReducedRootSpace& space);

/// Nearest-neighbour match of x -> conj(x) * factor over the rows of roots.
/// Returns the induced permutation, or nullopt if some image has no partner
/// within tol or two images share a partner.
std::optional<std::vector<std::size_t>> antilinear_permutation(const Eigen::MatrixXcd& roots, const IntMatrix& factor,
                                                               double tol = 1e-6);

struct AntilinearCheck {
  bool minus_permutes = false;
  bool plus_permutes = false;
  bool minus_involutive = false;
  bool plus_involutive = false;
  bool ok() const { return minus_permutes && plus_permutes && minus_involutive && plus_involutive; }
};

/// Numeric check that both antilinear factors permute the deformed space at
/// epsilon and square to the identity permutation.
AntilinearCheck check_antilinear_action(const DeformedRootSpace& deformed, const FactorizedElement& fe,
                                        double epsilon, double tol = 1e-6);

}  // namespace rootdeform
