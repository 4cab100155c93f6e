#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rootdeform/matrix.hpp"
#include "rootdeform/weyl.hpp"

namespace rootdeform {

/// sigma = sigma_minus * sigma_plus with each factor a product of mutually
/// commuting reflections of one color, hence an involution.
struct FactorizedElement {
  std::vector<int> v_minus;  // sorted
  std::vector<int> v_plus;   // sorted
  WeylElement sigma_minus;
  WeylElement sigma_plus;
  WeylElement sigma;
  int order = 1;

  int rank() const { return sigma.rank(); }
};

/// Throws Errc::wrong_color if a vertex of v_minus is plus-colored or vice
/// versa; duplicates are rejected as invalid arguments.
FactorizedElement factorize(const RootSystem& rs, std::span<const int> v_minus, std::span<const int> v_plus);

/// Reads a word whose letters are distinct vertices as a bicolored element.
/// Returns nullopt when the word's matrix differs from the bicolored product
/// over the same vertex sets.
std::optional<FactorizedElement> factorize_word(const RootSystem& rs, std::span<const int> word);

using DeformMatrix = RingMatrix;

enum class AnsatzVariant {
  /// c I + (1 - c) s^(h/2) + i kappa (s^(h/4) - s^(-h/4)); reproduces the E8 matrix.
  consistent,
  /// c I + (1 - c) s^(h/4) + i kappa (s^(h/2) - s^(-h/2)), the exponents swapped.
  literal,
};

/// Throws Errc::ansatz_inapplicable unless 4 divides the order.
DeformMatrix build_theta(const FactorizedElement& fe, AnsatzVariant variant = AnsatzVariant::consistent);

struct ConstraintReport {
  bool intertwine_minus = false;   // theta* s- == s- theta
  bool intertwine_plus = false;    // theta* s+ == s+ theta
  bool commutes_with_sigma = false;
  bool antiunitary = false;        // theta* theta == I
  RingScalar det_value;
  bool det_ok = false;             // det is the constant +1 or -1
  bool limit_ok = false;           // theta at c = 1, kappa = 0 is I

  bool all_passed() const {
    return intertwine_minus && intertwine_plus && commutes_with_sigma && antiunitary && det_ok && limit_ok;
  }
};

ConstraintReport verify_constraints(const DeformMatrix& theta, const FactorizedElement& fe);

/// Row i is the deformed simple root theta alpha_i in the simple-root basis.
std::vector<RingRow> deform_simple_roots(const DeformMatrix& theta, const RootSystem& rs);

/// No kappa-component anywhere: the deformation creates no complex roots.
bool is_trivial(const DeformMatrix& theta);

}  // namespace rootdeform
