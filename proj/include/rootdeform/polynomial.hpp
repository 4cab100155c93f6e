#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "rootdeform/gaussian.hpp"

namespace rootdeform {

/// Univariate polynomial in c with Gaussian rational coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty coefficient list and equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(GaussianRational constant);
  explicit Polynomial(std::vector<GaussianRational> coefficients);

  /// The indeterminate c.
  static Polynomial variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  /// Coefficient of c^k; zero beyond the degree.
  GaussianRational coefficient(int k) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  Polynomial conj() const;
  Polynomial scaled(const GaussianRational& factor) const;
  /// Multiplication by c^k.
  Polynomial shifted(int k) const;
  Polynomial monic() const;

  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Renders with the given symbol for the indeterminate, e.g. "2c^2 - c".
  std::string to_string(const std::string& symbol = "c") const;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace rootdeform
