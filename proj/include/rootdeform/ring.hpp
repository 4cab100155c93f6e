#pragma once

#include <complex>
#include <string>

#include <Eigen/Core>

#include "rootdeform/polynomial.hpp"

namespace rootdeform {

/// Element p(c) + kappa*q(c) of Q(i)[c, kappa]/(kappa^2 - c^2 + c).
///
/// The quotient relation keeps the kappa-degree at most one, so the pair
/// (p, q) is a complete canonical form. c and kappa are real symbols; only the
/// Gaussian coefficients are touched by conj().
class RingScalar {
 public:
  RingScalar() = default;
  RingScalar(long long n) : p_(GaussianRational(n)) {}
  RingScalar(GaussianRational a) : p_(std::move(a)) {}
  RingScalar(Polynomial p, Polynomial q = {}) : p_(std::move(p)), q_(std::move(q)) {}

  /// c, i.e. c0 = cosh(epsilon) after evaluation.
  static RingScalar c();
  /// kappa = sqrt(c^2 - c).
  static RingScalar kappa();
  /// lambda = 1 - c.
  static RingScalar lambda();
  static RingScalar i();
  /// kappa^2 rewritten in c: c^2 - c.
  static const Polynomial& kappa_squared();

  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  /// Degree used for pivot selection: kappa counts as degree one in c.
  int degree() const { return std::max(p_.degree(), q_.is_zero() ? -1 : q_.degree() + 1); }

  /// Complex conjugation of the Gaussian coefficients.
  RingScalar conj() const { return {p_.conj(), q_.conj()}; }
  /// The Galois twin p - kappa*q.
  RingScalar kappa_conjugate() const { return {p_, -q_}; }
  /// (p + kappa q)(p - kappa q) = p^2 - q^2 (c^2 - c), an element of Q(i)[c].
  Polynomial norm() const { return p_ * p_ - q_ * q_ * kappa_squared(); }

  RingScalar scaled(const Polynomial& f) const { return {p_ * f, q_ * f}; }

  /// c = cosh(epsilon), kappa = +sqrt(cosh^2 - cosh), i = imaginary unit.
  std::complex<double> evaluate(double epsilon) const;
  /// Exact value at the undeformed point c = 1, kappa = 0.
  GaussianRational at_undeformed() const { return p_.evaluate(GaussianRational(1)); }

  RingScalar operator-() const { return {-p_, -q_}; }
  RingScalar& operator+=(const RingScalar& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  RingScalar& operator-=(const RingScalar& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  RingScalar& operator*=(const RingScalar& o) { return *this = *this * o; }

  friend RingScalar operator+(RingScalar a, const RingScalar& b) { return a += b; }
  friend RingScalar operator-(RingScalar a, const RingScalar& b) { return a -= b; }
  friend RingScalar operator*(const RingScalar& a, const RingScalar& b);

  friend bool operator==(const RingScalar&, const RingScalar&) = default;

  /// e.g. "2c - 1 - 2iκ"; set ascii for "kappa".
  std::string to_string(bool ascii = false) const;

 private:
  Polynomial p_;
  Polynomial q_;
};

inline RingScalar conj(const RingScalar& a) { return a.conj(); }

/// a / b when b divides a in the ring; throws std::domain_error otherwise.
RingScalar exact_divide(const RingScalar& a, const RingScalar& b);

/// Element num/den of the fraction field of the ring. The denominator is kept
/// in Q(i)[c] (rationalised through the kappa-conjugate) and monic, with common
/// polynomial factors cancelled.
class RingFraction {
 public:
  RingFraction() : den_(GaussianRational(1)) {}
  RingFraction(long long n) : num_(n), den_(GaussianRational(1)) {}
  RingFraction(RingScalar num) : num_(std::move(num)), den_(GaussianRational(1)) {}
  RingFraction(RingScalar num, Polynomial den);

  const RingScalar& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_.degree() == 0; }
  int degree() const { return num_.degree() + den_.degree(); }

  /// Throws std::domain_error for zero.
  RingFraction inverse() const;

  RingFraction operator-() const { return {-num_, den_}; }
  friend RingFraction operator+(const RingFraction& a, const RingFraction& b);
  friend RingFraction operator-(const RingFraction& a, const RingFraction& b) { return a + (-b); }
  friend RingFraction operator*(const RingFraction& a, const RingFraction& b);
  friend RingFraction operator/(const RingFraction& a, const RingFraction& b) { return a * b.inverse(); }
  RingFraction& operator+=(const RingFraction& o) { return *this = *this + o; }
  RingFraction& operator-=(const RingFraction& o) { return *this = *this - o; }
  RingFraction& operator*=(const RingFraction& o) { return *this = *this * o; }
  RingFraction& operator/=(const RingFraction& o) { return *this = *this / o; }

  friend bool operator==(const RingFraction&, const RingFraction&) = default;

 private:
  RingScalar num_;
  Polynomial den_;
};

}  // namespace rootdeform

namespace Eigen {

template <>
struct NumTraits<rootdeform::RingScalar> : GenericNumTraits<rootdeform::RingScalar> {
  using Real = rootdeform::RingScalar;
  using NonInteger = rootdeform::RingScalar;
  using Nested = rootdeform::RingScalar;
  using Literal = rootdeform::RingScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 60
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<rootdeform::RingFraction> : GenericNumTraits<rootdeform::RingFraction> {
  using Real = rootdeform::RingFraction;
  using NonInteger = rootdeform::RingFraction;
  using Nested = rootdeform::RingFraction;
  using Literal = rootdeform::RingFraction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 60,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
