#include "rootdeform/ring.hpp"

#include <cmath>
#include <stdexcept>

namespace rootdeform {

RingScalar RingScalar::c() { return RingScalar(Polynomial::variable()); }

RingScalar RingScalar::kappa() { return RingScalar(Polynomial(), Polynomial(GaussianRational(1))); }

RingScalar RingScalar::lambda() { return RingScalar(1) - c(); }

RingScalar RingScalar::i() { return RingScalar(GaussianRational::i()); }

const Polynomial& RingScalar::kappa_squared() {
  static const Polynomial k2(std::vector<GaussianRational>{0, -1, 1});
  return k2;
}

RingScalar operator*(const RingScalar& a, const RingScalar& b) {
  Polynomial p = a.p_ * b.p_;
  if (!a.q_.is_zero() && !b.q_.is_zero()) p += a.q_ * b.q_ * RingScalar::kappa_squared();
  Polynomial q = a.p_ * b.q_ + a.q_ * b.p_;
  return {std::move(p), std::move(q)};
}

std::complex<double> RingScalar::evaluate(double epsilon) const {
  const double c0 = std::cosh(epsilon);
  // cosh >= 1 keeps the radicand non-negative; clamp rounding noise at 0
  const double kappa0 = std::sqrt(std::max(0.0, c0 * c0 - c0));
  return p_.evaluate(std::complex<double>(c0)) + kappa0 * q_.evaluate(std::complex<double>(c0));
}

std::string RingScalar::to_string(bool ascii) const {
  const std::string k = ascii ? "kappa" : "κ";
  if (q_.is_zero()) return p_.to_string();
  std::string kappa_part;
  if (q_.coefficients().size() == 1) {
    // single constant coefficient: render as "2iκ", "-κ", ...
    std::string coef = q_.to_string();
    if (coef == "1")
      coef.clear();
    else if (coef == "-1")
      coef = "-";
    kappa_part = coef + k;
  } else {
    kappa_part = k + "(" + q_.to_string() + ")";
  }
  if (p_.is_zero()) return kappa_part;
  if (kappa_part.front() == '-') return p_.to_string() + " - " + kappa_part.substr(1);
  return p_.to_string() + " + " + kappa_part;
}

namespace {

// Exact division of both kappa-components by a polynomial; throws if inexact.
RingScalar divide_exact(const RingScalar& a, const Polynomial& d) {
  auto [pq, pr] = divmod(a.p(), d);
  auto [qq, qr] = divmod(a.q(), d);
  if (!pr.is_zero() || !qr.is_zero()) throw std::domain_error("inexact division in ring");
  return {std::move(pq), std::move(qq)};
}

}  // namespace

RingScalar exact_divide(const RingScalar& a, const RingScalar& b) {
  if (b.is_zero()) throw std::domain_error("ring division by zero");
  return divide_exact(a * b.kappa_conjugate(), b.norm());
}

RingFraction::RingFraction(RingScalar num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  Polynomial g = gcd(gcd(num.p(), num.q()), den);
  if (g.degree() > 0) {
    num = divide_exact(num, g);
    den = divmod(den, g).first;
  }
  const GaussianRational lead = den.leading();
  num_ = num.scaled(Polynomial(GaussianRational(1) / lead));
  den_ = den.monic();
}

RingFraction RingFraction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in fraction field");
  return {num_.kappa_conjugate().scaled(den_), num_.norm()};
}

RingFraction operator+(const RingFraction& a, const RingFraction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_.scaled(b.den_) + b.num_.scaled(a.den_), a.den_ * b.den_};
}

RingFraction operator*(const RingFraction& a, const RingFraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

}  // namespace rootdeform
