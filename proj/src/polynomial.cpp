#include "rootdeform/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace rootdeform {

namespace {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (is_real()) return rational_string(re_);
  std::string im_part;
  if (im_ == 1)
    im_part = "i";
  else if (im_ == -1)
    im_part = "-i";
  else
    im_part = rational_string(im_) + "i";
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) < 0) {
    im_part.erase(0, 1);
    return rational_string(re_) + " - " + im_part;
  }
  return rational_string(re_) + " + " + im_part;
}

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<GaussianRational>{0, 1});
}

GaussianRational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a = a.conj();
  return out;
}

Polynomial Polynomial::scaled(const GaussianRational& factor) const {
  if (factor.is_zero()) return {};
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a *= factor;
  return out;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial out;
  out.coeffs_.assign(static_cast<std::size_t>(k), GaussianRational{});
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(GaussianRational(1) / leading());
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& symbol) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const GaussianRational& a = coeffs_[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    std::string monomial = k == 0 ? "" : (k == 1 ? symbol : symbol + "^" + std::to_string(k));
    std::string coef;
    bool negative = false;
    if (a.is_real() || sgn(a.real()) == 0) {
      // pure real or pure imaginary: pull the sign out front
      const mpq_class& v = a.is_real() ? a.real() : a.imag();
      negative = sgn(v) < 0;
      mpq_class mag = abs(v);
      std::string unit = a.is_real() ? "" : "i";
      if (mag == 1 && !monomial.empty())
        coef = unit;
      else if (mag == 1)
        coef = unit.empty() ? "1" : unit;
      else
        coef = mag.get_str() + unit;
    } else {
      coef = "(" + a.to_string() + ")";
    }
    std::string term = coef + monomial;
    if (first)
      os << (negative ? "-" : "") << term;
    else
      os << (negative ? " - " : " + ") << term;
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = a;
  std::vector<GaussianRational> quot(
      static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)));
  const GaussianRational inv_lead = GaussianRational(1) / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    GaussianRational factor = rem.leading() * inv_lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    rem -= b.scaled(factor).shifted(shift);
  }
  return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace rootdeform
