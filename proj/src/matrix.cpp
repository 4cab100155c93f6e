#include "rootdeform/matrix.hpp"

#include <utility>

namespace rootdeform {

namespace {

// Row index of the preferred pivot in column k at or below row k, or -1.
Eigen::Index choose_pivot(const FractionMatrix& a, Eigen::Index k) {
  Eigen::Index best = -1;
  for (Eigen::Index r = k; r < a.rows(); ++r) {
    if (a(r, k).is_zero()) continue;
    if (best < 0 || a(r, k).degree() < a(best, k).degree()) best = r;
  }
  return best;
}

FractionMatrix to_fractions(const RingMatrix& m) {
  return m.unaryExpr([](const RingScalar& a) { return RingFraction(a); });
}

}  // namespace

RingScalar determinant(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  FractionMatrix a = to_fractions(m);
  const Eigen::Index n = a.rows();
  RingFraction det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index piv = choose_pivot(a, k);
    if (piv < 0) return RingScalar();
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      det = -det;
    }
    det *= a(k, k);
    const RingFraction inv = a(k, k).inverse();
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const RingFraction f = a(r, k) * inv;
      for (Eigen::Index c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  if (!det.is_integral()) throw std::logic_error("determinant left the ring");
  return det.numerator();
}

FractionMatrix inverse(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  FractionMatrix a = to_fractions(m);
  FractionMatrix inv = FractionMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index piv = choose_pivot(a, k);
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      inv.row(k).swap(inv.row(piv));
    }
    const RingFraction p = a(k, k).inverse();
    for (Eigen::Index c = 0; c < n; ++c) {
      a(k, c) *= p;
      inv(k, c) *= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      const RingFraction f = a(r, k);
      for (Eigen::Index c = 0; c < n; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

bool to_integral(const FractionMatrix& f, RingMatrix& out) {
  RingMatrix result(f.rows(), f.cols());
  for (Eigen::Index i = 0; i < f.rows(); ++i)
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      if (!f(i, j).is_integral()) return false;
      result(i, j) = f(i, j).numerator();
    }
  out = std::move(result);
  return true;
}

}  // namespace rootdeform
