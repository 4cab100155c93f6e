#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "rootdeform/ring.hpp"

namespace rootdeform {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntRow = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;
using RingMatrix = Eigen::Matrix<RingScalar, Eigen::Dynamic, Eigen::Dynamic>;
using RingRow = Eigen::Matrix<RingScalar, 1, Eigen::Dynamic>;
using FractionMatrix = Eigen::Matrix<RingFraction, Eigen::Dynamic, Eigen::Dynamic>;

/// m^n for n >= 0 by repeated squaring.
template <typename Derived>
typename Derived::PlainObject power(const Eigen::MatrixBase<Derived>& m, int n) {
  using Plain = typename Derived::PlainObject;
  if (m.rows() != m.cols()) throw std::invalid_argument("power of non-square matrix");
  if (n < 0) throw std::invalid_argument("negative matrix power");
  Plain result = Plain::Identity(m.rows(), m.cols());
  Plain base = m;
  while (n > 0) {
    if (n & 1) result = (result * base).eval();
    n >>= 1;
    if (n > 0) base = (base * base).eval();
  }
  return result;
}

/// Exact entrywise equality; shapes must agree.
template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  return m.rows() == m.cols() && exactly_equal(m, Plain::Identity(m.rows(), m.cols()));
}

template <typename A, typename B>
bool commute(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return exactly_equal((a * b).eval(), (b * a).eval());
}

inline RingMatrix to_ring(const IntMatrix& m) {
  return m.unaryExpr([](std::int64_t v) { return RingScalar(static_cast<long long>(v)); });
}

inline RingRow to_ring(const IntRow& r) {
  return r.unaryExpr([](std::int64_t v) { return RingScalar(static_cast<long long>(v)); });
}

/// Entrywise complex conjugation (theta -> theta*).
template <typename Derived>
RingMatrix conj(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const RingScalar& a) { return a.conj(); });
}

/// Numeric view at real epsilon.
template <typename Derived>
Eigen::MatrixXcd evaluate(const Eigen::MatrixBase<Derived>& m, double epsilon) {
  return m.unaryExpr([epsilon](const RingScalar& a) { return a.evaluate(epsilon); });
}

/// Determinant by elimination over the fraction field of the ring. Pivots are
/// the lowest-degree nonzero entry of the column (ties: lowest row), so the
/// elimination path is deterministic.
RingScalar determinant(const RingMatrix& m);

/// Inverse over the fraction field; throws std::domain_error if singular.
FractionMatrix inverse(const RingMatrix& m);

/// Returns true and fills out when every entry of f lies in the ring.
bool to_integral(const FractionMatrix& f, RingMatrix& out);

}  // namespace rootdeform
