#include "rootdeform/deform.hpp"

#include <algorithm>
#include <set>

namespace rootdeform {

namespace {

std::vector<int> checked_subset(const RootSystem& rs, std::span<const int> vs, Color expected) {
  std::vector<int> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(Errc::invalid_argument, "repeated vertex in subset");
  for (int v : out)
    if (rs.color(v) != expected)
      throw Error(Errc::wrong_color, "vertex " + std::to_string(v) + " is not " +
                                         (expected == Color::minus ? "minus" : "plus") + "-colored");
  return out;
}

// Product over a one-colored subset, checked independent of factor order.
WeylElement color_factor(const RootSystem& rs, const std::vector<int>& subset) {
  WeylElement forward = compose(rs, subset);
  const std::vector<int> reversed(subset.rbegin(), subset.rend());
  if (!exactly_equal(forward.matrix, compose(rs, reversed).matrix) || !is_identity(forward.matrix * forward.matrix))
    throw std::logic_error("same-color reflections failed to commute");
  return forward;
}

RingMatrix shifted_identity(const RingScalar& s, Eigen::Index n) {
  RingMatrix m = RingMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = s;
  return m;
}

}  // namespace

FactorizedElement factorize(const RootSystem& rs, std::span<const int> v_minus, std::span<const int> v_plus) {
  FactorizedElement fe;
  fe.v_minus = checked_subset(rs, v_minus, Color::minus);
  fe.v_plus = checked_subset(rs, v_plus, Color::plus);
  fe.sigma_minus = color_factor(rs, fe.v_minus);
  fe.sigma_plus = color_factor(rs, fe.v_plus);
  fe.sigma = fe.sigma_minus * fe.sigma_plus;
  fe.order = element_order(fe.sigma);
  return fe;
}

std::optional<FactorizedElement> factorize_word(const RootSystem& rs, std::span<const int> word) {
  std::vector<int> minus, plus;
  std::set<int> seen;
  for (int v : word) {
    if (!seen.insert(v).second) return std::nullopt;
    (rs.color(v) == Color::minus ? minus : plus).push_back(v);
  }
  FactorizedElement fe = factorize(rs, minus, plus);
  if (!exactly_equal(fe.sigma.matrix, compose(rs, word).matrix)) return std::nullopt;
  fe.sigma.word.assign(word.begin(), word.end());
  return fe;
}

DeformMatrix build_theta(const FactorizedElement& fe, AnsatzVariant variant) {
  const int h = fe.order;
  if (h % 4 != 0)
    throw Error(Errc::ansatz_inapplicable,
                "ansatz inapplicable: element order " + std::to_string(h) + " is not divisible by 4");
  const Eigen::Index n = fe.rank();
  const int real_power = variant == AnsatzVariant::consistent ? h / 2 : h / 4;
  const int imag_power = variant == AnsatzVariant::consistent ? h / 4 : h / 2;

  const IntMatrix& s = fe.sigma.matrix;
  const IntMatrix shift = power(s, real_power);
  // s^(-k) = s^(h-k)
  const IntMatrix skew = power(s, imag_power) - power(s, h - imag_power);

  const RingScalar c = RingScalar::c();
  const RingScalar i_kappa = RingScalar::i() * RingScalar::kappa();
  DeformMatrix theta = shifted_identity(c, n);
  theta += to_ring(shift).unaryExpr([](const RingScalar& a) { return a * RingScalar::lambda(); });
  theta += to_ring(skew).unaryExpr([&](const RingScalar& a) { return a * i_kappa; });
  return theta;
}

ConstraintReport verify_constraints(const DeformMatrix& theta, const FactorizedElement& fe) {
  if (theta.rows() != fe.rank() || theta.cols() != fe.rank())
    throw Error(Errc::invalid_argument, "deformation matrix and element have different rank");
  ConstraintReport report;
  const RingMatrix theta_star = conj(theta);
  const RingMatrix s_minus = to_ring(fe.sigma_minus.matrix);
  const RingMatrix s_plus = to_ring(fe.sigma_plus.matrix);
  const RingMatrix s = to_ring(fe.sigma.matrix);

  report.intertwine_minus = exactly_equal((theta_star * s_minus).eval(), (s_minus * theta).eval());
  report.intertwine_plus = exactly_equal((theta_star * s_plus).eval(), (s_plus * theta).eval());
  report.commutes_with_sigma = commute(s, theta);
  report.antiunitary = is_identity((theta_star * theta).eval());
  report.det_value = determinant(theta);
  report.det_ok = report.det_value == RingScalar(1) || report.det_value == RingScalar(-1);

  const Eigen::Index n = theta.rows();
  report.limit_ok = true;
  for (Eigen::Index i = 0; i < n && report.limit_ok; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!(theta(i, j).at_undeformed() == GaussianRational(i == j ? 1 : 0))) {
        report.limit_ok = false;
        break;
      }
  return report;
}

std::vector<RingRow> deform_simple_roots(const DeformMatrix& theta, const RootSystem& rs) {
  if (theta.rows() != rs.rank() || theta.cols() != rs.rank())
    throw Error(Errc::invalid_argument, "deformation matrix and root system have different rank");
  std::vector<RingRow> out;
  for (Eigen::Index i = 0; i < theta.rows(); ++i) out.emplace_back(theta.row(i));
  return out;
}

bool is_trivial(const DeformMatrix& theta) {
  for (Eigen::Index i = 0; i < theta.rows(); ++i)
    for (Eigen::Index j = 0; j < theta.cols(); ++j)
      if (!theta(i, j).q().is_zero()) return false;
  return true;
}

}  // namespace rootdeform
