#include "rootdeform/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include <gmpxx.h>

namespace rootdeform {

namespace {

IntMatrix chain_cartan(int n) {
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

void link(IntMatrix& a, int i, int j) { a(i - 1, j - 1) = a(j - 1, i - 1) = -1; }

// E-series labelling: chain 2-3-...-n with 1 attached to 4.
IntMatrix e_cartan(int n) {
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (int i = 2; i < n; ++i) link(a, i, i + 1);
  link(a, 1, 4);
  return a;
}

// Chain 1..n-2 with n-1 and n both attached to n-2.
IntMatrix d_cartan(int n) {
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (int i = 1; i + 1 <= n - 2; ++i) link(a, i, i + 1);
  link(a, n - 2, n - 1);
  link(a, n - 2, n);
  return a;
}

int parse_rank(std::string_view digits) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(Errc::invalid_argument, "unknown root system '" + std::string(digits) + "'");
  return n;
}

void validate_cartan_entries(const IntMatrix& a) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw Error(Errc::invalid_argument, "Cartan matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j) {
        if (a(i, j) != 2) throw Error(Errc::invalid_argument, "Cartan diagonal must be 2");
      } else {
        if (a(i, j) > 0) throw Error(Errc::invalid_argument, "Cartan off-diagonal entries must be <= 0");
        if ((a(i, j) == 0) != (a(j, i) == 0))
          throw Error(Errc::invalid_argument, "Cartan zero pattern must be symmetric");
      }
    }
}

// Root lengths l_i with A_ij l_j = A_ji l_i, normalised per component so the
// longest root has l = 2. Throws if no such symmetriser exists.
std::vector<mpq_class> symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<mpq_class> len(n, 0);
  std::vector<int> component(n, -1);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    std::deque<int> queue{start};
    component[start] = components;
    len[start] = 1;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0 || component[j] >= 0) continue;
        component[j] = components;
        mpq_class ratio(mpz_class(static_cast<long>(a(j, i))), mpz_class(static_cast<long>(a(i, j))));
        ratio.canonicalize();
        len[j] = len[i] * ratio;
        queue.push_back(j);
      }
    }
    ++components;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && mpq_class(static_cast<long>(a(i, j))) * len[j] !=
                        mpq_class(static_cast<long>(a(j, i))) * len[i])
        throw Error(Errc::not_finite_type, "Cartan matrix is not symmetrizable");
  for (int comp = 0; comp < components; ++comp) {
    mpq_class longest = 0;
    for (int i = 0; i < n; ++i)
      if (component[i] == comp) longest = std::max(longest, len[i]);
    for (int i = 0; i < n; ++i)
      if (component[i] == comp) len[i] = len[i] * 2 / longest;
  }
  return len;
}

std::size_t root_bound(int rank) {
  return std::max<std::size_t>(2 * static_cast<std::size_t>(rank) * rank, 240);
}

IntMatrix reflection_matrix(const IntMatrix& cartan, int index) {
  const Eigen::Index n = cartan.rows();
  IntMatrix m = IntMatrix::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, index) -= cartan(j, index);
  return m;
}

std::vector<Root> reflection_closure(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<IntMatrix> reflections;
  for (int i = 0; i < n; ++i) reflections.push_back(reflection_matrix(cartan, i));
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    Root r = Root::simple(n, i);
    seen.insert(r);
    queue.push_back(std::move(r));
  }
  const std::size_t bound = root_bound(n);
  while (!queue.empty()) {
    const Root r = std::move(queue.front());
    queue.pop_front();
    for (const IntMatrix& s : reflections) {
      Root image(r.coords * s);
      if (seen.insert(image).second) {
        if (seen.size() > bound)
          throw Error(Errc::not_finite_type, "not finite type: root closure exceeds bound");
        queue.push_back(std::move(image));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Color> bfs_coloring(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> side(n, -1);
  for (int start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j)
        if (j != i && a(i, j) != 0 && side[j] < 0) {
          side[j] = 1 - side[i];
          queue.push_back(j);
        }
    }
  }
  std::vector<Color> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = side[i] == 0 ? Color::minus : Color::plus;
  return colors;
}

}  // namespace

Root Root::simple(int rank, int vertex) {
  IntRow c = IntRow::Zero(rank);
  c(vertex - 1) = 1;
  return Root(std::move(c));
}

RootSystem RootSystem::from_catalog(std::string_view name) {
  if (name.empty()) throw Error(Errc::invalid_argument, "empty root system name");
  const char family = name.front();
  const int n = parse_rank(name.substr(1));
  IntMatrix a;
  switch (family) {
    case 'A':
      if (n < 1) break;
      a = chain_cartan(n);
      break;
    case 'B':
      if (n < 2) break;
      a = chain_cartan(n);
      a(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) break;
      a = chain_cartan(n);
      a(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) break;
      a = d_cartan(n);
      break;
    case 'E':
      if (n < 6 || n > 8) break;
      a = e_cartan(n);
      break;
    case 'F':
      if (n != 4) break;
      a = chain_cartan(4);
      a(1, 2) = -2;
      break;
    case 'G':
      if (n != 2) break;
      a = chain_cartan(2);
      a(1, 0) = -3;
      break;
    default:
      break;
  }
  if (a.size() == 0) throw Error(Errc::invalid_argument, "unknown root system '" + std::string(name) + "'");
  return from_cartan(std::move(a), {}, std::string(name));
}

RootSystem RootSystem::from_cartan(IntMatrix cartan, std::vector<int> minus_vertices, std::string name) {
  validate_cartan_entries(cartan);
  const std::vector<mpq_class> lengths = symmetrizer(cartan);
  reflection_closure(cartan);  // throws for infinite types

  RootSystem rs;
  rs.name_ = std::move(name);
  rs.cartan_ = std::move(cartan);
  const int n = rs.rank();
  if (minus_vertices.empty()) {
    rs.colors_ = bfs_coloring(rs.cartan_);
  } else {
    rs.colors_.assign(n, Color::plus);
    for (int v : minus_vertices) {
      rs.check_vertex(v);
      rs.colors_[v - 1] = Color::minus;
    }
  }
  for (auto [i, j] : rs.edges())
    if (rs.color(i) == rs.color(j))
      throw Error(Errc::improper_coloring, "improper coloring: vertices " + std::to_string(i) + " and " +
                                               std::to_string(j) + " are linked and share a color");

  rs.gram_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.gram_(i, j) = mpq_class(mpq_class(static_cast<long>(rs.cartan_(i, j))) * lengths[j] / 2).get_d();

  rs.coxeter_number_ = element_order(coxeter_element(rs));
  return rs;
}

RootSystem build_root_system(std::string_view name) { return RootSystem::from_catalog(name); }

void RootSystem::check_vertex(int vertex) const {
  if (vertex < 1 || vertex > rank())
    throw Error(Errc::invalid_argument,
                "vertex " + std::to_string(vertex) + " out of range 1.." + std::to_string(rank()));
}

Color RootSystem::color(int vertex) const {
  check_vertex(vertex);
  return colors_[vertex - 1];
}

std::vector<int> RootSystem::vertices(Color c) const {
  std::vector<int> out;
  for (int v = 1; v <= rank(); ++v)
    if (colors_[v - 1] == c) out.push_back(v);
  return out;
}

bool RootSystem::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return i != j && cartan_(i - 1, j - 1) != 0;
}

std::vector<std::pair<int, int>> RootSystem::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank(); ++i)
    for (int j = i + 1; j <= rank(); ++j)
      if (cartan_(i - 1, j - 1) != 0) out.emplace_back(i, j);
  return out;
}

WeylElement identity_element(int rank) { return {IntMatrix::Identity(rank, rank), {}}; }

WeylElement WeylElement::inverse() const {
  // reflections are involutions, so the reversed word inverts the product
  WeylElement out{power(std::max(1, element_order(matrix)) - 1).matrix, {word.rbegin(), word.rend()}};
  return out;
}

WeylElement WeylElement::power(int n) const {
  WeylElement out{rootdeform::power(matrix, n), {}};
  for (int k = 0; k < n; ++k) out.word.insert(out.word.end(), word.begin(), word.end());
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement out{a.matrix * b.matrix, a.word};
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

WeylElement simple_reflection(const RootSystem& rs, int vertex) {
  rs.check_vertex(vertex);
  return {reflection_matrix(rs.cartan(), vertex - 1), {vertex}};
}

WeylElement compose(const RootSystem& rs, std::span<const int> word) {
  WeylElement out = identity_element(rs.rank());
  for (int v : word) out = out * simple_reflection(rs, v);
  return out;
}

int element_order(const IntMatrix& m, int cap) {
  IntMatrix p = m;
  for (int n = 1; n <= cap; ++n) {
    if (is_identity(p)) return n;
    p = (p * m).eval();
  }
  throw Error(Errc::order_cap_exceeded, "element order exceeds cap " + std::to_string(cap));
}

int element_order(const WeylElement& w, int cap) { return element_order(w.matrix, cap); }

std::vector<Root> generate_all_roots(const RootSystem& rs) { return reflection_closure(rs.cartan()); }

Root highest_root(const RootSystem& rs) {
  const std::vector<Root> roots = generate_all_roots(rs);
  return *std::max_element(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    return a.coords.sum() < b.coords.sum();
  });
}

WeylElement coxeter_element(const RootSystem& rs) {
  std::vector<int> word = rs.vertices(Color::minus);
  const std::vector<int> plus = rs.vertices(Color::plus);
  word.insert(word.end(), plus.begin(), plus.end());
  return compose(rs, word);
}

}  // namespace rootdeform
