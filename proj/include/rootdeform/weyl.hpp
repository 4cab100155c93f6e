#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rootdeform/error.hpp"
#include "rootdeform/matrix.hpp"

namespace rootdeform {

enum class Color { minus, plus };

/// Root in the simple-root basis. Ordered lexicographically for set semantics.
struct Root {
  IntRow coords;

  Root() = default;
  explicit Root(IntRow c) : coords(std::move(c)) {}
  static Root simple(int rank, int vertex);

  int rank() const { return static_cast<int>(coords.size()); }
  Root operator-() const { return Root(-coords); }

  friend bool operator==(const Root& a, const Root& b) {
    return a.coords.size() == b.coords.size() && a.coords == b.coords;
  }
  friend std::strong_ordering operator<=>(const Root& a, const Root& b) {
    return std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(),
                                                  b.coords.begin(), b.coords.end());
  }
};

/// Validated finite-type root system with a proper 2-coloring of its Dynkin
/// diagram. Vertices are numbered 1..rank throughout the public interface.
class RootSystem {
 public:
  /// Catalog names: A{n}, B{n}, C{n}, D{n}, E6, E7, E8, F4, G2.
  static RootSystem from_catalog(std::string_view name);
  /// Custom Cartan matrix with an explicit set of minus-colored vertices; an
  /// empty set requests the BFS coloring that starts from vertex 1 as minus.
  static RootSystem from_cartan(IntMatrix cartan, std::vector<int> minus_vertices,
                                std::string name = "custom");

  const std::string& name() const { return name_; }
  const IntMatrix& cartan() const { return cartan_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  int coxeter_number() const { return coxeter_number_; }

  Color color(int vertex) const;
  /// c_i = +1 for plus, -1 for minus.
  int sign(int vertex) const { return color(vertex) == Color::plus ? 1 : -1; }
  std::vector<int> vertices(Color c) const;
  bool adjacent(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Symmetric bilinear form on the simple roots, long roots of length^2 2.
  const Eigen::MatrixXd& gram() const { return gram_; }

  /// Throws Errc::invalid_argument unless 1 <= vertex <= rank.
  void check_vertex(int vertex) const;

 private:
  RootSystem() = default;

  std::string name_;
  IntMatrix cartan_;
  std::vector<Color> colors_;
  Eigen::MatrixXd gram_;
  int coxeter_number_ = 0;
};

/// Builds a catalog system; mirrors RootSystem::from_catalog.
RootSystem build_root_system(std::string_view name);

/// Element of the Weyl group as an integer action matrix (row i holds the
/// coordinates of the image of alpha_i) together with a generating word.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;

  int rank() const { return static_cast<int>(matrix.rows()); }
  Root apply(const Root& r) const { return Root(r.coords * matrix); }
  WeylElement inverse() const;
  WeylElement power(int n) const;

  /// Concatenates words; the matrix product follows the same left-to-right order.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
};

WeylElement identity_element(int rank);

/// sigma_i(alpha_j) = alpha_j - A_ji alpha_i.
WeylElement simple_reflection(const RootSystem& rs, int vertex);

/// Left-to-right product of simple reflections: compose({3,5,7,2,4,6,8})
/// on E8 reproduces the familiar 8x8 action matrix row for row.
WeylElement compose(const RootSystem& rs, std::span<const int> word);

inline constexpr int kOrderCap = 1000;

/// Smallest n >= 1 with w^n = 1; throws Errc::order_cap_exceeded past the cap.
int element_order(const WeylElement& w, int cap = kOrderCap);
int element_order(const IntMatrix& m, int cap = kOrderCap);

/// Reflection closure of the simple roots, sorted. Throws Errc::not_finite_type
/// when the closure outgrows any finite root system of that rank.
std::vector<Root> generate_all_roots(const RootSystem& rs);

/// Root of maximal height.
Root highest_root(const RootSystem& rs);

/// Product of all minus reflections followed by all plus reflections.
WeylElement coxeter_element(const RootSystem& rs);

}  // namespace rootdeform
