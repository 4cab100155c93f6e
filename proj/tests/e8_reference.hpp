#pragma once

// Published E8 data: the element sigma_3 sigma_5 sigma_7 sigma_2 sigma_4 sigma_6 sigma_8,
// its deformation matrix, deformed simple roots, orbit table and factor relations.

#include <array>
#include <string>
#include <vector>

#include "rootdeform/matrix.hpp"

namespace e8ref {

using rootdeform::IntMatrix;
using rootdeform::RingMatrix;
using rootdeform::RingRow;
using rootdeform::RingScalar;

inline const std::vector<int> kWord = {3, 5, 7, 2, 4, 6, 8};
inline const std::vector<int> kMinus = {3, 5, 7};
inline const std::vector<int> kPlus = {2, 4, 6, 8};

inline IntMatrix sigma_matrix() {
  IntMatrix m(8, 8);
  m << 1, 0, 0, 1, 0, 0, 0, 0,
       0, 0, 1, 1, 0, 0, 0, 0,
       0, -1, -1, -1, 0, 0, 0, 0,
       0, 1, 1, 1, 1, 1, 0, 0,
       0, 0, 0, -1, -1, -1, 0, 0,
       0, 0, 0, 1, 1, 1, 1, 1,
       0, 0, 0, 0, 0, -1, -1, -1,
       0, 0, 0, 0, 0, 1, 1, 0;
  return m;
}

inline RingMatrix theta_matrix() {
  const RingScalar c = RingScalar::c();
  const RingScalar l = RingScalar::lambda();
  const RingScalar ik = RingScalar::i() * RingScalar::kappa();
  const RingScalar o(0), one(1), two(2), three(3);
  RingMatrix t(8, 8);
  t << one, l, two * l - ik, three - three * c, three * l - ik, three - three * c, two * l - ik, l,
       o, c, o, ik, two * ik, ik, o, -l,
       o, o, c - ik, -two * ik, -two * ik, -two * ik, -ik - l, o,
       o, ik, two * ik, c + two * ik, two * ik, two * ik - l, two * ik, ik,
       o, -two * ik, -two * ik, -two * ik, two * (c - ik) - one, -two * ik, -two * ik, -two * ik,
       o, ik, two * ik, two * ik - l, two * ik, c + two * ik, two * ik, ik,
       o, o, -l - ik, -two * ik, -two * ik, -two * ik, c - ik, o,
       o, -l, o, ik, two * ik, ik, o, c;
  return t;
}

// integer combination of simple roots, lifted to the ring
inline RingRow comb(std::array<int, 8> coeffs) {
  RingRow r(8);
  for (int k = 0; k < 8; ++k) r(k) = RingScalar(coeffs[static_cast<std::size_t>(k)]);
  return r;
}

inline RingRow alpha(int i) {
  std::array<int, 8> a{};
  a[static_cast<std::size_t>(i - 1)] = 1;
  return comb(a);
}

/// The eight deformed simple roots of the E8 example, written out by hand.
inline std::vector<RingRow> deformed_roots() {
  const RingScalar c = RingScalar::c();
  const RingScalar l = RingScalar::lambda();
  const RingScalar ik = RingScalar::i() * RingScalar::kappa();
  const RingScalar one(1), two(2);
  std::vector<RingRow> a;
  a.push_back(alpha(1) + comb({0, 1, 2, 3, 3, 3, 2, 1}) * l - comb({0, 0, 1, 0, 1, 0, 1, 0}) * ik);
  a.push_back((alpha(2) + alpha(8)) * c - alpha(8) + comb({0, 0, 0, 1, 2, 1, 0, 0}) * ik);
  a.push_back((alpha(3) + alpha(7)) * c - alpha(7) - comb({0, 0, 1, 2, 2, 2, 1, 0}) * ik);
  a.push_back((alpha(4) + alpha(6)) * c - alpha(6) + comb({0, 1, 2, 2, 2, 2, 2, 1}) * ik);
  a.push_back(alpha(5) * (two * c - one) - comb({0, 1, 1, 1, 1, 1, 1, 1}) * (two * ik));
  a.push_back(alpha(6) * c + alpha(4) * (c + two * ik - one) + comb({0, 1, 2, 0, 2, 2, 2, 1}) * ik);
  a.push_back(alpha(7) * c + alpha(3) * (c - one) - comb({0, 0, 1, 2, 2, 2, 1, 0}) * ik);
  a.push_back(alpha(8) * c - alpha(2) * l + comb({0, 0, 0, 1, 2, 1, 0, 0}) * ik);
  return a;
}

/// Orbit table rows sigma^1..sigma^7, columns alpha_1..alpha_8.
inline const std::array<std::array<std::string, 8>, 7> kOrbitTable = {{
    {"1;4", "3;4", "-2;3;4", "2;3;4;5;6", "-4;5;6", "4;5;6;7;8", "-6;7;8", "6;7"},
    {"1;2;3;4^2;5;6", "5;6", "-3;4;5;6", "3;4;5;6;7;8", "-2;3;4;5;6;7;8", "2;3;4;5;6;7", "-4;5;6;7", "4;5"},
    {"1;2;3^2;4^3;5^2;6^2;7;8", "7;8", "-5;6;7;8", "5;6;7", "-3;4;5;6;7", "3;4;5", "-2;3;4;5", "2;3"},
    {"1;2;3^2;4^3;5^3;6^3;7^2;8", "-8", "-7", "-6", "-5", "-4", "-3", "-2"},
    {"1;2;3^2;4^3;5^3;6^2;7^2;8", "-6;7", "6;7;8", "-4;5;6;7;8", "4;5;6", "-2;3;4;5;6", "2;3;4", "-3;4"},
    {"1;2;3^2;4^2;5^2;6;7", "-4;5", "4;5;6;7", "-2;3;4;5;6;7", "2;3;4;5;6;7;8", "-3;4;5;6;7;8", "3;4;5;6", "-5;6"},
    {"1;3;4;5", "-2;3", "2;3;4;5", "-3;4;5", "3;4;5;6;7", "-5;6;7", "5;6;7;8", "-7;8"},
}};

/// sigma_pm alpha_vertex = image, and where stated image = sigma^power alpha_witness.
struct Relation {
  int vertex;
  std::array<int, 8> image;
  int power;    // 0: no witness stated
  int witness;
};

inline const std::array<Relation, 8> kMinusRelations = {{
    {1, {1, 0, 0, 0, 0, 0, 0, 0}, 0, 0},
    {2, {0, 1, 1, 0, 0, 0, 0, 0}, 3, 8},
    {3, {0, 0, -1, 0, 0, 0, 0, 0}, 0, 0},
    {4, {0, 0, 1, 1, 1, 0, 0, 0}, 3, 6},
    {5, {0, 0, 0, 0, -1, 0, 0, 0}, 0, 0},
    {6, {0, 0, 0, 0, 1, 1, 1, 0}, 3, 4},
    {7, {0, 0, 0, 0, 0, 0, -1, 0}, 0, 0},
    {8, {0, 0, 0, 0, 0, 0, 1, 1}, 3, 2},
}};

inline const std::array<Relation, 8> kPlusRelations = {{
    {1, {1, 0, 0, 1, 0, 0, 0, 0}, 1, 1},
    {2, {0, -1, 0, 0, 0, 0, 0, 0}, 0, 0},
    {3, {0, 1, 1, 1, 0, 0, 0, 0}, 5, 7},
    {4, {0, 0, 0, -1, 0, 0, 0, 0}, 0, 0},
    {5, {0, 0, 0, 1, 1, 1, 0, 0}, 5, 5},
    {6, {0, 0, 0, 0, 0, -1, 0, 0}, 0, 0},
    {7, {0, 0, 0, 0, 0, 1, 1, 1}, 5, 3},
    {8, {0, 0, 0, 0, 0, 0, 0, -1}, 0, 0},
}};

}  // namespace e8ref
