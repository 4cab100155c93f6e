#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rootdeform/reduced.hpp"

namespace rootdeform {

enum class Superscript {
  caret,    // 3^2
  unicode,  // 3²
};

/// Compact form of a root: overall sign, then the support as ';'-separated
/// vertex indices with multiplicities as powers, e.g. "-2;3;4" or "1;3^2".
/// Throws Errc::rendering for the zero vector or a root with mixed signs.
std::string render_root(const Root& r, Superscript style = Superscript::caret);

/// Inverse of render_root; accepts both superscript styles.
Root parse_root(std::string_view cell, int rank);

/// grid[n - 1][i - 1] = sigma^n seed_i for n = 1..order-1.
using OrbitGrid = std::vector<std::vector<Root>>;

OrbitGrid orbit_grid(const ReducedRootSpace& space);

/// One header line and one line per power of sigma, columns separated by '|'.
std::string render_orbit_table(const OrbitGrid& grid, Superscript style = Superscript::caret);
std::string render_orbit_table(const ReducedRootSpace& space, Superscript style = Superscript::caret);

/// Reads a table produced by render_orbit_table (either style).
OrbitGrid parse_orbit_table(std::string_view text);

}  // namespace rootdeform
