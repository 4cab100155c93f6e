#include "rootdeform/notation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace rootdeform {

namespace {

constexpr std::array<std::string_view, 10> kSuperDigits = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
constexpr std::array<std::string_view, 10> kSubDigits = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string digits_with(long long n, const std::array<std::string_view, 10>& glyphs) {
  std::string out;
  for (char ch : std::to_string(n)) out += glyphs[static_cast<std::size_t>(ch - '0')];
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s, std::string_view context) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::parse, "bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

// Converts unicode superscript digits to "^digits".
std::string normalise_superscripts(std::string_view s) {
  std::string out;
  bool in_super = false;
  while (!s.empty()) {
    bool matched = false;
    for (std::size_t d = 0; d < kSuperDigits.size(); ++d) {
      if (s.starts_with(kSuperDigits[d])) {
        if (!in_super) out += '^';
        out += static_cast<char>('0' + d);
        s.remove_prefix(kSuperDigits[d].size());
        in_super = matched = true;
        break;
      }
    }
    if (matched) continue;
    in_super = false;
    out += s.front();
    s.remove_prefix(1);
  }
  return out;
}

std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (std::size_t k = 0; k < s.size();) {
    const auto b = static_cast<unsigned char>(s[k]);
    std::size_t len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    // combining diacritics U+0300..U+036F take no column
    const bool combining = len == 2 && (b == 0xCC || (b == 0xCD && static_cast<unsigned char>(s[k + 1]) < 0xB0));
    if (!combining) ++w;
    k += len;
  }
  return w;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k)
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  return out;
}

}  // namespace

std::string render_root(const Root& r, Superscript style) {
  const auto lo = r.coords.size() ? r.coords.minCoeff() : 0;
  const auto hi = r.coords.size() ? r.coords.maxCoeff() : 0;
  if (lo < 0 && hi > 0) throw Error(Errc::rendering, "root has mixed signs");
  if (lo == 0 && hi == 0) throw Error(Errc::rendering, "zero vector is not a root");
  std::string out = lo < 0 ? "-" : "";
  bool first = true;
  for (Eigen::Index i = 0; i < r.coords.size(); ++i) {
    const long long m = std::abs(static_cast<long long>(r.coords(i)));
    if (m == 0) continue;
    if (!first) out += ';';
    first = false;
    out += std::to_string(i + 1);
    if (m > 1) out += style == Superscript::caret ? "^" + std::to_string(m) : digits_with(m, kSuperDigits);
  }
  return out;
}

Root parse_root(std::string_view cell, int rank) {
  const std::string text = normalise_superscripts(trim(cell));
  std::string_view body = text;
  int sign = 1;
  if (body.starts_with('-')) {
    sign = -1;
    body.remove_prefix(1);
  }
  if (body.empty()) throw Error(Errc::parse, "empty root cell");
  IntRow coords = IntRow::Zero(rank);
  for (std::string_view part : split(body, ';')) {
    part = trim(part);
    long long mult = 1;
    if (auto caret = part.find('^'); caret != std::string_view::npos) {
      mult = parse_int(part.substr(caret + 1), cell);
      part = part.substr(0, caret);
    }
    const long long vertex = parse_int(part, cell);
    if (vertex < 1 || vertex > rank || mult < 1 || coords(vertex - 1) != 0)
      throw Error(Errc::parse, "bad entry in '" + std::string(cell) + "'");
    coords(vertex - 1) = sign * mult;
  }
  return Root(std::move(coords));
}

OrbitGrid orbit_grid(const ReducedRootSpace& space) {
  OrbitGrid grid(static_cast<std::size_t>(std::max(0, space.order - 1)));
  for (int n = 1; n < space.order; ++n)
    for (const auto& orbit : space.orbits) grid[n - 1].push_back(orbit[n]);
  return grid;
}

std::string render_orbit_table(const OrbitGrid& grid, Superscript style) {
  if (grid.empty()) return {};
  const std::size_t rank = grid.front().size();
  const bool pretty = style == Superscript::unicode;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{pretty ? "Δ̃" : "D"};
  for (std::size_t i = 1; i <= rank; ++i)
    header.push_back(pretty ? "α" + digits_with(static_cast<long long>(i), kSubDigits) : "a" + std::to_string(i));
  cells.push_back(std::move(header));
  for (std::size_t n = 1; n <= grid.size(); ++n) {
    std::vector<std::string> row{pretty ? "σ̃" + digits_with(static_cast<long long>(n), kSuperDigits)
                                        : "s^" + std::to_string(n)};
    for (const Root& r : grid[n - 1]) row.push_back(render_root(r, style));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(rank + 1, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], display_width(row[k]));
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << " | ";
      os << (k + 1 == row.size() ? row[k] : pad(row[k], widths[k]));
    }
    os << '\n';
  }
  return os.str();
}

std::string render_orbit_table(const ReducedRootSpace& space, Superscript style) {
  return render_orbit_table(orbit_grid(space), style);
}

OrbitGrid parse_orbit_table(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split(text, '\n'))
    if (!trim(line).empty()) lines.push_back(line);
  if (lines.empty()) return {};
  const int rank = static_cast<int>(split(lines.front(), '|').size()) - 1;
  if (rank < 1) throw Error(Errc::parse, "orbit table header has no columns");
  OrbitGrid grid;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto fields = split(lines[k], '|');
    if (static_cast<int>(fields.size()) != rank + 1) throw Error(Errc::parse, "orbit table row has wrong width");
    std::vector<Root> row;
    for (std::size_t f = 1; f < fields.size(); ++f) row.push_back(parse_root(fields[f], rank));
    grid.push_back(std::move(row));
  }
  return grid;
}

}  // namespace rootdeform
