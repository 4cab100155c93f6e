#pragma once

#include <stdexcept>
#include <string>

namespace rootdeform {

enum class Errc {
  invalid_argument,    // malformed input: bad index, wrong shape, unknown name
  not_finite_type,     // Cartan data does not describe a finite root system
  improper_coloring,   // adjacent vertices share a color
  wrong_color,         // subset vertex has the other color
  order_cap_exceeded,  // element order beyond the iteration cap
  ansatz_inapplicable, // 4 does not divide the element order
  singular_sample,     // a root is orthogonal to the sample point
  rendering,           // root cannot be written in sign-prefixed notation
  parse,               // compact notation or JSON could not be parsed
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rootdeform
