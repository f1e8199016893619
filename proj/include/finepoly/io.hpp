#pragma once

// Plain-text polytope files.
//
//   # name: parallelepiped       (optional, anywhere before the header)
//   V 3 8                        vertex list: n rows of d coordinates
//   H 2 3                        inequalities: m rows "nu_1 .. nu_d delta",
//                                meaning <x, nu> >= delta
//
// Coordinates are integers or p/q. Other lines starting with '#' and blank
// lines are ignored.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "finepoly/exact.hpp"
#include "finepoly/polytope.hpp"

namespace finepoly {

/// InputError whose message starts with "line N: ".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct InputDocument {
  char format = 'V';
  std::size_t dim = 0;
  std::vector<RationalVector> rows;
  std::string name;
};

InputDocument parse_input(std::string_view text);
InputDocument read_input_file(const std::filesystem::path& path);

/// Builds the polytope; H documents must describe a bounded, nonempty set.
Polytope to_polytope(const InputDocument& doc);

/// Inverse of parse_input for V documents.
std::string format_vertices(const std::vector<RationalVector>& vertices, const std::string& name = "");

}  // namespace finepoly
