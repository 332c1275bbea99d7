#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres::cli {

// Vector-field file: one component per non-empty line, '#' starts a comment. The
// number of components fixes n (n + 1 components over z0..zn). Throws ParseError.
struct FieldText {
  std::vector<std::string> lines;
  std::vector<poly::Polynomial> components;
};

FieldText parse_field_text(std::string_view contents);

}  // namespace logres::cli
