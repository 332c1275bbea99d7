#include "field_file.hpp"

#include <sstream>

#include "logres/error.hpp"
#include "logres/poly_text.hpp"

namespace logres::cli {

FieldText parse_field_text(std::string_view contents) {
  FieldText out;
  std::istringstream in{std::string(contents)};
  std::string line;
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.lines.push_back(line.substr(first, last - first + 1));
    offsets.push_back(line_start + first);
  }
  if (out.lines.size() < 2) throw ParseError("a vector field needs at least two component lines", 0);
  const auto vars = text::VariableNames::homogeneous(static_cast<int>(out.lines.size()) - 1);
  for (std::size_t i = 0; i < out.lines.size(); ++i) {
    try {
      out.components.push_back(text::parse_polynomial(out.lines[i], vars));
    } catch (const ParseError& e) {
      throw ParseError("component " + std::to_string(i) + ": " + e.message(), offsets[i] + e.position());
    }
  }
  return out;
}

}  // namespace logres::cli
