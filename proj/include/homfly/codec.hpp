#pragma once

// Text codecs for diagrams.
//
// Gauss code: one line per circle in component order. Each line lists the
// endpoints met from the base point along the orientation as tokens
// `O<id><sign>` (tail, overpass) or `U<id><sign>` (head, underpass). A line
// holding a single `.` is an arrowless circle. Blank lines and lines starting
// with `#` are ignored.
//
// PD code JSON: {"crossings":[[i,j,k,l],...],"components":[{"base_edge":e},...]}
// with edges listed counterclockwise from the incoming under-edge.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homfly/diagram.hpp"

namespace homfly {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Arrow ids are numbered in increasing order of their decimal value.
GaussDiagram parse_gauss_code(std::string_view text);
/// Arrow i is printed with id i + 1.
std::string to_gauss_code(const GaussDiagram& g);
/// Same layout with the sign suffixes dropped.
std::string to_unsigned_gauss_code(const GaussDiagram& g);

struct PdCode {
  std::vector<std::array<long, 4>> crossings;
  std::vector<long> base_edges;
};

PdCode parse_pd_json(std::string_view text);
nlohmann::json to_json(const PdCode& pd);

/// Crossing c becomes arrow c. Over-strand directions are inferred from the
/// under-strands by propagation along edges. Throws std::invalid_argument on
/// inconsistent or dangling edges.
GaussDiagram from_pd_code(const PdCode& pd);

enum class InputFormat { Auto, Gauss, Pd };

/// Auto picks PD JSON when the text starts with '{'.
GaussDiagram read_diagram(std::string_view text, InputFormat format = InputFormat::Auto);

}  // namespace homfly
