#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "asigma/graph.hpp"

namespace asigma {

std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
// std::invalid_argument on malformed input or n outside [1, 64].
Graph from_graph6(std::string_view text);

// Reads one graph per non-empty line.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}
  std::optional<Graph> next();
  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

}  // namespace asigma
