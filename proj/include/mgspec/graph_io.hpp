#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mgspec/multigraph.hpp"

namespace mgspec {

/// Malformed graph-file content; line() is the 1-based offending line.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the text graph format:
///   - '#' starts a comment line; blank lines are ignored
///   - the first data line is "n <count>"
///   - each following data line is "u v m" with 0 <= u < v < n and m >= 1
///   - repeating a pair is an error
Multigraph parse_graph(std::string_view text);

/// Canonical text form: header line, then present pairs sorted
/// lexicographically. parse_graph(render_graph(g)) == g.
std::string render_graph(const Multigraph& g);

}  // namespace mgspec
