#include "mgspec/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mgspec {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::optional<long long> parse_int(std::string_view field) {
  long long value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<Multigraph> graph;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;

    if (!graph) {
      if (fields.size() != 2 || fields[0] != "n") {
        throw GraphParseError("expected header line \"n <count>\"", line_no);
      }
      const auto n = parse_int(fields[1]);
      if (!n || *n < 1 || *n > 1000000) {
        throw GraphParseError("invalid vertex count", line_no);
      }
      graph.emplace(static_cast<int>(*n));
      continue;
    }

    if (fields.size() != 3) {
      throw GraphParseError("expected edge line \"u v m\"", line_no);
    }
    const auto u = parse_int(fields[0]);
    const auto v = parse_int(fields[1]);
    const auto m = parse_int(fields[2]);
    if (!u || !v || !m) {
      throw GraphParseError("edge fields must be integers", line_no);
    }
    const int n = graph->vertex_count();
    if (*u < 0 || *u >= n || *v < 0 || *v >= n) {
      throw GraphParseError("vertex index out of range", line_no);
    }
    if (*u == *v) {
      throw GraphParseError("loop edges are not allowed", line_no);
    }
    if (*u > *v) {
      throw GraphParseError("edge endpoints must satisfy u < v", line_no);
    }
    if (*m < 1) {
      throw GraphParseError("multiplicity must be at least 1", line_no);
    }
    if (graph->has_edge(static_cast<int>(*u), static_cast<int>(*v))) {
      throw GraphParseError("duplicate edge pair", line_no);
    }
    graph->set_multiplicity(static_cast<int>(*u), static_cast<int>(*v), *m);
  }
  if (!graph) {
    throw GraphParseError("missing header line \"n <count>\"", line_no);
  }
  return *graph;
}

std::string render_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v, m] : g.edges()) {
    out << u << " " << v << " " << m << "\n";
  }
  return out.str();
}

}  // namespace mgspec
