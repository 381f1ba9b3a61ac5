#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace mgspec {

using EdgeCount = std::int64_t;
using MultiplicityMatrix =
    Eigen::Matrix<EdgeCount, Eigen::Dynamic, Eigen::Dynamic>;

/// Loopless undirected multigraph on vertex indices 0..n-1, stored as a
/// dense symmetric matrix of edge multiplicities with a zero diagonal.
/// Absent pairs have multiplicity 0. All query operations are const and
/// pure; values are safe to share across threads once built.
class Multigraph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Multigraph(int n);

  /// Wraps an explicit multiplicity matrix. Must be square, exactly
  /// symmetric, non-negative, with a zero diagonal.
  explicit Multigraph(MultiplicityMatrix multiplicities);

  int vertex_count() const { return static_cast<int>(mult_.rows()); }

  /// Number of parallel edges between u and v (0 when absent or u == v).
  EdgeCount multiplicity(int u, int v) const;
  void set_multiplicity(int u, int v, EdgeCount m);
  /// Adds k parallel edges between distinct vertices u and v.
  /// Throws std::overflow_error instead of wrapping around.
  void add_edges(int u, int v, EdgeCount k);

  bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
  bool has_any_edge() const;

  /// Number of edge endpoints at v, counting multiplicity.
  EdgeCount degree(int v) const;
  std::vector<EdgeCount> degree_sequence() const;

  /// The common degree d when every vertex has degree d, nullopt otherwise.
  std::optional<EdgeCount> regular_degree() const;

  /// Largest multiplicity over present pairs. Throws std::domain_error for
  /// edgeless graphs, where the maximum is undefined.
  EdgeCount max_multiplicity() const;

  /// Total number of edges, counting multiplicity.
  EdgeCount total_edge_multiplicity() const;

  /// Present pairs (u, v, multiplicity) with u < v, lexicographic order.
  std::vector<std::tuple<int, int, EdgeCount>> edges() const;

  /// Same vertex set, every present pair collapsed to multiplicity 1.
  Multigraph underlying_simple_graph() const;

  /// True iff every unordered pair of distinct vertices is present.
  bool is_underlying_complete() const;

  /// Breadth-first reachability from vertex 0 covers all vertices.
  bool is_connected() const;

  const MultiplicityMatrix& multiplicities() const { return mult_; }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.mult_.rows() == b.mult_.rows() &&
           (a.mult_.array() == b.mult_.array()).all();
  }
  friend bool operator!=(const Multigraph& a, const Multigraph& b) {
    return !(a == b);
  }

 private:
  void check_vertex(int v) const;

  MultiplicityMatrix mult_;
};

/// Subgraph induced by the kept vertices, re-indexed in the given order.
/// Indices must be distinct and in range; the list must be non-empty.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& keep);

}  // namespace mgspec
