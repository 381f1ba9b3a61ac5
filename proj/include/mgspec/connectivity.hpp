#pragma once

#include <utility>
#include <vector>

#include "mgspec/multigraph.hpp"

namespace mgspec {

struct EdgeCutEntry {
  int u = 0;
  int v = 0;
  EdgeCount multiplicity = 0;

  friend bool operator==(const EdgeCutEntry& a, const EdgeCutEntry& b) {
    return a.u == b.u && a.v == b.v && a.multiplicity == b.multiplicity;
  }
};

struct ConnectivityReport {
  int kappa = 0;
  EdgeCount kappa_prime = 0;
  /// Minimum vertex cut; empty when the underlying graph is complete or the
  /// graph is already disconnected.
  std::vector<int> vertex_cut_witness;
  /// Crossing pairs of a minimum-weight edge cut; total multiplicity equals
  /// kappa_prime. Empty when the graph is already disconnected.
  std::vector<EdgeCutEntry> edge_cut_witness;
};

/// Vertex connectivity of the underlying simple graph: 0 when disconnected,
/// n-1 when the underlying graph is complete, otherwise the minimum over
/// non-adjacent pairs of the vertex-capacity max-flow between them.
/// Requires n >= 2.
int vertex_connectivity(const Multigraph& g);
std::pair<int, std::vector<int>> vertex_connectivity_with_witness(
    const Multigraph& g);

/// Weight of a global minimum edge cut where each pair weighs its
/// multiplicity, by deterministic Stoer-Wagner contraction on integer
/// weights. Requires n >= 2.
EdgeCount edge_connectivity(const Multigraph& g);
std::pair<EdgeCount, std::vector<EdgeCutEntry>> edge_connectivity_with_witness(
    const Multigraph& g);

ConnectivityReport connectivity_report(const Multigraph& g);

/// True iff the graph has more than k vertices and no set of fewer than k
/// vertices disconnects it.
bool is_k_connected(const Multigraph& g, int k);

/// Exact maximum independent set size of the underlying simple graph by
/// branch and bound; requires n <= 32.
int independence_number(const Multigraph& g);

/// Exhaustive minimum over all disconnecting vertex subsets (n - 1 when
/// none exists); requires n <= 10. Oracle for vertex_connectivity.
int brute_force_vertex_connectivity(const Multigraph& g);

/// Exhaustive minimum crossing multiplicity over all proper bipartitions;
/// requires n <= 12. Oracle for edge_connectivity.
EdgeCount brute_force_edge_connectivity(const Multigraph& g);

}  // namespace mgspec
