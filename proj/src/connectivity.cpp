#include "mgspec/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mgspec {

namespace {

constexpr long long kFlowInf = std::numeric_limits<long long>::max() / 4;

/// Dinic max-flow on a small directed network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n), level_(n), iter_(n) {}

  void add_arc(int from, int to, long long cap) {
    adj_[from].push_back({to, static_cast<int>(adj_[to].size()), cap});
    adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, 0});
  }

  long long max_flow(int source, int sink) {
    long long total = 0;
    while (build_levels(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (long long pushed = augment(source, sink, kFlowInf)) {
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from source through positive residual capacity.
  std::vector<char> residual_reachable(int source) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack = {source};
    seen[source] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Arc& arc : adj_[v]) {
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int rev;
    long long cap;
  };

  bool build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (const Arc& arc : adj_[v]) {
        if (arc.cap > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  long long augment(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Arc& arc = adj_[v][i];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      const long long pushed =
          augment(arc.to, sink, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        adj_[arc.to][arc.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

int vertex_in(int v) { return 2 * v; }
int vertex_out(int v) { return 2 * v + 1; }

/// Minimum vertex cut separating the non-adjacent pair (s, t) in the simple
/// graph, via unit vertex capacities on a split digraph.
std::pair<int, std::vector<int>> min_vertex_cut_between(const Multigraph& simple,
                                                        int s, int t) {
  const int n = simple.vertex_count();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) {
    net.add_arc(vertex_in(v), vertex_out(v),
                (v == s || v == t) ? kFlowInf : 1);
  }
  for (const auto& [u, v, m] : simple.edges()) {
    net.add_arc(vertex_out(u), vertex_in(v), kFlowInf);
    net.add_arc(vertex_out(v), vertex_in(u), kFlowInf);
  }
  const long long flow = net.max_flow(vertex_out(s), vertex_in(t));
  const std::vector<char> reach = net.residual_reachable(vertex_out(s));
  std::vector<int> cut;
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    if (reach[vertex_in(v)] && !reach[vertex_out(v)]) cut.push_back(v);
  }
  return {static_cast<int>(flow), std::move(cut)};
}

bool disconnects(const Multigraph& g, const std::vector<char>& removed,
                 int removed_count) {
  const int n = g.vertex_count();
  const int remaining = n - removed_count;
  if (remaining < 2) return false;
  int start = 0;
  while (removed[start]) ++start;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!removed[u] && !seen[u] && g.multiplicities()(v, u) > 0) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached != remaining;
}

}  // namespace

std::pair<int, std::vector<int>> vertex_connectivity_with_witness(
    const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument(
        "vertex_connectivity: graph needs at least 2 vertices");
  }
  if (!g.is_connected()) return {0, {}};
  const Multigraph simple = g.underlying_simple_graph();
  if (simple.is_underlying_complete()) return {n - 1, {}};

  int best = n;
  std::vector<int> best_witness;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (simple.has_edge(s, t)) continue;
      auto [cut, witness] = min_vertex_cut_between(simple, s, t);
      std::sort(witness.begin(), witness.end());
      if (cut < best || (cut == best && witness < best_witness)) {
        best = cut;
        best_witness = std::move(witness);
      }
    }
  }
  return {best, std::move(best_witness)};
}

int vertex_connectivity(const Multigraph& g) {
  return vertex_connectivity_with_witness(g).first;
}

std::pair<EdgeCount, std::vector<EdgeCutEntry>> edge_connectivity_with_witness(
    const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument(
        "edge_connectivity: graph needs at least 2 vertices");
  }

  // Stoer-Wagner contraction; supernode ids stay sorted and ties in the
  // maximum-adjacency ordering resolve to the smallest id, so the returned
  // cut is reproducible.
  MultiplicityMatrix weights = g.multiplicities();
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};

  EdgeCount best = std::numeric_limits<EdgeCount>::max();
  std::vector<int> best_side;

  auto normalise_side = [&](std::vector<int> side) {
    std::sort(side.begin(), side.end());
    if (!side.empty() && side.front() == 0) {
      std::vector<char> in_side(n, 0);
      for (int v : side) in_side[v] = 1;
      std::vector<int> complement;
      for (int v = 0; v < n; ++v) {
        if (!in_side[v]) complement.push_back(v);
      }
      return complement;
    }
    return side;
  };

  while (active.size() > 1) {
    std::vector<char> in_order(n, 0);
    std::vector<EdgeCount> key(n, 0);
    int prev = -1;
    int last = -1;
    EdgeCount cut_of_phase = 0;
    for (std::size_t step = 0; step < active.size(); ++step) {
      int pick = active.front();
      EdgeCount pick_key = -1;
      for (int v : active) {
        if (!in_order[v] && key[v] > pick_key) {
          pick = v;
          pick_key = key[v];
        }
      }
      in_order[pick] = 1;
      prev = last;
      last = pick;
      cut_of_phase = key[pick];
      for (int v : active) {
        if (!in_order[v]) key[v] += weights(pick, v);
      }
    }

    std::vector<int> side = normalise_side(members[last]);
    if (cut_of_phase < best || (cut_of_phase == best && side < best_side)) {
      best = cut_of_phase;
      best_side = std::move(side);
    }

    for (int v : active) {
      if (v == last || v == prev) continue;
      weights(prev, v) += weights(last, v);
      weights(v, prev) = weights(prev, v);
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    active.erase(std::find(active.begin(), active.end(), last));
  }

  std::vector<char> in_side(n, 0);
  for (int v : best_side) in_side[v] = 1;
  std::vector<EdgeCutEntry> witness;
  for (const auto& [u, v, m] : g.edges()) {
    if (in_side[u] != in_side[v]) witness.push_back({u, v, m});
  }
  if (best == 0) witness.clear();
  return {best, std::move(witness)};
}

EdgeCount edge_connectivity(const Multigraph& g) {
  return edge_connectivity_with_witness(g).first;
}

ConnectivityReport connectivity_report(const Multigraph& g) {
  ConnectivityReport report;
  auto [kappa, vertex_witness] = vertex_connectivity_with_witness(g);
  auto [kappa_prime, edge_witness] = edge_connectivity_with_witness(g);
  report.kappa = kappa;
  report.kappa_prime = kappa_prime;
  report.vertex_cut_witness = std::move(vertex_witness);
  report.edge_cut_witness = std::move(edge_witness);
  return report;
}

bool is_k_connected(const Multigraph& g, int k) {
  if (k < 0) {
    throw std::invalid_argument("is_k_connected: k must be non-negative");
  }
  if (k == 0) return true;
  if (g.vertex_count() <= k) return false;
  return vertex_connectivity(g) >= k;
}

int independence_number(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 32) {
    throw std::invalid_argument(
        "independence_number: exact search limited to 32 vertices");
  }
  std::vector<std::uint32_t> neighbours(n, 0);
  for (const auto& [u, v, m] : g.edges()) {
    neighbours[u] |= 1u << v;
    neighbours[v] |= 1u << u;
  }

  int best = 0;
  auto search = [&](auto&& self, std::uint32_t avail, int count) -> void {
    if (count + std::popcount(avail) <= best) return;
    if (avail == 0) {
      best = std::max(best, count);
      return;
    }
    // Branch on the available vertex with the most available neighbours.
    int pivot = -1;
    int pivot_degree = -1;
    for (std::uint32_t rest = avail; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const int deg = std::popcount(neighbours[v] & avail);
      if (deg > pivot_degree) {
        pivot_degree = deg;
        pivot = v;
      }
    }
    self(self, avail & ~(neighbours[pivot] | (1u << pivot)), count + 1);
    self(self, avail & ~(1u << pivot), count);
  };
  const std::uint32_t all =
      n == 32 ? ~0u : ((1u << n) - 1u);
  search(search, all, 0);
  return best;
}

int brute_force_vertex_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument(
        "brute_force_vertex_connectivity: graph needs at least 2 vertices");
  }
  if (n > 10) {
    throw std::invalid_argument(
        "brute_force_vertex_connectivity: limited to 10 vertices");
  }
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int removed_count = std::popcount(mask);
    if (removed_count >= best || n - removed_count < 2) continue;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) removed[v] = 1;
    }
    if (disconnects(g, removed, removed_count)) best = removed_count;
  }
  return best;
}

EdgeCount brute_force_edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument(
        "brute_force_edge_connectivity: graph needs at least 2 vertices");
  }
  if (n > 12) {
    throw std::invalid_argument(
        "brute_force_edge_connectivity: limited to 12 vertices");
  }
  EdgeCount best = std::numeric_limits<EdgeCount>::max();
  // Vertex 0 stays on the complement side, so each bipartition appears once.
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    EdgeCount crossing = 0;
    for (const auto& [u, v, m] : g.edges()) {
      const bool u_in = u > 0 && (mask & (1u << (u - 1)));
      const bool v_in = v > 0 && (mask & (1u << (v - 1)));
      if (u_in != v_in) crossing += m;
    }
    best = std::min(best, crossing);
  }
  return best;
}

}  // namespace mgspec
