#include "mgspec/multigraph.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace mgspec {

Multigraph::Multigraph(int n) {
  if (n < 1) {
    throw std::invalid_argument("Multigraph: vertex count must be at least 1");
  }
  mult_ = MultiplicityMatrix::Zero(n, n);
}

Multigraph::Multigraph(MultiplicityMatrix multiplicities)
    : mult_(std::move(multiplicities)) {
  const Eigen::Index n = mult_.rows();
  if (n < 1 || mult_.cols() != n) {
    throw std::invalid_argument(
        "Multigraph: multiplicity matrix must be square and non-empty");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (mult_(i, i) != 0) {
      throw std::invalid_argument("Multigraph: loops are not allowed");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (mult_(i, j) != mult_(j, i)) {
        throw std::invalid_argument(
            "Multigraph: multiplicity matrix must be symmetric");
      }
      if (mult_(i, j) < 0) {
        throw std::invalid_argument(
            "Multigraph: multiplicities must be non-negative");
      }
    }
  }
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("Multigraph: vertex index out of range");
  }
}

EdgeCount Multigraph::multiplicity(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return mult_(u, v);
}

void Multigraph::set_multiplicity(int u, int v, EdgeCount m) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("Multigraph: loops are not allowed");
  }
  if (m < 0) {
    throw std::invalid_argument("Multigraph: multiplicity must be non-negative");
  }
  mult_(u, v) = m;
  mult_(v, u) = m;
}

void Multigraph::add_edges(int u, int v, EdgeCount k) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("Multigraph: loops are not allowed");
  }
  if (k < 1) {
    throw std::invalid_argument("Multigraph: edge count must be positive");
  }
  if (mult_(u, v) > std::numeric_limits<EdgeCount>::max() - k) {
    throw std::overflow_error("Multigraph: multiplicity overflow");
  }
  mult_(u, v) += k;
  mult_(v, u) += k;
}

bool Multigraph::has_any_edge() const {
  return (mult_.array() > 0).any();
}

EdgeCount Multigraph::degree(int v) const {
  check_vertex(v);
  EdgeCount sum = 0;
  for (int u = 0; u < vertex_count(); ++u) {
    if (__builtin_add_overflow(sum, mult_(v, u), &sum)) {
      throw std::overflow_error("Multigraph: degree overflow");
    }
  }
  return sum;
}

std::vector<EdgeCount> Multigraph::degree_sequence() const {
  std::vector<EdgeCount> degrees(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) degrees[v] = degree(v);
  return degrees;
}

std::optional<EdgeCount> Multigraph::regular_degree() const {
  const EdgeCount d = degree(0);
  for (int v = 1; v < vertex_count(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

EdgeCount Multigraph::max_multiplicity() const {
  if (!has_any_edge()) {
    throw std::domain_error(
        "Multigraph: max multiplicity is undefined for an edgeless graph");
  }
  return mult_.maxCoeff();
}

EdgeCount Multigraph::total_edge_multiplicity() const {
  EdgeCount sum = 0;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (__builtin_add_overflow(sum, mult_(u, v), &sum)) {
        throw std::overflow_error("Multigraph: edge total overflow");
      }
    }
  }
  return sum;
}

std::vector<std::tuple<int, int, EdgeCount>> Multigraph::edges() const {
  std::vector<std::tuple<int, int, EdgeCount>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (mult_(u, v) > 0) out.emplace_back(u, v, mult_(u, v));
    }
  }
  return out;
}

Multigraph Multigraph::underlying_simple_graph() const {
  MultiplicityMatrix simple =
      (mult_.array() > 0).cast<EdgeCount>().matrix();
  return Multigraph(std::move(simple));
}

bool Multigraph::is_underlying_complete() const {
  const int n = vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (mult_(u, v) == 0) return false;
    }
  }
  return true;
}

bool Multigraph::is_connected() const {
  const int n = vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && mult_(v, u) > 0) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("induced_subgraph: kept vertex set is empty");
  }
  std::vector<char> used(g.vertex_count(), 0);
  for (int v : keep) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::out_of_range("induced_subgraph: vertex index out of range");
    }
    if (used[v]) {
      throw std::invalid_argument("induced_subgraph: duplicate vertex index");
    }
    used[v] = 1;
  }
  const int m = static_cast<int>(keep.size());
  MultiplicityMatrix sub(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      sub(i, j) = g.multiplicities()(keep[i], keep[j]);
    }
  }
  return Multigraph(std::move(sub));
}

}  // namespace mgspec
