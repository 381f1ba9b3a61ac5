#include "mgspec/partition.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mgspec {

void Partition::validate(int n) const {
  if (blocks.empty()) {
    throw std::invalid_argument("Partition: needs at least one block");
  }
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("Partition: blocks must be non-empty");
    }
    for (int v : block) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("Partition: vertex index out of range");
      }
      if (seen[v]) {
        throw std::invalid_argument("Partition: blocks must be disjoint");
      }
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) {
    throw std::invalid_argument("Partition: blocks must cover every vertex");
  }
}

Partition Partition::single_block(int n) {
  Partition p;
  p.blocks.emplace_back(n);
  std::iota(p.blocks.back().begin(), p.blocks.back().end(), 0);
  return p;
}

Partition Partition::singletons(int n) {
  Partition p;
  for (int v = 0; v < n; ++v) p.blocks.push_back({v});
  return p;
}

namespace {

/// Multiplicity-counted edge total from v into the block.
EdgeCount edge_total_into(const Multigraph& g, int v,
                          const std::vector<int>& block) {
  EdgeCount total = 0;
  for (int u : block) total += g.multiplicities()(v, u);
  return total;
}

}  // namespace

QuotientMatrix quotient_matrix(const Multigraph& g, const Partition& p) {
  p.validate(g.vertex_count());
  const int s = p.block_count();
  QuotientMatrix q;
  q.entries.resize(s, s);
  q.block_sizes.resize(s);
  for (int i = 0; i < s; ++i) {
    q.block_sizes[i] = static_cast<int>(p.blocks[i].size());
  }
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      EdgeCount total = 0;
      for (int v : p.blocks[i]) total += edge_total_into(g, v, p.blocks[j]);
      q.entries(i, j) =
          static_cast<double>(total) / static_cast<double>(q.block_sizes[i]);
    }
  }
  return q;
}

Spectrum quotient_eigenvalues(const QuotientMatrix& q, double tol) {
  const int s = q.order();
  if (s < 1 || q.entries.cols() != s ||
      static_cast<int>(q.block_sizes.size()) != s) {
    throw std::invalid_argument("quotient_eigenvalues: malformed quotient");
  }
  Eigen::MatrixXd sym(s, s);
  for (int i = 0; i < s; ++i) {
    sym(i, i) = q.entries(i, i);
    for (int j = i + 1; j < s; ++j) {
      const double bij = q.entries(i, j);
      const double bji = q.entries(j, i);
      const double lhs = bij * q.block_sizes[i];
      const double rhs = bji * q.block_sizes[j];
      if (std::abs(lhs - rhs) >
          1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs))) {
        throw std::invalid_argument(
            "quotient_eigenvalues: entries violate block-size symmetry");
      }
      if ((bij < 0) != (bji < 0)) {
        throw std::invalid_argument(
            "quotient_eigenvalues: mixed-sign entry pair");
      }
      const double value = std::sqrt(std::abs(bij * bji));
      sym(i, j) = sym(j, i) = bij < 0 ? -value : value;
    }
  }
  return eigenvalues_symmetric(sym, tol);
}

bool is_equitable(const Multigraph& g, const Partition& p) {
  p.validate(g.vertex_count());
  for (const auto& source : p.blocks) {
    for (const auto& target : p.blocks) {
      const EdgeCount expected = edge_total_into(g, source.front(), target);
      for (std::size_t k = 1; k < source.size(); ++k) {
        if (edge_total_into(g, source[k], target) != expected) return false;
      }
    }
  }
  return true;
}

bool check_interlacing(const Spectrum& outer, const Spectrum& inner,
                       double tol) {
  const int n = outer.size();
  const int m = inner.size();
  if (m > n) {
    throw std::invalid_argument(
        "check_interlacing: inner spectrum larger than outer");
  }
  for (int i = 1; i <= m; ++i) {
    if (outer.value(i) < inner.value(i) - tol) return false;
    if (inner.value(i) < outer.value(i + n - m) - tol) return false;
  }
  return true;
}

double cut_quotient_lambda2_two_block(double d, double n1, double n2,
                                      double m1) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument(
        "cut_quotient_lambda2_two_block: block sizes must be at least 1");
  }
  if (m1 < 0) {
    throw std::invalid_argument(
        "cut_quotient_lambda2_two_block: edge count must be non-negative");
  }
  return d - m1 / n1 - m1 / (n2 + 1);
}

double cut_quotient_lambda2_three_block(double d, double n1, double n2,
                                        double m1, double m2) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument(
        "cut_quotient_lambda2_three_block: block sizes must be at least 1");
  }
  if (m1 <= 0 || m2 <= 0) {
    throw std::invalid_argument(
        "cut_quotient_lambda2_three_block: edge counts must be positive");
  }
  const double b = m1 / n1 + m2 / n2 + d;
  const double disc = b * b - 4.0 * m1 * m2 * (n1 + n2 + 1) / (n1 * n2);
  if (disc < 0) {
    throw std::domain_error(
        "cut_quotient_lambda2_three_block: negative discriminant");
  }
  return (2.0 * d - b + std::sqrt(disc)) / 2.0;
}

QuotientMatrix cut_quotient_two_block(double d, int n1, int n2, double m1) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument(
        "cut_quotient_two_block: block sizes must be at least 1");
  }
  QuotientMatrix q;
  q.entries.resize(2, 2);
  q.entries << d - m1 / n1, m1 / n1,
      m1 / (n2 + 1), d - m1 / (n2 + 1);
  q.block_sizes = {n1, n2 + 1};
  return q;
}

QuotientMatrix cut_quotient_three_block(double d, int n1, int n2, double m1,
                                        double m2) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument(
        "cut_quotient_three_block: block sizes must be at least 1");
  }
  QuotientMatrix q;
  q.entries.resize(3, 3);
  q.entries << d - m1 / n1, m1 / n1, 0.0,
      m1, 0.0, m2,
      0.0, m2 / n2, d - m2 / n2;
  q.block_sizes = {n1, 1, n2};
  return q;
}

}  // namespace mgspec
