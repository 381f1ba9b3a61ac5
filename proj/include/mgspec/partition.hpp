#pragma once

#include <Eigen/Core>

#include <vector>

#include "mgspec/multigraph.hpp"
#include "mgspec/spectra.hpp"

namespace mgspec {

/// Vertex partition into non-empty disjoint blocks covering 0..n-1.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }

  /// Throws std::invalid_argument unless the blocks are non-empty, disjoint,
  /// and cover exactly the vertex range of an n-vertex graph.
  void validate(int n) const;

  static Partition single_block(int n);
  static Partition singletons(int n);
};

/// s x s matrix of block-averaged edge counts: entry (i, j) is the average
/// number of edge endpoints a vertex of block i sends into block j,
/// multiplicities counted. Satisfies b(i,j) * |V_i| = b(j,i) * |V_j|.
struct QuotientMatrix {
  Eigen::MatrixXd entries;
  std::vector<int> block_sizes;

  int order() const { return static_cast<int>(entries.rows()); }
};

QuotientMatrix quotient_matrix(const Multigraph& g, const Partition& p);

/// All eigenvalues of the quotient matrix, real by construction: the matrix
/// is similar to a symmetric one under the diagonal scaling by square roots
/// of block sizes, so the symmetric entry is sqrt(b(i,j) * b(j,i)).
Spectrum quotient_eigenvalues(const QuotientMatrix& q,
                              double tol = kDefaultSolveTol);

/// True iff every vertex of block i sends exactly the same multiplicity-
/// counted edge total into block j, for all i, j. Checked with integer
/// arithmetic only.
bool is_equitable(const Multigraph& g, const Partition& p);

/// Two-sided Cauchy interlacing between a spectrum of size n and a contained
/// spectrum of size m <= n: outer_i >= inner_i - tol and
/// inner_i >= outer_{i+n-m} - tol for every i.
bool check_interlacing(const Spectrum& outer, const Spectrum& inner,
                       double tol = 1e-8);

/// Second eigenvalue of the two-block quotient that arises when deleting a
/// cut vertex of a d-regular graph leaves components of sizes n1 and n2 and
/// the cut vertex sends m1 edges into the first: d - m1/n1 - m1/(n2+1).
double cut_quotient_lambda2_two_block(double d, double n1, double n2,
                                      double m1);

/// Second eigenvalue of the matching three-block quotient
/// {first component, cut vertex, second component}:
/// (2d - b + sqrt(b^2 - 4*m1*m2*(n1+n2+1)/(n1*n2))) / 2
/// with b = m1/n1 + m2/n2 + d.
double cut_quotient_lambda2_three_block(double d, double n1, double n2,
                                        double m1, double m2);

/// The explicit quotient matrices behind the two closed forms above.
QuotientMatrix cut_quotient_two_block(double d, int n1, int n2, double m1);
QuotientMatrix cut_quotient_three_block(double d, int n1, int n2, double m1,
                                        double m2);

}  // namespace mgspec
