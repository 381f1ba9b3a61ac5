#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mgspec/multigraph.hpp"

namespace mgspec {

inline constexpr double kDefaultSolveTol = 1e-10;
inline constexpr double kGroupingTol = 1e-6;
inline constexpr int kJacobiMaxSweeps = 50;

/// Real eigenvalues of a symmetric matrix, sorted non-increasing.
struct Spectrum {
  std::vector<double> values;           // non-increasing
  double solve_tol = kDefaultSolveTol;  // relative accuracy target of the solve
  double scale = 1.0;                   // max(1, Frobenius norm of the source)

  int size() const { return static_cast<int>(values.size()); }

  /// i-th largest eigenvalue, 1-based.
  double value(int i) const {
    if (i < 1 || i > size()) {
      throw std::out_of_range("Spectrum: eigenvalue index out of range");
    }
    return values[static_cast<std::size_t>(i - 1)];
  }

  double sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }

  /// Eigenvalues merged into (representative, multiplicity) groups. Adjacent
  /// sorted values closer than group_tol * scale fall into the same group;
  /// the representative is the group mean. Affects display only.
  std::vector<std::pair<double, int>> grouped(
      double group_tol = kGroupingTol) const;
};

/// Full spectrum of an exactly symmetric matrix via cyclic Jacobi rotations
/// (row-by-row sweeps). Deterministic for identical input. Iterates until
/// the off-diagonal Frobenius norm drops below rel_tol * max(1, ||M||_F),
/// floored at a small multiple of machine epsilon; throws std::runtime_error
/// if max_sweeps sweeps do not get there.
template <typename Scalar>
std::vector<Scalar> jacobi_eigenvalues(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a, Scalar rel_tol,
    int max_sweeps = kJacobiMaxSweeps) {
  const Eigen::Index n = a.rows();
  if (n < 1 || a.cols() != n) {
    throw std::invalid_argument("jacobi_eigenvalues: matrix must be square");
  }
  if (!(rel_tol > Scalar(0))) {
    throw std::invalid_argument("jacobi_eigenvalues: tolerance must be positive");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) {
        throw std::invalid_argument(
            "jacobi_eigenvalues: matrix must be exactly symmetric");
      }
    }
  }

  const Scalar scale = std::max(Scalar(1), Scalar(a.norm()));
  const Scalar eps_floor =
      Scalar(8) * Scalar(n) * std::numeric_limits<Scalar>::epsilon() * scale;
  const Scalar target = std::max(rel_tol * scale, eps_floor);
  // Rotations below this size cannot push the residual past the target.
  const Scalar thresh = target / (Scalar(2) * Scalar(n));

  auto off_norm = [&]() {
    Scalar off2 = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) off2 += a(i, j) * a(i, j);
    }
    return std::sqrt(Scalar(2) * off2);
  };

  auto collect = [&]() {
    std::vector<Scalar> values(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] = a(i, i);
    }
    std::sort(values.begin(), values.end(), std::greater<Scalar>());
    return values;
  };

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() <= target) return collect();
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (std::abs(apq) <= thresh) continue;
        const Scalar app = a(p, p);
        const Scalar aqq = a(q, q);
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::sqrt(Scalar(1) + theta * theta));
        const Scalar c = Scalar(1) / std::sqrt(Scalar(1) + t * t);
        const Scalar s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar arp = a(r, p);
          const Scalar arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  if (off_norm() <= target) return collect();
  throw std::runtime_error("jacobi_eigenvalues: no convergence within sweep limit");
}

/// Spectrum of an exactly symmetric matrix; each eigenvalue is accurate to
/// tol * max(1, ||M||_F).
Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& m,
                               double tol = kDefaultSolveTol);

/// Entry (i, j) is the multiplicity m(v_i, v_j); the diagonal is zero.
Eigen::MatrixXd adjacency_matrix(const Multigraph& g);

/// Degree diagonal minus the adjacency matrix; every row sums to zero.
Eigen::MatrixXd laplacian_matrix(const Multigraph& g);

Spectrum adjacency_spectrum(const Multigraph& g, double tol = kDefaultSolveTol);
Spectrum laplacian_spectrum(const Multigraph& g, double tol = kDefaultSolveTol);

/// i-th largest adjacency eigenvalue, 1-based.
double lambda_i(const Multigraph& g, int i);

/// i-th smallest Laplacian eigenvalue, 1-based.
double mu_i(const Multigraph& g, int i);

/// Number of adjacency eigenvalues strictly above tol.
int count_positive_eigenvalues(const Multigraph& g, double tol = 1e-8);

}  // namespace mgspec
