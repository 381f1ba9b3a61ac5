#include "mgspec/spectra.hpp"

namespace mgspec {

std::vector<std::pair<double, int>> Spectrum::grouped(double group_tol) const {
  std::vector<std::pair<double, int>> groups;
  const double gap = group_tol * scale;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double acc = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= gap) {
      acc += values[j];
      ++j;
    }
    groups.emplace_back(acc / static_cast<double>(j - i),
                        static_cast<int>(j - i));
    i = j;
  }
  return groups;
}

Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& m, double tol) {
  Spectrum s;
  s.scale = std::max(1.0, m.norm());
  s.solve_tol = tol;
  s.values = jacobi_eigenvalues<double>(m, tol);
  return s;
}

Eigen::MatrixXd adjacency_matrix(const Multigraph& g) {
  return g.multiplicities().cast<double>();
}

Eigen::MatrixXd laplacian_matrix(const Multigraph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd l = -adjacency_matrix(g);
  for (int v = 0; v < n; ++v) {
    l(v, v) = static_cast<double>(g.degree(v));
  }
  return l;
}

Spectrum adjacency_spectrum(const Multigraph& g, double tol) {
  return eigenvalues_symmetric(adjacency_matrix(g), tol);
}

Spectrum laplacian_spectrum(const Multigraph& g, double tol) {
  return eigenvalues_symmetric(laplacian_matrix(g), tol);
}

double lambda_i(const Multigraph& g, int i) {
  return adjacency_spectrum(g).value(i);
}

double mu_i(const Multigraph& g, int i) {
  const Spectrum s = laplacian_spectrum(g);
  if (i < 1 || i > s.size()) {
    throw std::out_of_range("mu_i: eigenvalue index out of range");
  }
  // Spectrum is sorted non-increasing; the i-th smallest sits at the end.
  return s.value(s.size() - i + 1);
}

int count_positive_eigenvalues(const Multigraph& g, double tol) {
  if (!(tol > 0)) {
    throw std::invalid_argument(
        "count_positive_eigenvalues: tolerance must be positive");
  }
  const Spectrum s = adjacency_spectrum(g);
  int count = 0;
  for (double v : s.values) {
    if (v > tol) ++count;
  }
  return count;
}

}  // namespace mgspec
