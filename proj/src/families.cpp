#include "mgspec/families.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mgspec/rng.hpp"

namespace mgspec {

std::vector<double> ExpectedSpectrum::sorted_values() const {
  std::vector<double> values;
  for (const auto& [value, count] : entries) {
    for (int i = 0; i < count; ++i) values.push_back(value);
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

Multigraph build_b1(EdgeCount d) {
  if (d < 4 || d % 4 != 0) {
    throw std::invalid_argument("build_b1: d must be a multiple of 4, d >= 4");
  }
  Multigraph g(3);
  g.set_multiplicity(0, 1, 3 * d / 4);
  g.set_multiplicity(1, 2, d / 4);
  g.set_multiplicity(0, 2, d / 4);
  return g;
}

Multigraph build_h1(EdgeCount d) {
  if (d < 4 || d % 4 != 0) {
    throw std::invalid_argument("build_h1: d must be a multiple of 4, d >= 4");
  }
  Multigraph g(5);
  g.set_multiplicity(0, 1, 3 * d / 4);
  g.set_multiplicity(0, 2, d / 4);
  g.set_multiplicity(1, 2, d / 4);
  g.set_multiplicity(3, 4, 3 * d / 4);
  g.set_multiplicity(2, 3, d / 4);
  g.set_multiplicity(2, 4, d / 4);
  return g;
}

namespace {

void check_ht_parameters(const char* who, EdgeCount d, int t) {
  if (t < 2) {
    throw std::invalid_argument(std::string(who) + ": t must be at least 2");
  }
  const EdgeCount step = static_cast<EdgeCount>(t) * (t - 1);
  if (d < step || d % step != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": d must be a positive multiple of t*(t-1)");
  }
}

}  // namespace

Multigraph build_c(EdgeCount d, int t) {
  check_ht_parameters("build_c", d, t);
  const EdgeCount k = (t - 2) * d / (static_cast<EdgeCount>(t) * (t - 1));
  Multigraph g(t);
  if (k > 0) {
    for (int u = 0; u < t; ++u) {
      for (int v = u + 1; v < t; ++v) g.set_multiplicity(u, v, k);
    }
  }
  return g;
}

Multigraph build_h(EdgeCount d, int t) {
  check_ht_parameters("build_h", d, t);
  const EdgeCount k = (t - 2) * d / (static_cast<EdgeCount>(t) * (t - 1));
  const EdgeCount spoke = d / t;
  Multigraph g(t + 2);
  for (int c = 0; c < t; ++c) {
    g.set_multiplicity(0, 2 + c, spoke);
    g.set_multiplicity(1, 2 + c, spoke);
  }
  if (k > 0) {
    for (int u = 0; u < t; ++u) {
      for (int v = u + 1; v < t; ++v) g.set_multiplicity(2 + u, 2 + v, k);
    }
  }
  return g;
}

ExpectedSpectrum expected_spectrum_h(EdgeCount d, int t) {
  check_ht_parameters("expected_spectrum_h", d, t);
  const double dd = static_cast<double>(d);
  const double core = static_cast<double>((t - 2) * d) /
                      (static_cast<double>(t) * (t - 1));
  ExpectedSpectrum s;
  s.entries = {{dd, 1}, {0.0, 1}, {-2.0 * dd / t, 1}, {-core, t - 1}};
  return s;
}

Multigraph build_f(EdgeCount d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument("build_f: d must be odd, d >= 3");
  }
  Multigraph g(4);
  g.set_multiplicity(0, 1, (d - 1) / 2);
  g.set_multiplicity(1, 2, (d - 1) / 2);
  g.set_multiplicity(2, 3, (d + 1) / 2);
  g.set_multiplicity(0, 3, (d + 1) / 2);
  return g;
}

Multigraph build_g4(EdgeCount d) {
  if (d < 8 || d % 4 != 0) {
    throw std::invalid_argument("build_g4: d must be a multiple of 4, d >= 8");
  }
  Multigraph g(6);
  g.set_multiplicity(0, 1, d / 2 - 2);
  g.set_multiplicity(2, 3, d / 2 - 2);
  g.set_multiplicity(0, 2, 1);
  g.set_multiplicity(0, 3, 1);
  g.set_multiplicity(1, 2, 1);
  g.set_multiplicity(1, 3, 1);
  for (int c = 0; c < 4; ++c) {
    g.set_multiplicity(4, c, d / 4);
    g.set_multiplicity(5, c, d / 4);
  }
  return g;
}

Multigraph cone(const Multigraph& base, EdgeCount m) {
  if (m < 1) {
    throw std::invalid_argument("cone: apex multiplicity must be at least 1");
  }
  const int n = base.vertex_count();
  MultiplicityMatrix mult = MultiplicityMatrix::Zero(n + 1, n + 1);
  mult.topLeftCorner(n, n) = base.multiplicities();
  for (int v = 0; v < n; ++v) {
    mult(n, v) = m;
    mult(v, n) = m;
  }
  return Multigraph(std::move(mult));
}

Multigraph random_regular_multigraph(int n, int d, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument(
        "random_regular_multigraph: needs at least 2 vertices");
  }
  if (d < 0) {
    throw std::invalid_argument("random_regular_multigraph: negative degree");
  }
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw std::invalid_argument("random_regular_multigraph: n*d must be even");
  }
  if (d == 0) return Multigraph(n);

  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  }

  SplitMix64 rng(seed);
  constexpr int kResampleLimit = 10000;
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[rng.below(i + 1)]);
    }
    bool has_loop = false;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        has_loop = true;
        break;
      }
    }
    if (has_loop) continue;
    Multigraph g(n);
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      g.add_edges(stubs[i], stubs[i + 1], 1);
    }
    return g;
  }
  throw std::runtime_error(
      "random_regular_multigraph: resample limit exceeded");
}

}  // namespace mgspec
