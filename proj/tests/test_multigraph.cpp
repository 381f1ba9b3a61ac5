#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "mgspec/families.hpp"
#include "mgspec/multigraph.hpp"
#include "mgspec/rng.hpp"
#include "test_util.hpp"

using mgspec::EdgeCount;
using mgspec::Multigraph;

namespace {

Multigraph two_triangles() {
  Multigraph g(6);
  g.set_multiplicity(0, 1, 1);
  g.set_multiplicity(1, 2, 1);
  g.set_multiplicity(0, 2, 1);
  g.set_multiplicity(3, 4, 1);
  g.set_multiplicity(4, 5, 1);
  g.set_multiplicity(3, 5, 1);
  return g;
}

}  // namespace

TEST_CASE("degree counts edge endpoints with multiplicity") {
  CHECK(mgspec::build_h1(4).degree(2) == 4);  // glue vertex of the h1 family
  CHECK(Multigraph(1).degree(0) == 0);
  CHECK(mgspec::build_b1(4).degree(2) == 2);
  CHECK_THROWS_AS(Multigraph(3).degree(3), std::out_of_range);
  CHECK_THROWS_AS(Multigraph(3).degree(-1), std::out_of_range);
}

TEST_CASE("regular_degree detects regularity") {
  CHECK(mgspec::build_h(12, 3).regular_degree() == 12);
  CHECK_FALSE(mgspec::build_f(5).regular_degree().has_value());
  CHECK(mgspec::build_f(5).degree_sequence() ==
        std::vector<EdgeCount>{5, 4, 5, 6});
  CHECK(Multigraph(1).regular_degree() == 0);
}

TEST_CASE("max multiplicity over present pairs") {
  CHECK(mgspec::build_h(12, 3).max_multiplicity() == 4);
  CHECK(two_triangles().max_multiplicity() == 1);
  CHECK(mgspec::build_b1(4).max_multiplicity() == 3);
  CHECK_THROWS_AS(Multigraph(2).max_multiplicity(), std::domain_error);
}

TEST_CASE("underlying simple graph collapses multiplicities") {
  const Multigraph b1 = mgspec::build_b1(4);
  const Multigraph simple = b1.underlying_simple_graph();
  CHECK(simple.is_underlying_complete());
  CHECK(simple.max_multiplicity() == 1);
  CHECK(simple.underlying_simple_graph() == simple);

  const Multigraph h = mgspec::build_h(12, 3).underlying_simple_graph();
  // Every pair present except x-y.
  CHECK_FALSE(h.has_edge(0, 1));
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (u == 0 && v == 1) continue;
      CHECK(h.multiplicity(u, v) == 1);
    }
  }
}

TEST_CASE("underlying completeness") {
  CHECK(mgspec::build_b1(4).is_underlying_complete());
  CHECK_FALSE(mgspec::build_h(12, 3).is_underlying_complete());
  CHECK(Multigraph(1).is_underlying_complete());
}

TEST_CASE("connectivity by reachability") {
  CHECK(mgspec::build_h1(4).is_connected());
  CHECK_FALSE(two_triangles().is_connected());
  CHECK(Multigraph(1).is_connected());
}

TEST_CASE("construction rejects invalid multiplicity matrices") {
  mgspec::MultiplicityMatrix loop = mgspec::MultiplicityMatrix::Zero(2, 2);
  loop(0, 0) = 1;
  CHECK_THROWS_AS(Multigraph(std::move(loop)), std::invalid_argument);

  mgspec::MultiplicityMatrix asymmetric = mgspec::MultiplicityMatrix::Zero(2, 2);
  asymmetric(0, 1) = 2;
  CHECK_THROWS_AS(Multigraph(std::move(asymmetric)), std::invalid_argument);

  mgspec::MultiplicityMatrix negative = mgspec::MultiplicityMatrix::Zero(2, 2);
  negative(0, 1) = -1;
  negative(1, 0) = -1;
  CHECK_THROWS_AS(Multigraph(std::move(negative)), std::invalid_argument);

  CHECK_THROWS_AS(Multigraph(0), std::invalid_argument);
}

TEST_CASE("loops and overflow are rejected on mutation") {
  Multigraph g(3);
  CHECK_THROWS_AS(g.set_multiplicity(1, 1, 2), std::invalid_argument);
  g.set_multiplicity(0, 1, std::numeric_limits<EdgeCount>::max() - 1);
  CHECK_THROWS_AS(g.add_edges(0, 1, 2), std::overflow_error);
}

TEST_CASE("handshake identity on random multigraphs") {
  mgspec::SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const Multigraph g = test_util::random_multigraph(rng, n);
    EdgeCount degree_sum = 0;
    for (EdgeCount d : g.degree_sequence()) degree_sum += d;
    CHECK(degree_sum == 2 * g.total_edge_multiplicity());
    CHECK(degree_sum % 2 == 0);
  }
}

TEST_CASE("underlying graph preserves adjacency and is idempotent") {
  mgspec::SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const Multigraph g = test_util::random_multigraph(rng, n);
    const Multigraph simple = g.underlying_simple_graph();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        CHECK(g.has_edge(u, v) == simple.has_edge(u, v));
      }
    }
    CHECK(simple.underlying_simple_graph() == simple);
    if (g.has_any_edge()) CHECK(simple.max_multiplicity() == 1);
  }
}

TEST_CASE("induced subgraph keeps multiplicities") {
  const Multigraph h1 = mgspec::build_h1(8);
  const Multigraph copy = induced_subgraph(h1, {0, 1, 2});
  CHECK(copy == mgspec::build_b1(8));
  CHECK_THROWS_AS(induced_subgraph(h1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(h1, {9}), std::out_of_range);
  CHECK_THROWS_AS(induced_subgraph(h1, {}), std::invalid_argument);
}
