#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mgspec/multigraph.hpp"

namespace mgspec {

/// Closed-form expected spectrum: (value, multiplicity) pairs whose
/// multiplicities sum to the order of the generated graph.
struct ExpectedSpectrum {
  std::vector<std::pair<double, int>> entries;

  /// Expanded values sorted non-increasing.
  std::vector<double> sorted_values() const;
};

/// Three vertices 0, 1, 2 with m(0,1) = 3d/4 and m(1,2) = m(0,2) = d/4,
/// the unique 3-vertex multigraph with degrees (d, d, d/2).
/// Requires d >= 4 divisible by 4.
Multigraph build_b1(EdgeCount d);

/// Two copies of the b1 graph glued at their degree-d/2 vertices. Vertices
/// 0,1 and 3,4 are the degree-d pairs, vertex 2 is the glue vertex. The
/// result is d-regular with a single cut vertex. Requires d >= 4 divisible
/// by 4.
Multigraph build_h1(EdgeCount d);

/// Complete graph on t vertices with every pair at multiplicity
/// (t-2)d/(t(t-1)); edgeless for t = 2. Every degree is (t-2)d/t.
/// Requires t >= 2 and d a positive multiple of t(t-1).
Multigraph build_c(EdgeCount d, int t);

/// The c-family core plus two mutually non-adjacent vertices x = 0 and
/// y = 1, each joined to every core vertex (indices 2..t+1) with
/// multiplicity d/t. d-regular with vertex connectivity t and maximum
/// multiplicity d/t. Requires t >= 2 and d a positive multiple of t(t-1).
Multigraph build_h(EdgeCount d, int t);

/// Closed-form adjacency spectrum of build_h(d, t): the two eigenvalues
/// d and -2d/t lifted from the two-block quotient {x,y} | core, the
/// eigenvalue 0 of the vector antisymmetric on {x,y}, and
/// -(t-2)d/(t(t-1)) with multiplicity t-1 from the core-internal
/// directions.
ExpectedSpectrum expected_spectrum_h(EdgeCount d, int t);

/// Four-cycle 0-1-2-3-0 with m(0,1) = m(1,2) = (d-1)/2 and
/// m(2,3) = m(3,0) = (d+1)/2; degrees (d, d-1, d, d+1). Requires odd
/// d >= 3.
Multigraph build_f(EdgeCount d);

/// Complete graph on core vertices 0..3 with the two disjoint pairs {0,1}
/// and {2,3} raised to multiplicity d/2-2, plus two mutually non-adjacent
/// vertices x = 4 and y = 5 joined to every core vertex with multiplicity
/// d/4. d-regular. Requires d >= 8 divisible by 4.
Multigraph build_g4(EdgeCount d);

/// New graph on n+1 vertices: the base plus an apex (index n) joined to
/// every base vertex with multiplicity m >= 1.
Multigraph cone(const Multigraph& base, EdgeCount m);

/// Configuration-model d-regular multigraph: d stubs per vertex are paired
/// by a seeded Fisher-Yates shuffle of the stub list, and the whole pairing
/// is resampled whenever any pair would form a loop. Deterministic given
/// the seed (splitmix64 stream). Requires n >= 2, d >= 0, n*d even; throws
/// std::runtime_error if 10000 pairings all contain loops.
Multigraph random_regular_multigraph(int n, int d, std::uint64_t seed);

}  // namespace mgspec
