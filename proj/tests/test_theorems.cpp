#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mgspec/connectivity.hpp"
#include "mgspec/families.hpp"
#include "mgspec/graph_io.hpp"
#include "mgspec/report.hpp"
#include "mgspec/spectra.hpp"
#include "mgspec/theorems.hpp"
#include "test_util.hpp"

using mgspec::CampaignModel;
using mgspec::CampaignReport;
using mgspec::EdgeCount;
using mgspec::Multigraph;
using mgspec::Suite;
using mgspec::TheoremVerdict;
using test_util::close;

namespace {

Multigraph complete_graph(int n, EdgeCount mult = 1) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_multiplicity(u, v, mult);
  }
  return g;
}

Multigraph two_k4() {
  Multigraph g(8);
  for (int base : {0, 4}) {
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) {
        g.set_multiplicity(base + u, base + v, 1);
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("edge threshold branches") {
  CHECK(mgspec::edge_threshold(10, 4) == 6.0);
  CHECK(mgspec::edge_threshold(10, 3) == 8.0);
  CHECK(mgspec::edge_threshold(4, 1) == 3.5);
  CHECK(close(mgspec::edge_threshold(5, 1), (4.0 + std::sqrt(192.0)) / 4.0));
  CHECK_THROWS_AS(mgspec::edge_threshold(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(mgspec::edge_threshold(10, 10), std::invalid_argument);
}

TEST_CASE("edge threshold decreases along each parity class") {
  for (EdgeCount d = 4; d <= 30; ++d) {
    for (int t = 1; t + 2 <= d - 1; ++t) {
      CHECK(mgspec::edge_threshold(d, t + 2) < mgspec::edge_threshold(d, t));
    }
  }
}

TEST_CASE("mu2 vs kappa bound on fixtures") {
  const TheoremVerdict sharp = mgspec::check_mu2_kappa_bound(mgspec::build_h(12, 3));
  CHECK_FALSE(sharp.violated);
  CHECK(sharp.conclusion_holds);
  CHECK(close(sharp.premise_value, 12.0));
  CHECK(close(sharp.threshold, 12.0));
  CHECK(std::abs(sharp.margin) < 1e-8);

  const TheoremVerdict exempted = mgspec::check_mu2_kappa_bound(complete_graph(4));
  CHECK(exempted.exempt);
  CHECK(exempted.exempt_reason == "complete_underlying");
  CHECK_FALSE(exempted.violated);

  const Multigraph cubic = mgspec::random_regular_multigraph(10, 3, 51);
  const TheoremVerdict random_verdict = mgspec::check_mu2_kappa_bound(cubic);
  CHECK_FALSE(random_verdict.violated);
}

TEST_CASE("mu2 vs kappa-prime bound on fixtures") {
  const TheoremVerdict h = mgspec::check_mu2_kappa_prime_bound(mgspec::build_h(12, 3));
  CHECK_FALSE(h.violated);
  CHECK(h.conclusion_holds);

  const TheoremVerdict f = mgspec::check_mu2_kappa_prime_bound(mgspec::build_f(5));
  CHECK_FALSE(f.violated);
  CHECK(close(f.premise_value, (15.0 - std::sqrt(33.0)) / 2.0));
  CHECK(close(f.threshold, 12.0));  // kappa' = 4, max multiplicity = 3

  const TheoremVerdict exempted =
      mgspec::check_mu2_kappa_prime_bound(complete_graph(2, 5));
  CHECK(exempted.exempt);
}

TEST_CASE("lambda2 below the t=1 threshold forces a second edge") {
  const TheoremVerdict h1 = mgspec::check_edge_conn_two(mgspec::build_h1(4));
  CHECK(h1.premise_holds);  // lambda_2 = 3 < 3.5
  CHECK(close(h1.premise_value, 3.0));
  CHECK(close(h1.threshold, 3.5));
  CHECK(h1.conclusion_holds);  // kappa' = 2
  CHECK(h1.conclusion_value == 2.0);
  CHECK_FALSE(h1.violated);

  const TheoremVerdict disconnected = mgspec::check_edge_conn_two(two_k4());
  CHECK_FALSE(disconnected.exempt);
  CHECK_FALSE(disconnected.premise_holds);  // lambda_2 = d
  CHECK_FALSE(disconnected.violated);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Multigraph g = mgspec::random_regular_multigraph(8, 4, seed);
    CHECK_FALSE(mgspec::check_edge_conn_two(g).violated);
  }
}

TEST_CASE("lambda2 below d-t thresholds force higher edge connectivity") {
  const TheoremVerdict h = mgspec::check_edge_conn_above(mgspec::build_h(12, 3), 2);
  CHECK(h.premise_holds);       // lambda_2 = 0 < 10
  CHECK(h.conclusion_holds);    // kappa' = 12 >= 3
  CHECK(h.conclusion_value == 12.0);
  CHECK_FALSE(h.violated);

  // Premise false when lambda_2 sits above the threshold.
  const TheoremVerdict far = mgspec::check_edge_conn_above(two_k4(), 2);
  CHECK_FALSE(far.premise_holds);
  CHECK_FALSE(far.violated);

  CHECK_THROWS_AS(mgspec::check_edge_conn_above(mgspec::build_h(12, 3), 1),
                  std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Multigraph g = mgspec::random_regular_multigraph(9, 6, seed ^ 0xabcdULL);
    for (int t : {2, 3}) {
      CHECK_FALSE(mgspec::check_edge_conn_above(g, t).violated);
    }
  }
}

TEST_CASE("lambda2 below 3d/4 forces two-connectedness") {
  // The h1 family sits exactly on the threshold: the guard band classifies
  // the premise as false, which is the sharpness statement.
  const TheoremVerdict h1 = mgspec::check_vertex_conn_two(mgspec::build_h1(4));
  CHECK_FALSE(h1.premise_holds);
  CHECK(close(h1.premise_value, h1.threshold));
  CHECK_FALSE(h1.violated);

  const TheoremVerdict pair = mgspec::check_vertex_conn_two(complete_graph(2, 6));
  CHECK(pair.exempt);
  CHECK(pair.exempt_reason == "two_vertex");

  const TheoremVerdict irregular = mgspec::check_vertex_conn_two(mgspec::build_f(5));
  CHECK(irregular.exempt);
  CHECK(irregular.exempt_reason == "not_regular");

  mgspec::SplitMix64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(10));
    int d = 1 + static_cast<int>(rng.below(8));
    if ((n * d) % 2 != 0) ++d;
    const Multigraph g = mgspec::random_regular_multigraph(n, d, rng.next());
    CHECK_FALSE(mgspec::check_vertex_conn_two(g).violated);
  }
}

TEST_CASE("alpha-th eigenvalue is non-negative") {
  const TheoremVerdict h = mgspec::check_alpha_eigenvalue(mgspec::build_h(12, 3));
  CHECK(h.premise_value == 2.0);  // alpha = {x, y}
  CHECK(h.conclusion_holds);
  CHECK(std::abs(h.conclusion_value) < 1e-8);  // lambda_2 = 0, equality case

  const TheoremVerdict kn = mgspec::check_alpha_eigenvalue(complete_graph(5));
  CHECK(kn.premise_value == 1.0);
  CHECK(close(kn.conclusion_value, 4.0));
  CHECK_FALSE(kn.violated);

  mgspec::SplitMix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Multigraph g = test_util::random_multigraph(rng, n);
    CHECK_FALSE(mgspec::check_alpha_eigenvalue(g).violated);
  }
}

TEST_CASE("c-gap values") {
  CHECK(close(mgspec::c_gap(mgspec::build_f(5)),
              (15.0 - std::sqrt(33.0)) / 2.0 - 4.0));
  CHECK_THROWS_AS(mgspec::c_gap(Multigraph(1)), std::invalid_argument);

  double best = 0.0;
  for (EdgeCount d = 3; d <= 101; d += 2) {
    const double gap = mgspec::c_gap(mgspec::build_f(d));
    CHECK(gap > 0.0);
    best = std::max(best, gap);
    const double dd = static_cast<double>(d);
    CHECK(close(gap, (dd + 2.0 - std::sqrt(dd * dd + 8.0)) / 2.0, 1e-7));
  }
  CHECK(best > 0.9);  // the supremum over odd d <= 101 approaches 1
}

TEST_CASE("campaign finds no violations") {
  CampaignModel model;
  model.n_fixed = 8;
  model.d_fixed = 4;
  const CampaignReport report =
      mgspec::run_campaign(Suite::All, model, 100, 42);
  CHECK(report.passed());
  CHECK(report.violation_count == 0);
  CHECK(report.checks_run > 0);
}

TEST_CASE("campaign with one trial reproduces direct checker calls") {
  CampaignModel model;
  const std::uint64_t seed = 99;
  const CampaignReport report = mgspec::run_campaign(Suite::All, model, 1, seed);
  const Multigraph g = mgspec::sample_trial_graph(model, seed, 0);
  const auto direct = mgspec::run_suite_on_graph(Suite::All, g);
  CHECK(report.checks_run == static_cast<long>(direct.size()));
  long exempt_direct = 0;
  for (const TheoremVerdict& v : direct) {
    CHECK_FALSE(v.violated);
    if (v.exempt) ++exempt_direct;
  }
  long exempt_report = 0;
  for (const auto& [reason, count] : report.exempt_counts) {
    exempt_report += count;
  }
  CHECK(exempt_report == exempt_direct);
}

TEST_CASE("campaign reports are deterministic") {
  CampaignModel model;
  const CampaignReport a = mgspec::run_campaign(Suite::Edge, model, 50, 7);
  const CampaignReport b = mgspec::run_campaign(Suite::Edge, model, 50, 7);
  CHECK(mgspec::campaign_report_json(a).dump() ==
        mgspec::campaign_report_json(b).dump());
}

TEST_CASE("campaign rejects invalid models") {
  CampaignModel odd_fixed;
  odd_fixed.n_fixed = 3;
  odd_fixed.d_fixed = 3;
  CHECK_THROWS_AS(mgspec::run_campaign(Suite::All, odd_fixed, 1, 0),
                  std::invalid_argument);
  CampaignModel bad_n;
  bad_n.n_fixed = 1;
  CHECK_THROWS_AS(mgspec::run_campaign(Suite::All, bad_n, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(mgspec::run_campaign(Suite::All, CampaignModel{}, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("family sweep hits every sharpness equality") {
  for (int t = 2; t <= 4; ++t) {
    for (EdgeCount d = t * (t - 1); d <= 36; d += t * (t - 1)) {
      const TheoremVerdict v = mgspec::check_mu2_kappa_bound(mgspec::build_h(d, t));
      CHECK_FALSE(v.violated);
      CHECK(std::abs(v.premise_value - v.threshold) < 1e-8);
    }
  }
  for (EdgeCount d : {4, 8, 12, 16}) {
    CHECK(close(mgspec::lambda_i(mgspec::build_h1(d), 2), 0.75 * d));
  }
}

TEST_CASE("explorer tracks the best observed gap") {
  CampaignModel model;
  const mgspec::BestGap best = mgspec::run_gap_explorer(model, 50, 7);
  CHECK(best.found);
  const CampaignReport report = mgspec::run_campaign(Suite::All, model, 50, 7);
  CHECK(report.best_gap.found);
  CHECK(best.gap == report.best_gap.gap);
  CHECK(best.graph_text == report.best_gap.graph_text);

  // The recorded witness reproduces the recorded gap.
  const Multigraph witness = mgspec::parse_graph(best.graph_text);
  CHECK(close(mgspec::c_gap(witness), best.gap, 1e-12));
}

TEST_CASE("exemption reasons are counted, never silently dropped") {
  CampaignModel tiny;
  tiny.n_fixed = 2;
  tiny.d_fixed = 2;  // every sample is the 2-vertex doubled edge
  const CampaignReport report = mgspec::run_campaign(Suite::All, tiny, 5, 3);
  CHECK(report.passed());
  CHECK(report.exempt_counts.at("complete_underlying") > 0);
  CHECK(report.exempt_counts.at("two_vertex") == 5);
}
