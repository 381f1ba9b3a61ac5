#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mgspec/multigraph.hpp"

namespace mgspec {

/// Guard band around strict inequalities: values within 1e-8 of a strict
/// threshold count as not satisfying it, so sharp configurations that sit
/// exactly on a threshold classify as premise-false.
inline constexpr double kGuardBand = 1e-8;

/// Sharp lambda_2 threshold below which a d-regular multigraph has edge
/// connectivity greater than t:
///   t = 1        -> (d - 1 + sqrt(9d^2 - 10d + 17)) / 4
///   t even       -> d - t
///   t odd, t >= 3 -> d - t + 1
/// Requires 1 <= t <= d-1.
double edge_threshold(EdgeCount d, int t);

struct GraphSummary {
  int n = 0;
  EdgeCount min_degree = 0;
  EdgeCount max_degree = 0;
  EdgeCount max_multiplicity = 0;  // 0 for edgeless graphs
  bool regular = false;
};

GraphSummary summarize(const Multigraph& g);

/// Uniform premise/conclusion evaluation record for one bound or implication
/// on one graph. margin is the remaining slack toward a violation (+inf when
/// the premise fails or the graph is exempt); violated is true exactly when
/// the premise holds, the conclusion fails, and no stated exception applies.
struct TheoremVerdict {
  std::string theorem_id;
  GraphSummary graph;
  int t_param = 0;
  double premise_value = 0.0;
  double threshold = 0.0;
  bool premise_holds = false;
  double conclusion_value = 0.0;
  bool conclusion_holds = false;
  bool exempt = false;
  std::string exempt_reason;
  bool violated = false;
  double margin = std::numeric_limits<double>::infinity();
};

/// mu_2 <= kappa * max multiplicity, for graphs whose underlying graph is
/// not complete (complete underlying graphs are exempt).
TheoremVerdict check_mu2_kappa_bound(const Multigraph& g);

/// mu_2 <= kappa' * max multiplicity, same exemption.
TheoremVerdict check_mu2_kappa_prime_bound(const Multigraph& g);

/// For d-regular graphs: lambda_2 below edge_threshold(d, 1) forces edge
/// connectivity at least 2. Exempt: irregular, complete underlying, edgeless.
TheoremVerdict check_edge_conn_two(const Multigraph& g);

/// For d-regular graphs and t >= 2: lambda_2 below d-t (even t) or d-t+1
/// (odd t) forces edge connectivity at least t+1. Same exemptions.
TheoremVerdict check_edge_conn_above(const Multigraph& g, int t);

/// For d-regular graphs: lambda_2 strictly below 3d/4 forces vertex
/// connectivity at least 2. Exempt: irregular graphs and the 2-vertex graph.
TheoremVerdict check_vertex_conn_two(const Multigraph& g);

/// The alpha-th largest adjacency eigenvalue is non-negative, where alpha is
/// the independence number of the underlying simple graph. Requires n <= 32.
TheoremVerdict check_alpha_eigenvalue(const Multigraph& g);

/// mu_2 - kappa'. Requires n >= 2.
double c_gap(const Multigraph& g);

enum class Suite { All, Fiedler, Main, Edge };

std::string suite_name(Suite suite);

/// Configuration-model sampling parameters for campaigns. A zero n_fixed or
/// d_fixed means the value is drawn per trial from [2, n_max] or [1, d_max].
struct CampaignModel {
  int n_fixed = 0;
  int d_fixed = 0;
  int n_max = 12;
  int d_max = 10;
};

struct BestGap {
  bool found = false;
  double gap = -std::numeric_limits<double>::infinity();
  int trial = -1;
  std::string graph_text;
};

struct CampaignReport {
  Suite suite = Suite::All;
  int trials = 0;
  std::uint64_t seed = 0;
  CampaignModel model;
  long checks_run = 0;
  long violation_count = 0;
  std::vector<TheoremVerdict> violations;  // first kMaxStoredViolations only
  std::map<std::string, double> tightest_margin;
  std::map<std::string, long> exempt_counts;
  /// Largest mu_2 - kappa' seen over sampled graphs whose underlying graph
  /// is not complete (complete underlying graphs make the gap trivially
  /// unbounded).
  BestGap best_gap;

  bool passed() const { return violation_count == 0; }

  static constexpr int kMaxStoredViolations = 50;
};

/// All checkers of the suite on one graph, in a fixed order.
std::vector<TheoremVerdict> run_suite_on_graph(Suite suite,
                                               const Multigraph& g);

/// The graph examined by trial index `trial` of a campaign: the per-trial
/// seed is splitmix64_mix(seed ^ trial), which seeds the stream that draws
/// n, then d (redrawn until n*d is even), then the configuration-model seed.
Multigraph sample_trial_graph(const CampaignModel& model, std::uint64_t seed,
                              int trial);

/// Runs the suite over `trials` sampled graphs and aggregates verdicts.
/// Pure function of (suite, model, trials, seed); trial order never affects
/// the report.
CampaignReport run_campaign(Suite suite, const CampaignModel& model,
                            int trials, std::uint64_t seed);

/// Samples like run_campaign but only tracks the largest mu_2 - kappa'.
BestGap run_gap_explorer(const CampaignModel& model, int trials,
                         std::uint64_t seed);

}  // namespace mgspec
