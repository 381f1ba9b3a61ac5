#include "mgspec/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mgspec/connectivity.hpp"
#include "mgspec/families.hpp"
#include "mgspec/graph_io.hpp"
#include "mgspec/rng.hpp"
#include "mgspec/spectra.hpp"

namespace mgspec {

double edge_threshold(EdgeCount d, int t) {
  if (t < 1 || t > d - 1) {
    throw std::invalid_argument("edge_threshold: requires 1 <= t <= d-1");
  }
  const double dd = static_cast<double>(d);
  if (t == 1) {
    return (dd - 1.0 + std::sqrt(9.0 * dd * dd - 10.0 * dd + 17.0)) / 4.0;
  }
  if (t % 2 == 0) return dd - t;
  return dd - t + 1;
}

GraphSummary summarize(const Multigraph& g) {
  GraphSummary s;
  s.n = g.vertex_count();
  const auto degrees = g.degree_sequence();
  s.min_degree = *std::min_element(degrees.begin(), degrees.end());
  s.max_degree = *std::max_element(degrees.begin(), degrees.end());
  s.max_multiplicity = g.has_any_edge() ? g.max_multiplicity() : 0;
  s.regular = s.min_degree == s.max_degree;
  return s;
}

namespace {

constexpr const char* kIdMu2Kappa = "mu2_le_kappa_mult";
constexpr const char* kIdMu2KappaPrime = "mu2_le_kappa_prime_mult";
constexpr const char* kIdEdgeConnTwo = "lambda2_implies_edge_conn_2";
constexpr const char* kIdEdgeConnAbove = "lambda2_implies_edge_conn_t_plus_1";
constexpr const char* kIdVertexConnTwo = "lambda2_implies_vertex_conn_2";
constexpr const char* kIdAlpha = "alpha_th_eigenvalue_nonnegative";

TheoremVerdict base_verdict(const char* id, const Multigraph& g) {
  TheoremVerdict v;
  v.theorem_id = id;
  v.graph = summarize(g);
  return v;
}

TheoremVerdict& finish(TheoremVerdict& v) {
  v.violated = v.premise_holds && !v.conclusion_holds && !v.exempt;
  return v;
}

TheoremVerdict& exempt(TheoremVerdict& v, const char* reason) {
  v.exempt = true;
  v.exempt_reason = reason;
  return finish(v);
}

/// Shared body of the two mu_2 bounds; factor is kappa or kappa'.
TheoremVerdict mu2_bound_verdict(const char* id, const Multigraph& g,
                                 double factor) {
  TheoremVerdict v = base_verdict(id, g);
  const double mu2 = mu_i(g, 2);
  v.premise_value = mu2;
  v.premise_holds = true;
  v.threshold = factor * static_cast<double>(v.graph.max_multiplicity);
  v.conclusion_value = mu2;
  v.conclusion_holds = mu2 <= v.threshold + kGuardBand;
  v.margin = v.threshold - mu2;
  return finish(v);
}

}  // namespace

TheoremVerdict check_mu2_kappa_bound(const Multigraph& g) {
  TheoremVerdict v = base_verdict(kIdMu2Kappa, g);
  if (g.is_underlying_complete()) return exempt(v, "complete_underlying");
  return mu2_bound_verdict(kIdMu2Kappa, g,
                           static_cast<double>(vertex_connectivity(g)));
}

TheoremVerdict check_mu2_kappa_prime_bound(const Multigraph& g) {
  TheoremVerdict v = base_verdict(kIdMu2KappaPrime, g);
  if (g.is_underlying_complete()) return exempt(v, "complete_underlying");
  return mu2_bound_verdict(kIdMu2KappaPrime, g,
                           static_cast<double>(edge_connectivity(g)));
}

namespace {

/// Common preamble of the regular-graph implications. Returns true when the
/// verdict is already final (an exemption applied).
bool regular_exemptions(TheoremVerdict& v, const Multigraph& g) {
  if (!v.graph.regular) {
    exempt(v, "not_regular");
    return true;
  }
  if (v.graph.max_degree == 0) {
    exempt(v, "edgeless");
    return true;
  }
  if (g.is_underlying_complete()) {
    exempt(v, "complete_underlying");
    return true;
  }
  return false;
}

TheoremVerdict edge_conn_verdict(const char* id, const Multigraph& g, int t,
                                 double threshold) {
  TheoremVerdict v = base_verdict(id, g);
  v.t_param = t;
  if (regular_exemptions(v, g)) return v;
  v.premise_value = lambda_i(g, 2);
  v.threshold = threshold;
  v.premise_holds = v.premise_value < v.threshold - kGuardBand;
  const EdgeCount kappa_prime = edge_connectivity(g);
  v.conclusion_value = static_cast<double>(kappa_prime);
  v.conclusion_holds = kappa_prime >= t + 1;
  if (v.premise_holds) v.margin = v.conclusion_value - (t + 1);
  return finish(v);
}

}  // namespace

TheoremVerdict check_edge_conn_two(const Multigraph& g) {
  TheoremVerdict probe = base_verdict(kIdEdgeConnTwo, g);
  if (regular_exemptions(probe, g)) return probe;
  const EdgeCount d = probe.graph.max_degree;
  const double threshold =
      (static_cast<double>(d) - 1.0 +
       std::sqrt(9.0 * d * d - 10.0 * d + 17.0)) /
      4.0;
  return edge_conn_verdict(kIdEdgeConnTwo, g, 1, threshold);
}

TheoremVerdict check_edge_conn_above(const Multigraph& g, int t) {
  if (t < 2) {
    throw std::invalid_argument("check_edge_conn_above: t must be at least 2");
  }
  TheoremVerdict probe = base_verdict(kIdEdgeConnAbove, g);
  probe.t_param = t;
  if (regular_exemptions(probe, g)) return probe;
  const double d = static_cast<double>(probe.graph.max_degree);
  const double threshold = (t % 2 == 0) ? d - t : d - t + 1;
  return edge_conn_verdict(kIdEdgeConnAbove, g, t, threshold);
}

TheoremVerdict check_vertex_conn_two(const Multigraph& g) {
  TheoremVerdict v = base_verdict(kIdVertexConnTwo, g);
  if (!v.graph.regular) return exempt(v, "not_regular");
  if (v.graph.n == 2) return exempt(v, "two_vertex");
  v.premise_value = lambda_i(g, 2);
  v.threshold = 0.75 * static_cast<double>(v.graph.max_degree);
  v.premise_holds = v.premise_value < v.threshold - kGuardBand;
  const int kappa = vertex_connectivity(g);
  v.conclusion_value = static_cast<double>(kappa);
  v.conclusion_holds = kappa >= 2;
  if (v.premise_holds) v.margin = v.conclusion_value - 2.0;
  return finish(v);
}

TheoremVerdict check_alpha_eigenvalue(const Multigraph& g) {
  TheoremVerdict v = base_verdict(kIdAlpha, g);
  const int alpha = independence_number(g);
  v.premise_value = static_cast<double>(alpha);
  v.premise_holds = true;
  v.threshold = 0.0;
  v.conclusion_value = lambda_i(g, alpha);
  v.conclusion_holds = v.conclusion_value >= -kGuardBand;
  v.margin = v.conclusion_value;
  return finish(v);
}

double c_gap(const Multigraph& g) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("c_gap: graph needs at least 2 vertices");
  }
  return mu_i(g, 2) - static_cast<double>(edge_connectivity(g));
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Fiedler: return "fiedler";
    case Suite::Main: return "main";
    case Suite::Edge: return "edge";
  }
  return "unknown";
}

std::vector<TheoremVerdict> run_suite_on_graph(Suite suite,
                                               const Multigraph& g) {
  std::vector<TheoremVerdict> verdicts;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Fiedler) {
    verdicts.push_back(check_mu2_kappa_bound(g));
  }
  if (all || suite == Suite::Edge) {
    verdicts.push_back(check_mu2_kappa_prime_bound(g));
    verdicts.push_back(check_edge_conn_two(g));
    if (const auto d = g.regular_degree()) {
      for (int t = 2; t <= *d - 1; ++t) {
        verdicts.push_back(check_edge_conn_above(g, t));
      }
    }
  }
  if (all || suite == Suite::Main) {
    verdicts.push_back(check_vertex_conn_two(g));
  }
  if (all && g.vertex_count() <= 32) {
    verdicts.push_back(check_alpha_eigenvalue(g));
  }
  return verdicts;
}

namespace {

void validate_model(const CampaignModel& model) {
  if (model.n_fixed != 0 && model.n_fixed < 2) {
    throw std::invalid_argument("campaign: fixed n must be at least 2");
  }
  if (model.d_fixed != 0 && model.d_fixed < 1) {
    throw std::invalid_argument("campaign: fixed d must be at least 1");
  }
  if (model.n_fixed == 0 && model.n_max < 2) {
    throw std::invalid_argument("campaign: n_max must be at least 2");
  }
  if (model.d_fixed == 0 && model.d_max < 1) {
    throw std::invalid_argument("campaign: d_max must be at least 1");
  }
  if (model.n_fixed != 0 && model.d_fixed != 0 &&
      (static_cast<std::int64_t>(model.n_fixed) * model.d_fixed) % 2 != 0) {
    throw std::invalid_argument("campaign: fixed n*d must be even");
  }
}

}  // namespace

Multigraph sample_trial_graph(const CampaignModel& model, std::uint64_t seed,
                              int trial) {
  validate_model(model);
  SplitMix64 rng(splitmix64_mix(seed ^ static_cast<std::uint64_t>(trial)));
  int n = model.n_fixed != 0
              ? model.n_fixed
              : 2 + static_cast<int>(rng.below(model.n_max - 1));
  int d = model.d_fixed != 0 ? model.d_fixed
                             : 1 + static_cast<int>(rng.below(model.d_max));
  while ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    if (model.d_fixed == 0) {
      d = 1 + static_cast<int>(rng.below(model.d_max));
    } else {
      n = 2 + static_cast<int>(rng.below(model.n_max - 1));
    }
  }
  return random_regular_multigraph(n, d, rng.next());
}

CampaignReport run_campaign(Suite suite, const CampaignModel& model,
                            int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("run_campaign: trials must be at least 1");
  }
  validate_model(model);

  CampaignReport report;
  report.suite = suite;
  report.trials = trials;
  report.seed = seed;
  report.model = model;

  for (int trial = 0; trial < trials; ++trial) {
    const Multigraph g = sample_trial_graph(model, seed, trial);
    for (TheoremVerdict& v : run_suite_on_graph(suite, g)) {
      ++report.checks_run;
      if (v.exempt) {
        ++report.exempt_counts[v.exempt_reason];
      } else if (v.premise_holds) {
        auto [it, inserted] = report.tightest_margin.try_emplace(
            v.theorem_id, v.margin);
        if (!inserted) it->second = std::min(it->second, v.margin);
      }
      if (v.violated) {
        ++report.violation_count;
        if (static_cast<int>(report.violations.size()) <
            CampaignReport::kMaxStoredViolations) {
          report.violations.push_back(std::move(v));
        }
      }
    }
    if (!g.is_underlying_complete()) {
      const double gap = c_gap(g);
      if (!report.best_gap.found || gap > report.best_gap.gap) {
        report.best_gap.found = true;
        report.best_gap.gap = gap;
        report.best_gap.trial = trial;
        report.best_gap.graph_text = render_graph(g);
      }
    }
  }
  return report;
}

BestGap run_gap_explorer(const CampaignModel& model, int trials,
                         std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("run_gap_explorer: trials must be at least 1");
  }
  validate_model(model);
  BestGap best;
  for (int trial = 0; trial < trials; ++trial) {
    const Multigraph g = sample_trial_graph(model, seed, trial);
    if (g.is_underlying_complete()) continue;
    const double gap = c_gap(g);
    if (!best.found || gap > best.gap) {
      best.found = true;
      best.gap = gap;
      best.trial = trial;
      best.graph_text = render_graph(g);
    }
  }
  return best;
}

}  // namespace mgspec
