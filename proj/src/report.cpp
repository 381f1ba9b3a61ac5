#include "mgspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mgspec/graph_io.hpp"
#include "mgspec/spectra.hpp"

namespace mgspec {

Json Json::null() { return Json(); }

Json Json::boolean(bool value) {
  Json j;
  j.type_ = Type::Bool;
  j.bool_ = value;
  return j;
}

Json Json::integer(std::int64_t value) {
  Json j;
  j.type_ = Type::Int;
  j.int_ = value;
  return j;
}

Json Json::real(double value) {
  Json j;
  j.type_ = Type::Real;
  j.real_ = value;
  return j;
}

Json Json::str(std::string value) {
  Json j;
  j.type_ = Type::Str;
  j.str_ = std::move(value);
  return j;
}

Json Json::array() {
  Json j;
  j.type_ = Type::Array;
  return j;
}

Json Json::object() {
  Json j;
  j.type_ = Type::Object;
  return j;
}

Json& Json::push(Json element) {
  if (type_ != Type::Array) throw std::logic_error("Json: push on non-array");
  elements_.push_back(std::move(element));
  return *this;
}

Json& Json::set(const std::string& key, Json value) {
  if (type_ != Type::Object) throw std::logic_error("Json: set on non-object");
  members_.emplace_back(key, std::move(value));
  return *this;
}

std::string format_real(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("format_real: value must be finite");
  }
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x",
                        static_cast<unsigned>(c));
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

}  // namespace

void Json::write(std::string& out, int depth) const {
  switch (type_) {
    case Type::Null: out += "null"; break;
    case Type::Bool: out += bool_ ? "true" : "false"; break;
    case Type::Int: out += std::to_string(int_); break;
    case Type::Real: out += format_real(real_); break;
    case Type::Str: write_escaped(out, str_); break;
    case Type::Array: {
      if (elements_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        indent(out, depth + 1);
        elements_[i].write(out, depth + 1);
        if (i + 1 < elements_.size()) out += ',';
        out += '\n';
      }
      indent(out, depth);
      out += ']';
      break;
    }
    case Type::Object: {
      if (members_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        indent(out, depth + 1);
        write_escaped(out, members_[i].first);
        out += ": ";
        members_[i].second.write(out, depth + 1);
        if (i + 1 < members_.size()) out += ',';
        out += '\n';
      }
      indent(out, depth);
      out += '}';
      break;
    }
  }
}

std::string Json::dump() const {
  std::string out;
  write(out, 0);
  out += '\n';
  return out;
}

namespace {

Json real_list(const std::vector<double>& values) {
  Json list = Json::array();
  for (double v : values) list.push(Json::real(v));
  return list;
}

Json grouped_json(const Spectrum& spectrum) {
  Json groups = Json::array();
  for (const auto& [value, count] : spectrum.grouped()) {
    Json entry = Json::object();
    entry.set("value", Json::real(value));
    entry.set("multiplicity", Json::integer(count));
    groups.push(std::move(entry));
  }
  return groups;
}

}  // namespace

Json spectrum_report(const Multigraph& g, bool laplacian) {
  const Spectrum spectrum =
      laplacian ? laplacian_spectrum(g) : adjacency_spectrum(g);
  Json report = Json::object();
  report.set("report", Json::str("spectrum"));
  report.set("matrix", Json::str(laplacian ? "laplacian" : "adjacency"));
  report.set("n", Json::integer(g.vertex_count()));
  report.set("eigenvalues", real_list(spectrum.values));
  report.set("grouped", grouped_json(spectrum));
  if (laplacian) {
    report.set("mu_1", Json::real(spectrum.value(spectrum.size())));
    if (spectrum.size() >= 2) {
      report.set("mu_2", Json::real(spectrum.value(spectrum.size() - 1)));
    }
  } else {
    report.set("lambda_1", Json::real(spectrum.value(1)));
    if (spectrum.size() >= 2) {
      report.set("lambda_2", Json::real(spectrum.value(2)));
    }
  }
  return report;
}

Json connectivity_report_json(const Multigraph& g) {
  const ConnectivityReport r = connectivity_report(g);
  const auto degrees = g.degree_sequence();
  Json report = Json::object();
  report.set("report", Json::str("connectivity"));
  report.set("n", Json::integer(g.vertex_count()));
  report.set("kappa", Json::integer(r.kappa));
  report.set("kappa_prime", Json::integer(r.kappa_prime));
  Json vertex_cut = Json::array();
  for (int v : r.vertex_cut_witness) vertex_cut.push(Json::integer(v));
  report.set("vertex_cut", std::move(vertex_cut));
  Json edge_cut = Json::array();
  for (const EdgeCutEntry& e : r.edge_cut_witness) {
    Json entry = Json::object();
    entry.set("u", Json::integer(e.u));
    entry.set("v", Json::integer(e.v));
    entry.set("multiplicity", Json::integer(e.multiplicity));
    edge_cut.push(std::move(entry));
  }
  report.set("edge_cut", std::move(edge_cut));
  report.set("min_degree",
             Json::integer(*std::min_element(degrees.begin(), degrees.end())));
  return report;
}

Json quotient_report(const Multigraph& g, const Partition& p) {
  const QuotientMatrix q = quotient_matrix(g, p);
  const Spectrum quotient_spectrum = quotient_eigenvalues(q);
  const Spectrum full_spectrum = adjacency_spectrum(g);
  Json report = Json::object();
  report.set("report", Json::str("quotient"));
  report.set("n", Json::integer(g.vertex_count()));
  Json blocks = Json::array();
  for (const auto& block : p.blocks) {
    Json b = Json::array();
    for (int v : block) b.push(Json::integer(v));
    blocks.push(std::move(b));
  }
  report.set("blocks", std::move(blocks));
  Json sizes = Json::array();
  for (int s : q.block_sizes) sizes.push(Json::integer(s));
  report.set("block_sizes", std::move(sizes));
  Json matrix = Json::array();
  for (int i = 0; i < q.order(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < q.order(); ++j) row.push(Json::real(q.entries(i, j)));
    matrix.push(std::move(row));
  }
  report.set("quotient_matrix", std::move(matrix));
  report.set("eigenvalues", real_list(quotient_spectrum.values));
  report.set("equitable", Json::boolean(is_equitable(g, p)));
  report.set("interlaces",
             Json::boolean(check_interlacing(full_spectrum, quotient_spectrum)));
  return report;
}

Json verdict_json(const TheoremVerdict& v) {
  Json j = Json::object();
  j.set("theorem", Json::str(v.theorem_id));
  if (v.t_param > 0) j.set("t", Json::integer(v.t_param));
  Json graph = Json::object();
  graph.set("n", Json::integer(v.graph.n));
  graph.set("min_degree", Json::integer(v.graph.min_degree));
  graph.set("max_degree", Json::integer(v.graph.max_degree));
  graph.set("max_multiplicity", Json::integer(v.graph.max_multiplicity));
  j.set("graph", std::move(graph));
  j.set("premise_value", Json::real(v.premise_value));
  j.set("threshold", Json::real(v.threshold));
  j.set("premise_holds", Json::boolean(v.premise_holds));
  j.set("conclusion_value", Json::real(v.conclusion_value));
  j.set("conclusion_holds", Json::boolean(v.conclusion_holds));
  j.set("exempt", Json::boolean(v.exempt));
  if (v.exempt) j.set("exempt_reason", Json::str(v.exempt_reason));
  j.set("violated", Json::boolean(v.violated));
  return j;
}

namespace {

Json best_gap_json(const BestGap& best) {
  if (!best.found) return Json::null();
  Json j = Json::object();
  j.set("value", Json::real(best.gap));
  j.set("trial", Json::integer(best.trial));
  j.set("graph", Json::str(best.graph_text));
  return j;
}

}  // namespace

Json campaign_report_json(const CampaignReport& report) {
  Json j = Json::object();
  j.set("report", Json::str("verify"));
  j.set("suite", Json::str(suite_name(report.suite)));
  j.set("trials", Json::integer(report.trials));
  j.set("seed", Json::integer(static_cast<std::int64_t>(report.seed)));
  Json model = Json::object();
  if (report.model.n_fixed != 0) {
    model.set("n", Json::integer(report.model.n_fixed));
  } else {
    model.set("n_max", Json::integer(report.model.n_max));
  }
  if (report.model.d_fixed != 0) {
    model.set("d", Json::integer(report.model.d_fixed));
  } else {
    model.set("d_max", Json::integer(report.model.d_max));
  }
  j.set("model", std::move(model));
  j.set("checks_run", Json::integer(report.checks_run));
  j.set("violation_count", Json::integer(report.violation_count));
  Json violations = Json::array();
  for (const TheoremVerdict& v : report.violations) {
    violations.push(verdict_json(v));
  }
  j.set("violations", std::move(violations));
  Json exempts = Json::object();
  for (const auto& [reason, count] : report.exempt_counts) {
    exempts.set(reason, Json::integer(count));
  }
  j.set("exempt_counts", std::move(exempts));
  Json margins = Json::object();
  for (const auto& [theorem, margin] : report.tightest_margin) {
    margins.set(theorem, Json::real(margin));
  }
  j.set("tightest_margins", std::move(margins));
  j.set("best_gap", best_gap_json(report.best_gap));
  j.set("passed", Json::boolean(report.passed()));
  return j;
}

Json explore_report_json(const BestGap& best, int trials, std::uint64_t seed) {
  Json j = Json::object();
  j.set("report", Json::str("explore"));
  j.set("question", Json::str("c-gap"));
  j.set("trials", Json::integer(trials));
  j.set("seed", Json::integer(static_cast<std::int64_t>(seed)));
  j.set("best_gap", best_gap_json(best));
  return j;
}

}  // namespace mgspec
