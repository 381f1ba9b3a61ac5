#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mgspec/connectivity.hpp"
#include "mgspec/multigraph.hpp"
#include "mgspec/partition.hpp"
#include "mgspec/theorems.hpp"

namespace mgspec {

/// Minimal JSON document builder. Objects keep insertion order and reals are
/// rendered with 12 significant digits, so identical inputs serialize to
/// byte-identical text.
class Json {
 public:
  static Json null();
  static Json boolean(bool value);
  static Json integer(std::int64_t value);
  static Json real(double value);
  static Json str(std::string value);
  static Json array();
  static Json object();

  Json& push(Json element);                      // array append
  Json& set(const std::string& key, Json value); // object append

  std::string dump() const;  // two-space indentation, trailing newline

 private:
  enum class Type { Null, Bool, Int, Real, Str, Array, Object };

  Json() = default;
  void write(std::string& out, int depth) const;

  Type type_ = Type::Null;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Json> elements_;
  std::vector<std::pair<std::string, Json>> members_;
};

/// Fixed-precision rendering used for every real in reports: %.12g with
/// negative zero normalized to zero.
std::string format_real(double value);

Json spectrum_report(const Multigraph& g, bool laplacian);
Json connectivity_report_json(const Multigraph& g);
Json quotient_report(const Multigraph& g, const Partition& p);
Json verdict_json(const TheoremVerdict& v);
Json campaign_report_json(const CampaignReport& report);
Json explore_report_json(const BestGap& best, int trials, std::uint64_t seed);

}  // namespace mgspec
