#ifndef HRW_CONFIG_HPP
#define HRW_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrw/event_set.hpp"
#include "hrw/walk.hpp"

namespace hrw {

// Flat key-value configuration with [section] headers. Keys are stored as
// "section.key" ("key" for the global section); duplicates and malformed
// lines are rejected so a parse/serialize round trip is lossless.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text);
std::string serialize_config(const ConfigMap& config);

// Typed, consumption-tracking view over a ConfigMap. Every key must be taken
// by some reader; finish() rejects leftovers, which is how unknown keys are
// surfaced to the user.
class ConfigView {
 public:
  explicit ConfigView(ConfigMap map) : map_(std::move(map)) {}

  std::optional<std::string> take(const std::string& key);
  std::string take_required(const std::string& key);
  std::string take_or(const std::string& key, const std::string& fallback);
  double take_double(const std::string& key, std::optional<double> fallback = std::nullopt);
  std::uint64_t take_u64(const std::string& key, std::optional<std::uint64_t> fallback = std::nullopt);
  bool has(const std::string& key) const { return map_.count(key) > 0; }
  bool has_section(const std::string& section) const;

  void finish() const;  // throws on unconsumed keys

 private:
  ConfigMap map_;
  std::set<std::string> consumed_;
};

// Text forms of the structured inputs.
Vec parse_vector(const std::string& text);                       // "1,0.5"
std::string vector_to_text(const Vec& v);
Matrix parse_matrix_text(const std::string& text);               // "1,0;0,2" row major
std::string matrix_to_text(const Matrix& m);
std::vector<Cap> parse_caps(const std::string& text);            // "cx,cy:angle:weight;..."
std::string caps_to_text(const std::vector<Cap>& caps);
std::vector<Knot> parse_knots(const std::string& text);          // "x:h,x:h,..."
std::string knots_to_text(const std::vector<Knot>& knots);

// Event set text: "ball:a", "cone:a:cx,cy:angle[:cx,cy:angle...]",
// "half:v1,v2,...:a", "mapped:<inner>" (the map comes from the [map]
// section or the --map flag).
EventSet parse_event_set(const std::string& text, const std::optional<EllipsoidMap>& map);

// [radius] + [direction] + optional [map] sections -> increment law, and
// back. The round trip preserves every parameter.
TailExponent tail_exponent_from_config(ConfigView& view);
IncrementSpec increment_spec_from_config(ConfigView& view);
ConfigMap serialize_increment_spec(const IncrementSpec& spec);

std::string format_double(double v);  // shortest round-trippable decimal form

// One CSV row per estimation experiment; `theory` carries the predicted
// limit (-1 for norm/projection exceedances, minus the rate infimum for set
// probabilities). Undefined ratios are written as nan and parse back as such.
struct EstimateRecord {
  std::string family;
  double beta_or_p = 0.0;
  std::size_t d = 0;
  double n = 0.0;
  double a = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double p_hat = 0.0;
  double ratio = 0.0;
  double ci_ratio_low = 0.0;
  double ci_ratio_high = 0.0;
  double theory = 0.0;
};

std::string estimate_csv_header();
std::string estimate_csv_row(const EstimateRecord& record);
EstimateRecord parse_estimate_csv_row(const std::string& line);

}  // namespace hrw

#endif  // HRW_CONFIG_HPP
