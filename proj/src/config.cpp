#include "hrw/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hrw {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != trim(s).size() && used != s.size())
      throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: cannot parse number '" + s + "' for " + what);
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (v == std::floor(v) && std::fabs(v) < 9e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    return buf;
  }
  char buf[64];
  // Shortest representation that round-trips the double.
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  for (int prec = 1; prec <= 16; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap out;
  std::istringstream in(text);
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw std::invalid_argument("config: malformed section header at line " +
                                    std::to_string(lineno));
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw std::invalid_argument("config: empty section name at line " + std::to_string(lineno));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " + std::to_string(lineno));
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config: empty key at line " + std::to_string(lineno));
    const std::string full = section.empty() ? key : section + "." + key;
    if (!out.emplace(full, value).second)
      throw std::invalid_argument("config: duplicate key '" + full + "'");
  }
  return out;
}

std::string serialize_config(const ConfigMap& config) {
  std::string out;
  // Global keys first, then sections in map (lexicographic) order.
  for (const auto& [key, value] : config) {
    if (key.find('.') == std::string::npos) out += key + " = " + value + "\n";
  }
  std::string section;
  for (const auto& [key, value] : config) {
    const std::size_t dot = key.find('.');
    if (dot == std::string::npos) continue;
    const std::string sec = key.substr(0, dot);
    if (sec != section) {
      section = sec;
      out += "[" + section + "]\n";
    }
    out += key.substr(dot + 1) + " = " + value + "\n";
  }
  return out;
}

std::optional<std::string> ConfigView::take(const std::string& key) {
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  consumed_.insert(key);
  return it->second;
}

std::string ConfigView::take_required(const std::string& key) {
  auto v = take(key);
  if (!v) throw std::invalid_argument("config: missing required key '" + key + "'");
  return *v;
}

std::string ConfigView::take_or(const std::string& key, const std::string& fallback) {
  auto v = take(key);
  return v ? *v : fallback;
}

double ConfigView::take_double(const std::string& key, std::optional<double> fallback) {
  auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    throw std::invalid_argument("config: missing required key '" + key + "'");
  }
  return to_double(*v, key);
}

std::uint64_t ConfigView::take_u64(const std::string& key, std::optional<std::uint64_t> fallback) {
  auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    throw std::invalid_argument("config: missing required key '" + key + "'");
  }
  const std::string s = trim(*v);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("config: cannot parse integer '" + s + "' for " + key);
  return out;
}

bool ConfigView::has_section(const std::string& section) const {
  const std::string prefix = section + ".";
  const auto it = map_.lower_bound(prefix);
  return it != map_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
}

void ConfigView::finish() const {
  for (const auto& [key, value] : map_) {
    if (!consumed_.count(key))
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

Vec parse_vector(const std::string& text) {
  Vec out;
  for (const std::string& part : split(text, ','))
    out.push_back(to_double(trim(part), "vector entry"));
  if (out.empty()) throw std::invalid_argument("config: empty vector");
  return out;
}

std::string vector_to_text(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_double(v[i]);
  }
  return out;
}

Matrix parse_matrix_text(const std::string& text) {
  const std::vector<std::string> rows = split(text, ';');
  const std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec row = parse_vector(rows[i]);
    if (row.size() != n)
      throw std::invalid_argument("config: matrix must be square (row length mismatch)");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

std::string matrix_to_text(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ",";
      out += format_double(m(i, j));
    }
  }
  return out;
}

std::vector<Cap> parse_caps(const std::string& text) {
  std::vector<Cap> caps;
  for (const std::string& item : split(text, ';')) {
    const std::vector<std::string> fields = split(trim(item), ':');
    if (fields.size() != 3)
      throw std::invalid_argument("config: cap must be 'cx,cy,...:angle:weight'");
    Cap cap;
    cap.center = parse_vector(fields[0]);
    cap.angular_radius = to_double(fields[1], "cap angle");
    cap.weight = to_double(fields[2], "cap weight");
    caps.push_back(std::move(cap));
  }
  return caps;
}

std::string caps_to_text(const std::vector<Cap>& caps) {
  std::string out;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (i) out += ";";
    out += vector_to_text(caps[i].center) + ":" + format_double(caps[i].angular_radius) + ":" +
           format_double(caps[i].weight);
  }
  return out;
}

std::vector<Knot> parse_knots(const std::string& text) {
  std::vector<Knot> knots;
  for (const std::string& item : split(text, ',')) {
    const std::vector<std::string> fields = split(trim(item), ':');
    if (fields.size() != 2) throw std::invalid_argument("config: knot must be 'x:h'");
    knots.push_back({to_double(fields[0], "knot x"), to_double(fields[1], "knot h")});
  }
  return knots;
}

std::string knots_to_text(const std::vector<Knot>& knots) {
  std::string out;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (i) out += ",";
    out += format_double(knots[i].x) + ":" + format_double(knots[i].h);
  }
  return out;
}

EventSet parse_event_set(const std::string& text, const std::optional<EllipsoidMap>& map) {
  const std::string t = trim(text);
  const std::size_t colon = t.find(':');
  const std::string head = colon == std::string::npos ? t : t.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : t.substr(colon + 1);

  if (head == "mapped") {
    if (!map)
      throw std::invalid_argument("event set: 'mapped:' needs a map (give one via [map] or --map)");
    return EventSet::mapped(parse_event_set(rest, std::nullopt), *map);
  }
  if (head == "ball") {
    return EventSet::ball_complement(to_double(rest, "ball radius"));
  }
  if (head == "half") {
    const std::vector<std::string> fields = split(rest, ':');
    if (fields.size() != 2)
      throw std::invalid_argument("event set: half-space must be 'half:v1,v2,...:a'");
    return EventSet::half_space(parse_vector(fields[0]), to_double(fields[1], "half-space level"));
  }
  if (head == "cone") {
    const std::vector<std::string> fields = split(rest, ':');
    if (fields.size() < 3 || (fields.size() - 1) % 2 != 0)
      throw std::invalid_argument("event set: cone must be 'cone:a:center:angle[:center:angle...]'");
    const double a = to_double(fields[0], "cone radius");
    std::vector<GeoCap> caps;
    for (std::size_t i = 1; i + 1 < fields.size(); i += 2)
      caps.push_back({parse_vector(fields[i]), to_double(fields[i + 1], "cone cap angle")});
    return EventSet::cone(a, std::move(caps));
  }
  throw std::invalid_argument("event set: unknown variant '" + head + "'");
}

TailExponent tail_exponent_from_config(ConfigView& view) {
  const std::string family = view.take_required("radius.family");
  if (family == "weibull") {
    return TailExponent::weibull(view.take_double("radius.c", 1.0),
                                 view.take_double("radius.beta"));
  }
  if (family == "lognormal_type") {
    return TailExponent::lognormal_type(view.take_double("radius.p"));
  }
  if (family == "stretched_exp") {
    return TailExponent::stretched_exp(view.take_double("radius.l"),
                                       view.take_double("radius.beta"));
  }
  if (family == "piecewise_concave") {
    std::optional<double> alpha;
    if (auto s = view.take("radius.alpha")) alpha = to_double(*s, "radius.alpha");
    return TailExponent::piecewise_concave(parse_knots(view.take_required("radius.knots")), alpha);
  }
  throw std::invalid_argument("config: unknown radius family '" + family + "'");
}

IncrementSpec increment_spec_from_config(ConfigView& view) {
  TailExponent exponent = tail_exponent_from_config(view);

  const std::size_t d = static_cast<std::size_t>(view.take_u64("direction.d"));
  const std::string kind = view.take_or("direction.kind", "uniform");
  DirectionDistribution direction = DirectionDistribution::uniform(d);
  if (kind == "cap_mixture") {
    const double w0 = view.take_double("direction.w0");
    direction = DirectionDistribution::cap_mixture(
        d, parse_caps(view.take_required("direction.caps")), w0);
  } else if (kind != "uniform") {
    throw std::invalid_argument("config: unknown direction kind '" + kind + "'");
  }

  std::optional<EllipsoidMap> map;
  if (auto text = view.take("map.matrix")) map = EllipsoidMap(parse_matrix_text(*text));

  return IncrementSpec(RadiusDistribution(std::move(exponent)), std::move(direction),
                       std::move(map));
}

std::string estimate_csv_header() {
  return "family,beta_or_p,d,n,a,trials,hits,p_hat,ratio,ci_ratio_low,ci_ratio_high,theory\n";
}

std::string estimate_csv_row(const EstimateRecord& r) {
  std::string row = r.family;
  row += "," + format_double(r.beta_or_p);
  row += "," + std::to_string(r.d);
  row += "," + format_double(r.n);
  row += "," + format_double(r.a);
  row += "," + std::to_string(r.trials);
  row += "," + std::to_string(r.hits);
  row += "," + format_double(r.p_hat);
  row += "," + format_double(r.ratio);
  row += "," + format_double(r.ci_ratio_low);
  row += "," + format_double(r.ci_ratio_high);
  row += "," + format_double(r.theory);
  row += "\n";
  return row;
}

EstimateRecord parse_estimate_csv_row(const std::string& line) {
  std::string t = trim(line);
  const std::vector<std::string> fields = split(t, ',');
  if (fields.size() != 12)
    throw std::invalid_argument("estimate row: expected 12 comma-separated fields");
  EstimateRecord r;
  r.family = fields[0];
  r.beta_or_p = to_double(fields[1], "beta_or_p");
  r.d = static_cast<std::size_t>(to_double(fields[2], "d"));
  r.n = to_double(fields[3], "n");
  r.a = to_double(fields[4], "a");
  r.trials = static_cast<std::uint64_t>(to_double(fields[5], "trials"));
  r.hits = static_cast<std::uint64_t>(to_double(fields[6], "hits"));
  r.p_hat = to_double(fields[7], "p_hat");
  r.ratio = to_double(fields[8], "ratio");
  r.ci_ratio_low = to_double(fields[9], "ci_ratio_low");
  r.ci_ratio_high = to_double(fields[10], "ci_ratio_high");
  r.theory = to_double(fields[11], "theory");
  return r;
}

ConfigMap serialize_increment_spec(const IncrementSpec& spec) {
  ConfigMap out;
  const TailExponent& e = spec.radius.exponent();
  out["radius.family"] = tail_family_name(e.family());
  switch (e.family()) {
    case TailFamily::Weibull:
      out["radius.c"] = format_double(e.param_c());
      out["radius.beta"] = format_double(e.param_beta());
      break;
    case TailFamily::LognormalType:
      out["radius.p"] = format_double(e.param_p());
      break;
    case TailFamily::StretchedExp:
      out["radius.l"] = format_double(e.param_l());
      out["radius.beta"] = format_double(e.param_beta());
      break;
    case TailFamily::PiecewiseConcave:
      out["radius.knots"] = knots_to_text(e.knots());
      if (e.declared_index()) out["radius.alpha"] = format_double(*e.declared_index());
      break;
  }

  out["direction.d"] = std::to_string(spec.direction.dim());
  if (spec.direction.is_uniform()) {
    out["direction.kind"] = "uniform";
  } else {
    out["direction.kind"] = "cap_mixture";
    out["direction.w0"] = format_double(spec.direction.base_weight());
    out["direction.caps"] = caps_to_text(spec.direction.caps());
  }

  if (spec.map) out["map.matrix"] = matrix_to_text(spec.map->matrix());
  return out;
}

}  // namespace hrw
