// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#include "eepc/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "eepc/csv.hpp"
#include "eepc/errors.hpp"

namespace eepc {

EfficiencyModel ModelSpec::build() const {
  switch (kind) {
    case EfficiencyKind::Outage:
      return EfficiencyModel::outage(a);
    case EfficiencyKind::Empirical:
      return EfficiencyModel::empirical(m);
    case EfficiencyKind::Shannon:
      return EfficiencyModel::shannon();
  }
  throw config_error("unknown model kind");
}

std::string ModelSpec::describe() const {
  switch (kind) {
    case EfficiencyKind::Outage:
      return "outage a=" + format_double(a);
    case EfficiencyKind::Empirical:
      return "empirical M=" + std::to_string(m);
    case EfficiencyKind::Shannon:
      return "shannon";
  }
  return "?";
}

LinkParams ScenarioConfig::link1(double lam) const {
  return LinkParams{R1, T, sigma2, lam, energy_budget};
}

LinkParams ScenarioConfig::link2(double lam) const {
  return LinkParams{R2, T, sigma2, lam, std::nullopt};
}

McConfig ScenarioConfig::mc() const {
  McConfig m;
  m.samples = samples;
  m.seed = seed;
  m.workers = workers;
  m.mode = quadrature ? McConfig::Mode::Quadrature : McConfig::Mode::MonteCarlo;
  return m;
}

void ScenarioConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw config_error("invalid scenario: " + what);
  };
  require(T > 0, "link.T must be > 0");
  require(R1 > 0 && R2 > 0, "link rates must be > 0");
  require(sigma2 > 0, "link.sigma2 must be > 0");
  require(g11_mean > 0 && g22_mean > 0 && g12_mean > 0 && g21_mean > 0,
          "gain means must be > 0");
  require(lambda_min > 0 && lambda_min < lambda_max, "sweep bounds must satisfy 0 < min < max");
  require(sweep_points >= 2, "sweep.points must be >= 2");
  require(lambda >= 0, "point.lambda must be >= 0");
  require(lambda2_ratio >= 0, "point.lambda2_ratio must be >= 0");
  require(!energy_budget || *energy_budget > 0, "point.energy_budget must be > 0");
  require(samples >= 1000, "mc.samples must be >= 1000");
  require(workers >= 0, "mc.workers must be >= 0");
  require(profile_g11_lo > 0 && profile_g11_lo < profile_g11_hi, "profile g11 bounds");
  require(profile_g22_lo > 0 && profile_g22_lo < profile_g22_hi, "profile g22 bounds");
  require(profile_g11_points >= 2 && profile_g22_points >= 2, "profile points must be >= 2");
  if (model1.kind == EfficiencyKind::Outage) require(model1.a > 0, "model1.a must be > 0");
  if (model2.kind == EfficiencyKind::Outage) require(model2.a > 0, "model2.a must be > 0");
  if (model1.kind == EfficiencyKind::Empirical) require(model1.m >= 1, "model1.M must be >= 1");
  if (model2.kind == EfficiencyKind::Empirical) require(model2.m >= 1, "model2.M must be >= 1");
}

std::string ScenarioConfig::echo() const {
  std::string s;
  auto kv = [&s](const std::string& k, const std::string& v) { s += k + " = " + v + "\n"; };
  kv("model1", model1.describe());
  kv("model2", model2.describe());
  kv("link.T", format_double(T));
  kv("link.R1", format_double(R1));
  kv("link.R2", format_double(R2));
  kv("link.sigma2", format_double(sigma2));
  kv("gains.g11_mean", format_double(g11_mean));
  kv("gains.g22_mean", format_double(g22_mean));
  kv("gains.g12_mean", format_double(g12_mean));
  kv("gains.g21_mean", format_double(g21_mean));
  kv("sweep.lambda_min", format_double(lambda_min));
  kv("sweep.lambda_max", format_double(lambda_max));
  kv("sweep.points", std::to_string(sweep_points));
  kv("point.lambda", format_double(lambda));
  kv("point.lambda2_ratio", format_double(lambda2_ratio));
  if (energy_budget) kv("point.energy_budget", format_double(*energy_budget));
  kv("mc.samples", std::to_string(samples));
  kv("mc.seed", format_u64(seed));
  kv("mc.quadrature", quadrature ? "true" : "false");
  kv("profile.g11_lo", format_double(profile_g11_lo));
  kv("profile.g11_hi", format_double(profile_g11_hi));
  kv("profile.g11_points", std::to_string(profile_g11_points));
  kv("profile.g22_lo", format_double(profile_g22_lo));
  kv("profile.g22_hi", format_double(profile_g22_hi));
  kv("profile.g22_points", std::to_string(profile_g22_points));
  return s;
}

namespace {

struct RawValue {
  std::string text;
  int line = 0;
  bool consumed = false;
};

using RawMap = std::map<std::string, RawValue>;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

RawMap tokenize(const std::string& text) {
  RawMap map;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip comments, respecting double-quoted strings.
    bool in_quote = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_quote = !in_quote;
      if (line[i] == '#' && !in_quote) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw config_error("unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw config_error("empty section name", line_no);
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("expected 'key = value' or '[section]'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("empty key", line_no);
    if (value.empty()) throw config_error("empty value for key '" + key + "'", line_no);
    const std::string full = section.empty() ? key : section + "." + key;
    if (map.count(full)) throw config_error("duplicate key '" + full + "'", line_no);
    map[full] = RawValue{value, line_no, false};
  }
  return map;
}

RawValue* find(RawMap& map, const std::string& key) {
  auto it = map.find(key);
  if (it == map.end()) return nullptr;
  it->second.consumed = true;
  return &it->second;
}

std::string unquote(const RawValue& v, const std::string& key) {
  std::string s = v.text;
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  if (!s.empty() && (s.front() == '"' || s.back() == '"'))
    throw config_error("unbalanced quotes for key '" + key + "'", v.line);
  return s;
}

void get_string(RawMap& map, const std::string& key, std::string& out) {
  if (RawValue* v = find(map, key)) out = unquote(*v, key);
}

void get_double(RawMap& map, const std::string& key, double& out) {
  if (RawValue* v = find(map, key)) {
    char* end = nullptr;
    const double parsed = std::strtod(v->text.c_str(), &end);
    if (end == v->text.c_str() || *end != '\0')
      throw config_error("expected a number for key '" + key + "'", v->line);
    out = parsed;
  }
}

void get_opt_double(RawMap& map, const std::string& key, std::optional<double>& out) {
  double tmp = 0;
  if (RawValue* v = find(map, key)) {
    char* end = nullptr;
    tmp = std::strtod(v->text.c_str(), &end);
    if (end == v->text.c_str() || *end != '\0')
      throw config_error("expected a number for key '" + key + "'", v->line);
    out = tmp;
  }
}

void get_int(RawMap& map, const std::string& key, int& out) {
  if (RawValue* v = find(map, key)) {
    char* end = nullptr;
    const long parsed = std::strtol(v->text.c_str(), &end, 10);
    if (end == v->text.c_str() || *end != '\0')
      throw config_error("expected an integer for key '" + key + "'", v->line);
    out = static_cast<int>(parsed);
  }
}

void get_size(RawMap& map, const std::string& key, std::size_t& out) {
  if (RawValue* v = find(map, key)) {
    char* end = nullptr;
    const double parsed = std::strtod(v->text.c_str(), &end);
    if (end == v->text.c_str() || *end != '\0' || parsed < 0)
      throw config_error("expected a non-negative count for key '" + key + "'", v->line);
    out = static_cast<std::size_t>(parsed);
  }
}

void get_u64(RawMap& map, const std::string& key, std::uint64_t& out) {
  if (RawValue* v = find(map, key)) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v->text.c_str(), &end, 10);
    if (end == v->text.c_str() || *end != '\0')
      throw config_error("expected an unsigned integer for key '" + key + "'", v->line);
    out = parsed;
  }
}

void get_bool(RawMap& map, const std::string& key, bool& out) {
  if (RawValue* v = find(map, key)) {
    if (v->text == "true")
      out = true;
    else if (v->text == "false")
      out = false;
    else
      throw config_error("expected true/false for key '" + key + "'", v->line);
  }
}

void get_model(RawMap& map, const std::string& section, ModelSpec& out) {
  std::string kind;
  get_string(map, section + ".kind", kind);
  if (!kind.empty()) {
    if (kind == "outage")
      out.kind = EfficiencyKind::Outage;
    else if (kind == "empirical")
      out.kind = EfficiencyKind::Empirical;
    else if (kind == "shannon")
      out.kind = EfficiencyKind::Shannon;
    else
      throw config_error("unknown model kind '" + kind + "' in [" + section + "]");
  }
  get_double(map, section + ".a", out.a);
  get_int(map, section + ".M", out.m);
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& text) {
  RawMap map = tokenize(text);
  ScenarioConfig cfg;

  get_model(map, "model1", cfg.model1);
  get_model(map, "model2", cfg.model2);
  get_double(map, "link.T", cfg.T);
  get_double(map, "link.R1", cfg.R1);
  get_double(map, "link.R2", cfg.R2);
  get_double(map, "link.sigma2", cfg.sigma2);
  get_double(map, "gains.g11_mean", cfg.g11_mean);
  get_double(map, "gains.g22_mean", cfg.g22_mean);
  get_double(map, "gains.g12_mean", cfg.g12_mean);
  get_double(map, "gains.g21_mean", cfg.g21_mean);
  get_double(map, "sweep.lambda_min", cfg.lambda_min);
  get_double(map, "sweep.lambda_max", cfg.lambda_max);
  get_int(map, "sweep.points", cfg.sweep_points);
  get_double(map, "point.lambda", cfg.lambda);
  get_double(map, "point.lambda2_ratio", cfg.lambda2_ratio);
  get_opt_double(map, "point.energy_budget", cfg.energy_budget);
  get_size(map, "mc.samples", cfg.samples);
  get_u64(map, "mc.seed", cfg.seed);
  get_int(map, "mc.workers", cfg.workers);
  get_bool(map, "mc.quadrature", cfg.quadrature);
  get_double(map, "profile.g11_lo", cfg.profile_g11_lo);
  get_double(map, "profile.g11_hi", cfg.profile_g11_hi);
  get_int(map, "profile.g11_points", cfg.profile_g11_points);
  get_double(map, "profile.g22_lo", cfg.profile_g22_lo);
  get_double(map, "profile.g22_hi", cfg.profile_g22_hi);
  get_int(map, "profile.g22_points", cfg.profile_g22_points);
  get_string(map, "output.path", cfg.output_path);

  for (const auto& [key, raw] : map)
    if (!raw.consumed) throw config_error("unknown key '" + key + "'", raw.line);

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

}  // namespace eepc
