//! \file config.cpp
//! \brief INI-style configuration and scheme-spec parsing

#include "mapweno/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace mapweno {

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError(key + ": not a number: '" + v + "'");
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  const char* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError(key + ": not an integer: '" + v + "'");
  return out;
}

// Ordered key/value extraction shared by the file and scheme-spec grammars.
std::vector<std::pair<std::string, std::string>> tokenize(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::string prefix;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto cut = line.find_first_of("#;");
    if (cut != std::string::npos) line.erase(cut);
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError("line " + std::to_string(lineno) +
                                                ": unterminated section header");
      prefix = trim(body.substr(1, body.size() - 2));
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(body.substr(0, eq));
    const std::string val = trim(body.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    if (!prefix.empty()) key = prefix + "." + key;
    kv.emplace_back(std::move(key), val);
  }
  return kv;
}

void apply_scheme_param(Scheme& s, const std::string& key, const std::string& val) {
  const std::string p = key.substr(key.find('.') + 1);
  if (p == "k")
    s.params.k = parse_int(key, val);
  else if (p == "A")
    s.params.A = parse_double(key, val);
  else if (p == "ms")
    s.params.ms = parse_double(key, val);
  else if (p == "Q")
    s.params.Q = parse_double(key, val);
  else if (p == "cfs")
    s.params.cfs = parse_double(key, val);
  else if (p == "C")
    s.params.C = parse_double(key, val);
  else
    throw ConfigError("unknown scheme parameter: " + key);
}

}  // namespace

RunConfig parse_config_text(std::string_view text) {
  RunConfig cfg;
  std::string scheme_name = "js";
  std::vector<std::pair<std::string, std::string>> scheme_params;

  for (const auto& [key, val] : tokenize(text)) {
    if (key == "problem")
      cfg.problem = val;
    else if (key == "scheme")
      scheme_name = val;
    else if (key.rfind("scheme.", 0) == 0)
      scheme_params.emplace_back(key, val);
    else if (key == "grid.n")
      cfg.n = parse_int(key, val);
    else if (key == "grid.nx")
      cfg.nx = parse_int(key, val);
    else if (key == "grid.ny")
      cfg.ny = parse_int(key, val);
    else if (key == "t_final")
      cfg.t_final = parse_double(key, val);
    else if (key == "cfl")
      cfg.cfl = val == "scaled" ? -1.0 : parse_double(key, val);
    else if (key == "out.field")
      cfg.out_field = val;
    else if (key == "out.report")
      cfg.out_report = val;
    else if (key == "grids") {
      cfg.grids.clear();
      std::istringstream gs(val);
      std::string tok;
      while (std::getline(gs, tok, ',')) cfg.grids.push_back(parse_int(key, trim(tok)));
    } else
      throw ConfigError("unknown key: " + key);
  }

  try {
    cfg.scheme = make_scheme(scheme_name);
    for (const auto& [key, val] : scheme_params) apply_scheme_param(cfg.scheme, key, val);
    validate(cfg.scheme.kind, cfg.scheme.params);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  if (std::adjacent_find(cfg.grids.begin(), cfg.grids.end(), std::greater_equal<>{}) !=
      cfg.grids.end())
    throw ConfigError("grids must be strictly increasing");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_config_text(body.str());
}

Scheme parse_scheme_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  Scheme s;
  try {
    s = make_scheme(trim(spec.substr(0, colon)));
    if (colon != std::string_view::npos) {
      std::istringstream ps{std::string(spec.substr(colon + 1))};
      std::string tok;
      while (std::getline(ps, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ConfigError("scheme spec: expected key=value");
        apply_scheme_param(s, "scheme." + trim(tok.substr(0, eq)), trim(tok.substr(eq + 1)));
      }
    }
    validate(s.kind, s.params);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

}  // namespace mapweno
