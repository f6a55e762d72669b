#include "swipt/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace swipt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void Settings::set(std::string key, std::string value) {
  entries.emplace_back(std::move(key), std::move(value));
}

const std::string* Settings::find(const std::string& key) const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->first == key) return &it->second;
  }
  return nullptr;
}

void Settings::merge(const Settings& later) {
  entries.insert(entries.end(), later.entries.begin(), later.entries.end());
}

std::pair<std::string, std::string> parse_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + text + "'");
  std::string key = trim(text.substr(0, eq));
  std::string value = trim(text.substr(eq + 1));
  if (key.empty()) throw std::invalid_argument("empty key in '" + text + "'");
  return {std::move(key), std::move(value)};
}

Settings parse_settings(std::istream& in) {
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      auto [k, v] = parse_assignment(line);
      s.set(std::move(k), std::move(v));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return s;
}

Settings read_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_settings(in);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("key '" + key + "': '" + value + "' is not a number");
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("key '" + key + "': '" + value + "' is not an integer");
  }
  return out;
}

const std::vector<std::string>& sweep_keys() {
  static const std::vector<std::string> keys = {
      "variable", "grid",     "modes",         "methods", "mc_samples",
      "seed",     "coupling", "normalization", "xi_mode", "workers"};
  return keys;
}

void apply_settings(SystemParams& p, const Settings& s) {
  std::vector<double> db_noise;
  for (const auto& [key, value] : s.entries) {
    const auto num = [&] { return parse_double(key, value); };
    const auto integer = [&] { return static_cast<int>(parse_int(key, value)); };
    if (std::find(sweep_keys().begin(), sweep_keys().end(), key) != sweep_keys().end()) continue;
    if (key == "pp1") p.pp1 = num();
    else if (key == "pp2") p.pp2 = num();
    else if (key == "na") p.na = integer();
    else if (key == "nb") p.nb = integer();
    else if (key == "d1") p.d1 = num();
    else if (key == "d2") p.d2 = num();
    else if (key == "d3") p.d3 = num();
    else if (key == "d4") p.d4 = num();
    else if (key == "d5") p.d5 = num();
    else if (key == "l") p.l = num();
    else if (key == "m") p.m = num();
    else if (key == "eta") p.eta = num();
    else if (key == "rho") p.rho = num();
    else if (key == "alpha") p.alpha = num();
    else if (key == "sigma2") p.sigma2 = num();
    else if (key == "r_pu") p.r_pu = num();
    else if (key == "r_su") p.r_su = num();
    else if (key == "m_k") p.m_k = integer();
    else if (key == "t") p.t = num();
    else if (key == "pp1_dbm") p.pp1 = dbm_to_watts(num());
    else if (key == "pp2_dbm") p.pp2 = dbm_to_watts(num());
    else if (key == "power_dbm") p.pp1 = p.pp2 = dbm_to_watts(num());
    else if (key == "sigma2_dbm") p.sigma2 = dbm_to_watts(num());
    else if (key == "power_db_noise") db_noise.push_back(num());
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  // Relative powers are resolved last so they see the final noise level.
  if (!db_noise.empty()) p.pp1 = p.pp2 = db_over_noise_to_watts(db_noise.back(), p.sigma2);
}

}  // namespace swipt
