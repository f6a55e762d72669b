#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "swipt/params.hpp"

namespace swipt {

/// Ordered key=value pairs from a config file or --set flags. Later entries
/// override earlier ones.
struct Settings {
  std::vector<std::pair<std::string, std::string>> entries;

  void set(std::string key, std::string value);
  /// Last value recorded for key, or nullptr.
  const std::string* find(const std::string& key) const;
  void merge(const Settings& later);
};

/// One key=value per line; '#' starts a comment; blank lines ignored.
/// Throws std::invalid_argument with the line number on malformed input.
Settings parse_settings(std::istream& in);
Settings read_settings_file(const std::string& path);
/// Parses "key=value".
std::pair<std::string, std::string> parse_assignment(const std::string& text);

/// Applies every SystemParams key in `s` to `p`. Field names are accepted
/// as-is (linear units), plus pp1_dbm, pp2_dbm, power_dbm (both PUs),
/// sigma2_dbm and power_db_noise (both PUs, dB over sigma2). Keys listed in
/// `sweep_keys()` are skipped; anything else throws std::invalid_argument.
void apply_settings(SystemParams& p, const Settings& s);

const std::vector<std::string>& sweep_keys();

double parse_double(const std::string& key, const std::string& value);
long long parse_int(const std::string& key, const std::string& value);

}  // namespace swipt
