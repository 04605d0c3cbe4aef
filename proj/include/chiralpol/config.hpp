#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace chiralpol {

/// Flat `key = value` configuration. Lines starting with '#' and blank lines
/// are ignored; lists are comma separated. Every lookup records the key as
/// used so that unknown keys can be rejected and the resolved configuration
/// can be echoed.
class Config {
 public:
  static Config parse(std::string_view text, std::string_view origin = "<string>");
  static Config from_file(const std::string& path);

  /// Applies "key=value" (command-line override).
  void set_assignment(std::string_view assignment);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  /// Keys present in the file or overrides that no lookup asked for.
  std::vector<std::string> unused_keys() const;
  /// Throws ConfigError naming the first unused key.
  void reject_unused() const;

  /// Resolved key/value pairs (explicit values and looked-up defaults), sorted by key.
  const std::map<std::string, std::string>& resolved() const noexcept { return resolved_; }

 private:
  std::map<std::string, std::string> values_;
  mutable std::map<std::string, std::string> resolved_;
  mutable std::set<std::string> used_;
};

std::vector<double> parse_number_list(const std::string& key, const std::string& text);

}  // namespace chiralpol
