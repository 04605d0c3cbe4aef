#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chiralpol {

/// Raised when the coupled light-matter problem has no stable (real, positive)
/// normal-mode solution. `value` carries the offending quantity: a negative
/// radicand, a negative Omega_-^2, or a non-positive stability factor.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double value, std::optional<std::uint64_t> critical_n = {})
      : std::runtime_error(what), value_(value), critical_n_(critical_n) {}

  double value() const noexcept { return value_; }
  // Smallest emitter count at which the instability first appears, when known.
  std::optional<std::uint64_t> critical_n() const noexcept { return critical_n_; }

 private:
  double value_;
  std::optional<std::uint64_t> critical_n_;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what), key_(key) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace chiralpol
