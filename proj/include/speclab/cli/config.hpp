#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace speclab::cli {

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key-value text with one [section] per command.  Lookups are recorded;
// after a command has consumed its parameters, unknown keys in its section
// are a configuration error.
class Config {
public:
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text, const std::string& origin = "<text>");

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const;
  std::uint64_t get_seed(const std::string& section, std::uint64_t fallback) const;
  std::vector<double> get_double_list(const std::string& section, const std::string& key,
                                      const std::vector<double>& fallback) const;
  std::vector<long long> get_int_list(const std::string& section, const std::string& key,
                                      const std::vector<long long>& fallback) const;

  // Throws ConfigError if the section holds keys never asked for.
  void reject_unknown_keys(const std::string& section) const;

private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
  mutable std::set<std::string> touched_;  // "section/key"
  std::string origin_;
};

}  // namespace speclab::cli
