#include "speclab/cli/config.hpp"

#include <fstream>
#include <sstream>

namespace speclab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": key outside any section");
    if (!cfg.sections_[section].emplace(key, value).second)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
  touched_.insert(section + "/" + key);
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  touched_.insert(section + "/" + key);
  const auto s = sections_.find(section);
  if (s == sections_.end() || !s->second.count(key))
    throw ConfigError(origin_ + ": missing required key '" + key + "' in [" + section + "]");
  return s->second.at(key);
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const std::string v = get_string(section, key);
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not a number");
  }
  if (trim(v.substr(pos)).size())
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] has trailing text");
  return out;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
  const std::string v = get_string(section, key);
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not an integer");
  }
  if (trim(v.substr(pos)).size())
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] has trailing text");
  return out;
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t Config::get_seed(const std::string& section, std::uint64_t fallback) const {
  if (!has(section, "seed")) return fallback;
  const std::string v = get_string(section, "seed");
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key 'seed' in [" + section + "] is not an unsigned integer");
  }
}

std::vector<double> Config::get_double_list(const std::string& section, const std::string& key,
                                            const std::vector<double>& fallback) const {
  if (!has(section, key)) return fallback;
  std::vector<double> out;
  std::string v = get_string(section, key);
  for (auto& ch : v)
    if (ch == ',') ch = ' ';
  std::istringstream ss(v);
  double x;
  while (ss >> x) out.push_back(x);
  if (!ss.eof())
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not a number list");
  return out;
}

std::vector<long long> Config::get_int_list(const std::string& section, const std::string& key,
                                            const std::vector<long long>& fallback) const {
  if (!has(section, key)) return fallback;
  std::vector<long long> out;
  std::string v = get_string(section, key);
  for (auto& ch : v)
    if (ch == ',') ch = ' ';
  std::istringstream ss(v);
  long long x;
  while (ss >> x) out.push_back(x);
  if (!ss.eof())
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not an integer list");
  return out;
}

void Config::reject_unknown_keys(const std::string& section) const {
  const auto s = sections_.find(section);
  if (s == sections_.end()) return;
  for (const auto& [key, value] : s->second) {
    (void)value;
    if (!touched_.count(section + "/" + key))
      throw ConfigError(origin_ + ": unknown key '" + key + "' in [" + section + "]");
  }
}

}  // namespace speclab::cli
