#include "mdl/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mdl {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  auto b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  return s.substr(a, b - a + 1);
}

} // namespace

config_file config_file::parse(const std::string& text) {
  config_file cf;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      cf.sections_[section];
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " is not key = value");
    cf.sections_[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return cf;
}

config_file config_file::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool config_file::has(const std::string& section,
                      const std::string& key) const {
  auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key);
}

std::string config_file::get(const std::string& section,
                             const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end() || !s->second.count(key))
    throw std::runtime_error("config: missing [" + section + "] " + key);
  return s->second.at(key);
}

std::string config_file::get_or(const std::string& section,
                                const std::string& key,
                                const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

std::int64_t config_file::get_int(const std::string& section,
                                  const std::string& key) const {
  return std::stoll(get(section, key));
}

std::int64_t config_file::get_int_or(const std::string& section,
                                     const std::string& key,
                                     std::int64_t fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

double config_file::get_double(const std::string& section,
                               const std::string& key) const {
  return std::stod(get(section, key));
}

double config_file::get_double_or(const std::string& section,
                                  const std::string& key,
                                  double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

std::vector<std::uint64_t>
config_file::get_uint_list(const std::string& section,
                           const std::string& key) const {
  std::vector<std::uint64_t> out;
  std::istringstream in(get(section, key));
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(std::stoull(trim(item)));
  return out;
}

} // namespace mdl
