#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdl {

// Line-oriented configuration: [section] headers over key = value
// lines; # starts a comment.
class config_file {
public:
  static config_file parse(const std::string& text);
  static config_file load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  std::int64_t get_int(const std::string& section,
                       const std::string& key) const;
  std::int64_t get_int_or(const std::string& section, const std::string& key,
                          std::int64_t fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  std::vector<std::uint64_t> get_uint_list(const std::string& section,
                                           const std::string& key) const;

  const std::map<std::string, std::map<std::string, std::string>>&
  sections() const {
    return sections_;
  }

private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

} // namespace mdl
