#include "mdl/dataset.hpp"

#include <map>
#include <sstream>

#include "mdl/errors.hpp"

namespace mdl {

void dataset::validate_consistent() const {
  std::map<std::string, bool> seen;
  for (const auto& s : samples) {
    auto key = s.x.to_string();
    auto [it, inserted] = seen.emplace(key, s.y);
    if (!inserted && it->second != s.y)
      throw inconsistent_dataset_error(
          "dataset: contradictory labels for input " + key);
  }
}

dataset_mask make_dataset_mask(const dataset& d, std::uint32_t n) {
  if (n > 6)
    throw std::invalid_argument("dataset_mask: n must be <= 6");
  dataset_mask m;
  for (const auto& s : d.samples) {
    if (s.x.size() != n)
      throw std::invalid_argument("dataset_mask: sample length mismatch");
    std::uint64_t row = truth_table::row_of_input(s.x);
    m.sampled |= std::uint64_t{1} << row;
    if (s.y)
      m.labels |= std::uint64_t{1} << row;
    else
      m.labels &= ~(std::uint64_t{1} << row);
  }
  return m;
}

std::string dataset_to_text(const dataset& d) {
  std::ostringstream out;
  for (const auto& s : d.samples)
    out << s.x.to_string() << "," << (s.y ? 1 : 0) << "\n";
  return out.str();
}

dataset dataset_from_text(std::istream& in) {
  dataset d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("dataset: missing comma in line: " + line);
    sample s;
    s.x = bits(std::string_view(line).substr(0, comma));
    std::string label = line.substr(comma + 1);
    if (label == "0")
      s.y = false;
    else if (label == "1")
      s.y = true;
    else
      throw std::runtime_error("dataset: bad label in line: " + line);
    d.samples.push_back(std::move(s));
  }
  return d;
}

dataset dataset_from_text(const std::string& text) {
  std::istringstream in(text);
  return dataset_from_text(in);
}

} // namespace mdl
