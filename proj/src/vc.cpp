#include "mdl/vc.hpp"

#include <set>
#include <stdexcept>

#include "mdl/errors.hpp"
#include "mdl/interpreter.hpp"
#include "mdl/machine_library.hpp"
#include "mdl/rng.hpp"
#include "mdl/turing_codec.hpp"

namespace mdl {

bool shatters(const std::vector<truth_table>& hypotheses,
              const std::vector<std::uint64_t>& points) {
  if (points.size() > 20)
    throw budget_error("shatters: too many points for the pattern check");
  std::set<std::uint64_t> realized;
  for (const auto& h : hypotheses) {
    std::uint64_t pattern = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (h.get(points[i]))
        pattern |= std::uint64_t{1} << i;
    realized.insert(pattern);
  }
  return realized.size() == (std::size_t{1} << points.size());
}

vc_demo_result vc_lower_bound_demo(std::uint32_t d, bool full,
                                   std::uint32_t sample_patterns,
                                   std::uint64_t seed) {
  if (d < 2 || d > 40)
    throw std::invalid_argument("vc_lower_bound_demo: d out of range");
  vc_demo_result res;
  res.d = d;
  res.num_points = d / 2;
  res.x_bits = ceil_log2(std::max(res.num_points, 2u));
  res.measured_constant =
      static_cast<double>(res.num_points) / static_cast<double>(d);

  auto machine = indexer_2tape(res.x_bits);
  bits code = encode_machine(machine);
  auto iu = interpreter::universal();

  auto pattern_realized = [&](std::uint64_t pattern) {
    // The program whose payload is the pattern itself indexes into it.
    bits prog = code;
    for (std::uint32_t j = 0; j < res.num_points; ++j)
      prog.push_back((pattern >> j) & 1u);
    for (std::uint32_t j = 0; j < res.num_points; ++j) {
      bits x;
      for (std::uint32_t b = res.x_bits; b-- > 0;)
        x.push_back((j >> b) & 1u);
      trit out = interpret(iu, prog, x);
      bool want = (pattern >> j) & 1u;
      if (out == trit::bottom || (out == trit::one) != want)
        return false;
    }
    return true;
  };

  res.shattered = true;
  if (full) {
    const std::uint64_t total = std::uint64_t{1} << res.num_points;
    for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
      ++res.patterns_checked;
      if (!pattern_realized(pattern)) {
        res.shattered = false;
        break;
      }
    }
  } else {
    rng r(seed);
    for (std::uint32_t i = 0; i < sample_patterns; ++i) {
      std::uint64_t pattern =
          r.next_below(std::uint64_t{1} << res.num_points);
      ++res.patterns_checked;
      if (!pattern_realized(pattern)) {
        res.shattered = false;
        break;
      }
    }
  }
  return res;
}

} // namespace mdl
