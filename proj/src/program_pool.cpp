#include "mdl/program_pool.hpp"

#include <algorithm>

#include "mdl/machine_library.hpp"
#include "mdl/turing_codec.hpp"

namespace mdl {

const std::vector<pool_program>& machine_program_pool() {
  static const std::vector<pool_program> pool = [] {
    std::vector<pool_program> p;
    auto add = [&](const std::string& name, const turing_machine& m) {
      p.push_back({name, encode_machine(m)});
    };
    add("stuck", stuck_2tape());
    add("const1", const1_2tape());
    add("first-bit", first_bit_2tape());
    add("not-first-bit", not_first_bit_2tape());
    add("and-all", and_all_2tape());
    add("or-all", or_all_2tape());
    add("second-bit", nth_bit_2tape(1));
    add("third-bit", nth_bit_2tape(2));
    add("parity", parity_2tape());
    std::sort(p.begin(), p.end(),
              [](const pool_program& a, const pool_program& b) {
                return a.code.lex_less(b.code);
              });
    return p;
  }();
  return pool;
}

} // namespace mdl
