#pragma once

#include <cstdint>

namespace mdl {

// Output alphabet of an interpreter: a bit or the non-halting symbol.
enum class trit : std::uint8_t { zero = 0, one = 1, bottom = 2 };

inline trit trit_of(bool b) { return b ? trit::one : trit::zero; }

} // namespace mdl
