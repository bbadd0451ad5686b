#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mdl/bits.hpp"

namespace mdl {

// Truth table of a Boolean function on n-bit inputs. Row index x is the
// input read as a big-endian number (first input bit = most significant),
// matching the bit order of the `bits` type.
class truth_table {
public:
  truth_table() = default;

  explicit truth_table(std::uint32_t n)
      : n_(n), words_((std::size_t{1} << n) / 64 + 1, 0) {
    if (n > 24)
      throw std::invalid_argument("truth_table: n too large");
  }

  static truth_table from_bits(std::uint32_t n, std::uint64_t rows) {
    truth_table t(n);
    t.words_[0] = rows & t.row_mask();
    return t;
  }

  std::uint32_t inputs() const { return n_; }
  std::uint64_t rows() const { return std::uint64_t{1} << n_; }

  bool get(std::uint64_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }

  void set(std::uint64_t x, bool v) {
    if (v)
      words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    else
      words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  // Low 2^n bits when n <= 6.
  std::uint64_t as_word() const {
    if (n_ > 6)
      throw std::logic_error("truth_table: table wider than one word");
    return words_[0] & row_mask();
  }

  std::uint64_t row_mask() const {
    return n_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows()) - 1;
  }

  std::uint64_t count_ones() const {
    std::uint64_t c = 0;
    for (std::uint64_t x = 0; x < rows(); ++x)
      c += get(x);
    return c;
  }

  std::uint64_t agreement_count(const truth_table& o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("truth_table: size mismatch");
    std::uint64_t c = 0;
    for (std::uint64_t x = 0; x < rows(); ++x)
      c += get(x) == o.get(x);
    return c;
  }

  bits input_of_row(std::uint64_t x) const {
    bits b;
    for (std::uint32_t i = 0; i < n_; ++i)
      b.push_back((x >> (n_ - 1 - i)) & 1u);
    return b;
  }

  static std::uint64_t row_of_input(const bits& x) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      v = (v << 1) | (x[i] ? 1u : 0u);
    return v;
  }

  bool operator==(const truth_table& o) const {
    if (n_ != o.n_)
      return false;
    for (std::uint64_t x = 0; x < rows(); ++x)
      if (get(x) != o.get(x))
        return false;
    return true;
  }

  bool operator!=(const truth_table& o) const { return !(*this == o); }

  // Ascending table order: rows read as a 2^n-bit integer.
  bool table_less(const truth_table& o) const {
    for (std::uint64_t x = rows(); x-- > 0;) {
      if (get(x) != o.get(x))
        return o.get(x);
    }
    return false;
  }

private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline truth_table parity_table(std::uint32_t n) {
  truth_table t(n);
  for (std::uint64_t x = 0; x < t.rows(); ++x)
    t.set(x, __builtin_popcountll(x) % 2 == 1);
  return t;
}

inline truth_table constant_table(std::uint32_t n, bool v) {
  truth_table t(n);
  for (std::uint64_t x = 0; x < t.rows(); ++x)
    t.set(x, v);
  return t;
}

} // namespace mdl
