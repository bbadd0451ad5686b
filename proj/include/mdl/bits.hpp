#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdl {

// Finite binary string, most-significant-bit first in all encodings.
class bits {
public:
  bits() = default;

  explicit bits(std::string_view s) {
    data_.reserve(s.size());
    for (char c : s) {
      if (c == '0')
        data_.push_back(0);
      else if (c == '1')
        data_.push_back(1);
      else
        throw std::invalid_argument("bits: string must contain only 0/1");
    }
  }

  static bits zeros(std::size_t count) {
    bits b;
    b.data_.assign(count, 0);
    return b;
  }

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool operator[](std::size_t i) const { return data_[i] != 0; }

  void push_back(bool bit) { data_.push_back(bit ? 1 : 0); }
  void pop_back() { data_.pop_back(); }

  void append(const bits& other) {
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  }

  // Appends `width` bits of `value`, most significant first.
  void append_uint(std::uint64_t value, unsigned width) {
    if (width < 64 && (value >> width) != 0)
      throw std::invalid_argument("bits: value does not fit width");
    for (unsigned i = width; i-- > 0;)
      data_.push_back((value >> i) & 1u);
  }

  // Reads `width` bits starting at `pos`, most significant first.
  std::uint64_t read_uint(std::size_t pos, unsigned width) const {
    if (pos + width > size())
      throw std::out_of_range("bits: read past end");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i)
      v = (v << 1) | data_[pos + i];
    return v;
  }

  bits slice(std::size_t pos, std::size_t len) const {
    if (pos + len > size())
      throw std::out_of_range("bits: slice past end");
    bits b;
    b.data_.assign(data_.begin() + pos, data_.begin() + pos + len);
    return b;
  }

  bool is_prefix_of(const bits& other) const {
    if (size() > other.size())
      return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (data_[i] != other.data_[i])
        return false;
    return true;
  }

  bool operator==(const bits& o) const { return data_ == o.data_; }
  bool operator!=(const bits& o) const { return !(*this == o); }

  // Length-then-lexicographic order with 0 < 1.
  bool lex_less(const bits& o) const {
    if (size() != o.size())
      return size() < o.size();
    return data_ < o.data_;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(size());
    for (auto b : data_)
      s.push_back(b ? '1' : '0');
    return s;
  }

  // Packs into bytes MSB-first, zero-padded, with a one-byte trailer
  // holding the pad length.
  std::vector<std::uint8_t> to_padded_bytes() const {
    std::vector<std::uint8_t> out((size() + 7) / 8 + 1, 0);
    for (std::size_t i = 0; i < size(); ++i)
      if (data_[i])
        out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    out.back() = static_cast<std::uint8_t>((8 - size() % 8) % 8);
    return out;
  }

  static bits from_padded_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.empty())
      throw std::invalid_argument("bits: missing pad trailer");
    unsigned pad = bytes.back();
    if (pad > 7)
      throw std::invalid_argument("bits: bad pad trailer");
    std::size_t payload = bytes.size() - 1;
    if (payload == 0 && pad != 0)
      throw std::invalid_argument("bits: pad without payload");
    std::size_t nbits = payload * 8 - pad;
    bits b;
    b.data_.reserve(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
      b.data_.push_back((bytes[i / 8] >> (7 - i % 8)) & 1u);
    return b;
  }

private:
  std::vector<std::uint8_t> data_;
};

// ceil(log2(x)) for x >= 1.
inline unsigned ceil_log2(std::uint64_t x) {
  unsigned w = 0;
  while ((std::uint64_t{1} << w) < x)
    ++w;
  return w;
}

} // namespace mdl
