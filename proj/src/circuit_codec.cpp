#include "mdl/circuit_codec.hpp"

#include <stdexcept>

namespace mdl {

bits encode_circuit(const circuit& c) {
  c.validate();
  const std::uint32_t n = c.declared_input_size;
  if (n < 2)
    throw std::invalid_argument("encode_circuit: needs n >= 2");
  if (c.sink != c.nodes.size() - 1)
    throw std::invalid_argument("encode_circuit: sink must be last node");
  const unsigned d = ceil_log2(n);
  const unsigned p = ceil_log2(c.size());
  const unsigned w = std::max(2 * p, d);
  bits out;
  out.append(bits::zeros(d));
  out.push_back(true);
  out.append_uint(n - 1, d);
  out.append(bits::zeros(c.size()));
  out.push_back(true);
  for (const auto& nd : c.nodes) {
    out.append_uint(static_cast<std::uint64_t>(nd.kind), 2);
    switch (nd.kind) {
    case gate_kind::input:
      out.append_uint(nd.a, w);
      break;
    case gate_kind::g_and:
    case gate_kind::g_or:
      out.append_uint(nd.a, p);
      out.append_uint(nd.b, p);
      out.append(bits::zeros(w - 2 * p));
      break;
    case gate_kind::g_not:
      out.append_uint(nd.a, p);
      out.append(bits::zeros(w - p));
      break;
    }
  }
  return out;
}

std::optional<circuit> decode_circuit(const bits& code) {
  std::size_t pos = 0;
  unsigned d = 0;
  while (pos < code.size() && !code[pos]) {
    ++d;
    ++pos;
  }
  if (pos >= code.size() || d == 0 || d > 24)
    return std::nullopt;
  ++pos;
  if (pos + d > code.size())
    return std::nullopt;
  std::uint64_t nm1 = code.read_uint(pos, d);
  pos += d;
  const std::uint64_t n = nm1 + 1;
  if (ceil_log2(n) != d)
    return std::nullopt; // non-canonical header width
  std::uint64_t size = 0;
  while (pos < code.size() && !code[pos]) {
    ++size;
    ++pos;
  }
  if (pos >= code.size() || size == 0)
    return std::nullopt;
  ++pos;
  const unsigned p = ceil_log2(size);
  const unsigned w = std::max<unsigned>(2 * p, d);
  if (code.size() != pos + size * (2 + w))
    return std::nullopt;

  circuit c;
  c.declared_input_size = static_cast<std::uint32_t>(n);
  std::vector<bool> referenced(size, false);
  for (std::uint64_t i = 0; i < size; ++i) {
    auto kind = static_cast<gate_kind>(code.read_uint(pos, 2));
    pos += 2;
    circuit_node nd;
    nd.kind = kind;
    switch (kind) {
    case gate_kind::input: {
      std::uint64_t v = code.read_uint(pos, w);
      if (v >= n)
        return std::nullopt;
      nd.a = static_cast<std::uint32_t>(v);
      break;
    }
    case gate_kind::g_and:
    case gate_kind::g_or: {
      std::uint64_t a = code.read_uint(pos, p);
      std::uint64_t b = code.read_uint(pos + p, p);
      if (w > 2 * p && code.read_uint(pos + 2 * p, w - 2 * p) != 0)
        return std::nullopt;
      if (a >= i || b >= i)
        return std::nullopt;
      nd.a = static_cast<std::uint32_t>(a);
      nd.b = static_cast<std::uint32_t>(b);
      referenced[a] = referenced[b] = true;
      break;
    }
    case gate_kind::g_not: {
      std::uint64_t a = code.read_uint(pos, p);
      if (w > p && code.read_uint(pos + p, w - p) != 0)
        return std::nullopt;
      if (a >= i)
        return std::nullopt;
      nd.a = static_cast<std::uint32_t>(a);
      referenced[a] = true;
      break;
    }
    }
    pos += w;
    c.nodes.push_back(nd);
  }
  std::uint32_t childless = 0;
  std::uint32_t sink = 0;
  for (std::uint32_t i = 0; i < size; ++i)
    if (!referenced[i]) {
      ++childless;
      sink = i;
    }
  if (childless != 1)
    return std::nullopt;
  c.sink = sink;
  return c;
}

} // namespace mdl
