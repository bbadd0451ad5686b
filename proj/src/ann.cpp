#include "mdl/ann.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mdl {

namespace {

struct fixed_point {
  std::uint32_t d;
  std::int64_t max_mag() const { return (std::int64_t{1} << (d - 1)) - 1; }
  std::int64_t one_val() const {
    return d >= 2 ? std::int64_t{1} << (d - 2) : 1;
  }

  std::int64_t value(std::uint64_t code) const {
    bool neg = (code >> (d - 1)) & 1u;
    auto mag = static_cast<std::int64_t>(
        code & ((std::uint64_t{1} << (d - 1)) - 1));
    return neg ? -mag : mag;
  }

  std::uint64_t encode(std::int64_t v) const {
    if (v > max_mag())
      v = max_mag();
    if (v < -max_mag())
      v = -max_mag();
    if (v >= 0)
      return static_cast<std::uint64_t>(v);
    return (std::uint64_t{1} << (d - 1)) |
           static_cast<std::uint64_t>(-v);
  }
};

} // namespace

void operator_set::validate() const {
  if (width == 0 || width > 32)
    throw std::invalid_argument("operator_set: width out of range");
  for (std::uint32_t i : {zero_op, one_op, and_op, or_op, not_op})
    if (i >= ops.size())
      throw std::invalid_argument("operator_set: operator index out of range");
  if (ops[zero_op].arity != 0 || ops[one_op].arity != 0)
    throw std::invalid_argument("operator_set: constants must be 0-ary");
  const std::uint64_t z = zero_code(), o = one_code();
  if (z == o)
    throw std::invalid_argument("operator_set: Boolean codes must differ");
  // The Boolean gadget check: and/or/not must act correctly on the
  // Boolean codes.
  auto as_bool = [&](std::uint64_t c) -> int {
    return c == z ? 0 : c == o ? 1 : -1;
  };
  for (int x = 0; x < 2; ++x) {
    const std::uint64_t cx = x ? o : z;
    if (as_bool(ops[not_op].fn(cx, 0)) != 1 - x)
      throw std::invalid_argument("operator_set: not gadget broken");
    for (int y = 0; y < 2; ++y) {
      const std::uint64_t cy = y ? o : z;
      if (as_bool(ops[and_op].fn(cx, cy)) != (x && y))
        throw std::invalid_argument("operator_set: and gadget broken");
      if (as_bool(ops[or_op].fn(cx, cy)) != (x || y))
        throw std::invalid_argument("operator_set: or gadget broken");
    }
  }
}

operator_set fixed_point_opset(std::uint32_t width) {
  if (width < 2 || width > 16)
    throw std::invalid_argument("fixed_point_opset: width must be in [2,16]");
  fixed_point fp{width};
  operator_set os;
  os.name = "fixed" + std::to_string(width);
  os.width = width;
  const std::uint64_t one = fp.encode(fp.one_val());
  os.ops = {
      {"zero", 0, [](std::uint64_t, std::uint64_t) { return std::uint64_t{0}; }},
      {"one", 0, [one](std::uint64_t, std::uint64_t) { return one; }},
      {"max", 2,
       [fp](std::uint64_t a, std::uint64_t b) {
         return fp.value(a) >= fp.value(b) ? a : b;
       }},
      {"min", 2,
       [fp](std::uint64_t a, std::uint64_t b) {
         return fp.value(a) <= fp.value(b) ? a : b;
       }},
      {"one_minus", 1,
       [fp](std::uint64_t a, std::uint64_t) {
         return fp.encode(fp.one_val() - fp.value(a));
       }},
      {"add_sat", 2,
       [fp](std::uint64_t a, std::uint64_t b) {
         return fp.encode(fp.value(a) + fp.value(b));
       }},
      {"mul", 2,
       [fp](std::uint64_t a, std::uint64_t b) {
         // Fixed-point product with one_val as the unit scale.
         return fp.encode(fp.value(a) * fp.value(b) / fp.one_val());
       }},
  };
  os.zero_op = 0;
  os.one_op = 1;
  os.or_op = 2; // max
  os.and_op = 3; // min
  os.not_op = 4; // 1-x
  os.validate();
  return os;
}

const operator_set& opset_by_name(const std::string& name) {
  static const std::map<std::string, operator_set> registry = {
      {"fixed2", fixed_point_opset(2)},
      {"fixed4", fixed_point_opset(4)},
      {"fixed8", fixed_point_opset(8)},
  };
  auto it = registry.find(name);
  if (it == registry.end())
    throw std::invalid_argument("unknown operator set: " + name);
  return it->second;
}

void ann::validate(const operator_set& os) const {
  if (nodes.empty())
    throw std::invalid_argument("ann: empty");
  if (sink >= nodes.size())
    throw std::invalid_argument("ann: sink out of range");
  std::vector<bool> referenced(nodes.size(), false);
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    if (nd.is_input) {
      if (nd.index >= declared_input_size)
        throw std::invalid_argument("ann: input variable out of range");
      continue;
    }
    if (nd.index >= os.ops.size())
      throw std::invalid_argument("ann: operator id out of range");
    const std::uint8_t arity = os.ops[nd.index].arity;
    if (arity >= 1) {
      if (nd.a >= i)
        throw std::invalid_argument("ann: parent must precede node");
      referenced[nd.a] = true;
    }
    if (arity == 2) {
      if (nd.b >= i)
        throw std::invalid_argument("ann: parent must precede node");
      referenced[nd.b] = true;
    }
  }
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    if (i == sink) {
      if (referenced[i])
        throw std::invalid_argument("ann: sink must be childless");
    } else if (!referenced[i]) {
      throw std::invalid_argument("ann: childless node besides sink");
    }
  }
}

trit eval_ann(const ann& a, const operator_set& os, const bits& x) {
  if (x.size() != a.declared_input_size)
    throw std::invalid_argument("eval_ann: input length mismatch");
  const std::uint64_t z = os.zero_code(), o = os.one_code();
  std::vector<std::uint64_t> val(a.nodes.size());
  for (std::uint32_t i = 0; i < a.nodes.size(); ++i) {
    const auto& nd = a.nodes[i];
    if (nd.is_input) {
      val[i] = x[nd.index] ? o : z;
      continue;
    }
    const auto& op = os.ops[nd.index];
    std::uint64_t pa = op.arity >= 1 ? val[nd.a] : 0;
    std::uint64_t pb = op.arity == 2 ? val[nd.b] : 0;
    val[i] = op.fn(pa, pb) & os.code_mask();
  }
  std::uint64_t out = val[a.sink];
  if (out == z)
    return trit::zero;
  if (out == o)
    return trit::one;
  return trit::bottom;
}

truth_table ann_table(const ann& a, const operator_set& os,
                      bool* bottom_seen) {
  truth_table t(a.declared_input_size);
  if (bottom_seen)
    *bottom_seen = false;
  for (std::uint64_t row = 0; row < t.rows(); ++row) {
    trit v = eval_ann(a, os, t.input_of_row(row));
    if (v == trit::bottom && bottom_seen)
      *bottom_seen = true;
    t.set(row, v == trit::one);
  }
  return t;
}

bits encode_ann(const ann& a, const operator_set& os) {
  a.validate(os);
  const std::uint32_t n = a.declared_input_size;
  if (n < 2)
    throw std::invalid_argument("encode_ann: needs n >= 2");
  if (a.sink != a.nodes.size() - 1)
    throw std::invalid_argument("encode_ann: sink must be last node");
  const unsigned d = ceil_log2(n);
  const unsigned lw = ceil_log2(os.ops.size() + 1);
  const unsigned p = ceil_log2(a.size());
  const unsigned w = std::max(2 * p, d);
  bits out;
  out.append(bits::zeros(d));
  out.push_back(true);
  out.append_uint(n - 1, d);
  out.append(bits::zeros(a.size()));
  out.push_back(true);
  for (const auto& nd : a.nodes) {
    if (nd.is_input) {
      out.append_uint(os.ops.size(), lw); // input marker
      out.append_uint(nd.index, w);
      continue;
    }
    out.append_uint(nd.index, lw);
    switch (os.ops[nd.index].arity) {
    case 0:
      out.append(bits::zeros(w));
      break;
    case 1:
      out.append_uint(nd.a, p);
      out.append(bits::zeros(w - p));
      break;
    default:
      out.append_uint(nd.a, p);
      out.append_uint(nd.b, p);
      out.append(bits::zeros(w - 2 * p));
      break;
    }
  }
  return out;
}

std::optional<ann> decode_ann(const bits& code, const operator_set& os) {
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
  const std::uint64_t n = code.read_uint(pos, d) + 1;
  pos += d;
  if (ceil_log2(n) != d)
    return std::nullopt;
  std::uint64_t size = 0;
  while (pos < code.size() && !code[pos]) {
    ++size;
    ++pos;
  }
  if (pos >= code.size() || size == 0)
    return std::nullopt;
  ++pos;
  const unsigned lw = ceil_log2(os.ops.size() + 1);
  const unsigned p = ceil_log2(size);
  const unsigned w = std::max<unsigned>(2 * p, d);
  // Per-node record is lw + w bits; the unary vertex block already
  // contributed the remaining one bit per node of the length formula.
  if (code.size() != pos + size * (lw + w))
    return std::nullopt;
  ann a;
  a.declared_input_size = static_cast<std::uint32_t>(n);
  std::vector<bool> referenced(size, false);
  for (std::uint64_t i = 0; i < size; ++i) {
    std::uint64_t label = code.read_uint(pos, lw);
    pos += lw;
    if (label > os.ops.size())
      return std::nullopt;
    ann_node nd;
    if (label == os.ops.size()) {
      nd.is_input = true;
      std::uint64_t v = code.read_uint(pos, w);
      if (v >= n)
        return std::nullopt;
      nd.index = static_cast<std::uint32_t>(v);
    } else {
      nd.index = static_cast<std::uint32_t>(label);
      const std::uint8_t arity = os.ops[label].arity;
      std::uint64_t a1 = 0, a2 = 0;
      unsigned used = 0;
      if (arity >= 1) {
        a1 = code.read_uint(pos, p);
        used += p;
      }
      if (arity == 2) {
        a2 = code.read_uint(pos + p, p);
        used += p;
      }
      if (w > used && code.read_uint(pos + used, w - used) != 0)
        return std::nullopt;
      if (arity >= 1) {
        if (a1 >= i)
          return std::nullopt;
        nd.a = static_cast<std::uint32_t>(a1);
        referenced[a1] = true;
      }
      if (arity == 2) {
        if (a2 >= i)
          return std::nullopt;
        nd.b = static_cast<std::uint32_t>(a2);
        referenced[a2] = true;
      }
    }
    pos += w;
    a.nodes.push_back(nd);
  }
  std::uint32_t childless = 0, sink = 0;
  for (std::uint32_t i = 0; i < size; ++i)
    if (!referenced[i]) {
      ++childless;
      sink = i;
    }
  if (childless != 1)
    return std::nullopt;
  a.sink = sink;
  return a;
}

std::string ann_to_text(const ann& a) {
  std::ostringstream out;
  out << "INPUTS " << a.declared_input_size << "\n";
  for (std::uint32_t i = 0; i < a.nodes.size(); ++i) {
    const auto& nd = a.nodes[i];
    if (nd.is_input)
      out << i << " INPUT " << nd.index << "\n";
    else
      out << i << " OP " << nd.index << " " << nd.a << " " << nd.b << "\n";
  }
  out << "OUTPUT " << a.sink << "\n";
  return out.str();
}

ann ann_from_text(const std::string& text, const operator_set& os) {
  std::istringstream in(text);
  ann a;
  std::string line;
  bool have_output = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "INPUTS") {
      ls >> a.declared_input_size;
      continue;
    }
    if (first == "OUTPUT") {
      ls >> a.sink;
      have_output = true;
      continue;
    }
    std::uint32_t id = std::stoul(first);
    if (id != a.nodes.size())
      throw std::runtime_error("ann text: node ids must be sequential");
    std::string kind;
    ls >> kind;
    ann_node nd;
    if (kind == "INPUT") {
      nd.is_input = true;
      ls >> nd.index;
    } else if (kind == "OP") {
      ls >> nd.index >> nd.a >> nd.b;
    } else {
      throw std::runtime_error("ann text: unknown node kind " + kind);
    }
    a.nodes.push_back(nd);
  }
  if (!have_output)
    throw std::runtime_error("ann text: missing OUTPUT");
  a.validate(os);
  return a;
}

} // namespace mdl
