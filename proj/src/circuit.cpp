#include "mdl/circuit.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace mdl {

void circuit::validate() const {
  if (nodes.empty())
    throw std::invalid_argument("circuit: empty");
  if (sink >= nodes.size())
    throw std::invalid_argument("circuit: sink out of range");
  std::vector<bool> referenced(nodes.size(), false);
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    switch (nd.kind) {
    case gate_kind::input:
      if (nd.a >= declared_input_size)
        throw std::invalid_argument("circuit: input variable out of range");
      break;
    case gate_kind::g_and:
    case gate_kind::g_or:
      if (nd.a >= i || nd.b >= i)
        throw std::invalid_argument("circuit: parent must precede node");
      referenced[nd.a] = referenced[nd.b] = true;
      break;
    case gate_kind::g_not:
      if (nd.a >= i)
        throw std::invalid_argument("circuit: parent must precede node");
      referenced[nd.a] = true;
      break;
    }
  }
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    if (i == sink) {
      if (referenced[i])
        throw std::invalid_argument("circuit: sink must be childless");
    } else if (!referenced[i]) {
      throw std::invalid_argument("circuit: childless node besides sink");
    }
  }
}

bool eval_circuit(const circuit& c, const bits& x) {
  if (x.size() != c.declared_input_size)
    throw std::invalid_argument("eval_circuit: input length mismatch");
  std::vector<bool> val(c.nodes.size());
  for (std::uint32_t i = 0; i < c.nodes.size(); ++i) {
    const auto& nd = c.nodes[i];
    switch (nd.kind) {
    case gate_kind::input:
      val[i] = x[nd.a];
      break;
    case gate_kind::g_and:
      val[i] = val[nd.a] && val[nd.b];
      break;
    case gate_kind::g_or:
      val[i] = val[nd.a] || val[nd.b];
      break;
    case gate_kind::g_not:
      val[i] = !val[nd.a];
      break;
    }
  }
  return val[c.sink];
}

truth_table circuit_table(const circuit& c) {
  const std::uint32_t n = c.declared_input_size;
  truth_table out(n);
  const std::uint64_t rows = out.rows();
  // One 64-row block at a time, each node as a bitmask over the block.
  std::vector<std::uint64_t> val(c.nodes.size());
  for (std::uint64_t base = 0; base < rows; base += 64) {
    for (std::uint32_t i = 0; i < c.nodes.size(); ++i) {
      const auto& nd = c.nodes[i];
      switch (nd.kind) {
      case gate_kind::input: {
        // Bit position n-1-a of the row index.
        const std::uint32_t shift = n - 1 - nd.a;
        std::uint64_t mask = 0;
        if (shift < 6) {
          // Pattern repeats within a block.
          for (std::uint64_t r = 0; r < 64 && base + r < rows; ++r)
            if ((r >> shift) & 1u)
              mask |= std::uint64_t{1} << r;
        } else {
          mask = ((base >> shift) & 1u) ? ~std::uint64_t{0} : 0;
        }
        val[i] = mask;
        break;
      }
      case gate_kind::g_and:
        val[i] = val[nd.a] & val[nd.b];
        break;
      case gate_kind::g_or:
        val[i] = val[nd.a] | val[nd.b];
        break;
      case gate_kind::g_not:
        val[i] = ~val[nd.a];
        break;
      }
    }
    std::uint64_t word = val[c.sink];
    for (std::uint64_t r = 0; r < 64 && base + r < rows; ++r)
      out.set(base + r, (word >> r) & 1u);
  }
  return out;
}

circuit wire_circuit(std::uint32_t n, std::uint32_t var) {
  circuit c;
  c.declared_input_size = n;
  c.nodes.push_back({gate_kind::input, var, 0});
  c.sink = 0;
  return c;
}

circuit constant_circuit(std::uint32_t n, bool value) {
  circuit c;
  c.declared_input_size = n;
  c.nodes.push_back({gate_kind::input, 0, 0});
  c.nodes.push_back({gate_kind::g_not, 0, 0});
  c.nodes.push_back({value ? gate_kind::g_or : gate_kind::g_and, 0, 1});
  c.sink = 2;
  return c;
}

std::string circuit_to_text(const circuit& c) {
  std::ostringstream out;
  out << "INPUTS " << c.declared_input_size << "\n";
  for (std::uint32_t i = 0; i < c.nodes.size(); ++i) {
    const auto& nd = c.nodes[i];
    switch (nd.kind) {
    case gate_kind::input:
      out << i << " INPUT " << nd.a << "\n";
      break;
    case gate_kind::g_and:
      out << i << " AND " << nd.a << " " << nd.b << "\n";
      break;
    case gate_kind::g_or:
      out << i << " OR " << nd.a << " " << nd.b << "\n";
      break;
    case gate_kind::g_not:
      out << i << " NOT " << nd.a << "\n";
      break;
    }
  }
  out << "OUTPUT " << c.sink << "\n";
  return out.str();
}

circuit circuit_from_text(std::istream& in) {
  circuit c;
  bool have_n = false;
  bool have_output = false;
  std::uint32_t max_var = 0;
  bool any_input = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "INPUTS") {
      if (!(ls >> c.declared_input_size))
        throw std::runtime_error("circuit text: bad INPUTS line");
      have_n = true;
      continue;
    }
    if (first == "OUTPUT") {
      if (!(ls >> c.sink))
        throw std::runtime_error("circuit text: bad OUTPUT line");
      have_output = true;
      continue;
    }
    std::uint32_t id = 0;
    try {
      id = static_cast<std::uint32_t>(std::stoul(first));
    } catch (...) {
      throw std::runtime_error("circuit text: bad node id: " + line);
    }
    if (id != c.nodes.size())
      throw std::runtime_error("circuit text: node ids must be sequential");
    std::string kind;
    ls >> kind;
    circuit_node nd;
    if (kind == "INPUT") {
      nd.kind = gate_kind::input;
      if (!(ls >> nd.a))
        throw std::runtime_error("circuit text: bad INPUT node");
      max_var = std::max(max_var, nd.a);
      any_input = true;
    } else if (kind == "AND" || kind == "OR") {
      nd.kind = kind == "AND" ? gate_kind::g_and : gate_kind::g_or;
      if (!(ls >> nd.a >> nd.b))
        throw std::runtime_error("circuit text: bad binary node");
    } else if (kind == "NOT") {
      nd.kind = gate_kind::g_not;
      if (!(ls >> nd.a))
        throw std::runtime_error("circuit text: bad NOT node");
    } else {
      throw std::runtime_error("circuit text: unknown node kind: " + kind);
    }
    c.nodes.push_back(nd);
  }
  if (!have_output)
    throw std::runtime_error("circuit text: missing OUTPUT line");
  if (!have_n)
    c.declared_input_size = any_input ? max_var + 1 : 0;
  c.validate();
  return c;
}

circuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  return circuit_from_text(in);
}

} // namespace mdl
