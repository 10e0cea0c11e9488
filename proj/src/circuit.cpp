#include "zhegalkin/circuit.hpp"

#include <algorithm>
#include <utility>

#include "text_util.hpp"
#include "zhegalkin/errors.hpp"
#include "zhegalkin/kernels.hpp"

namespace zhegalkin {

Gate::Gate(std::vector<std::size_t> controls, std::size_t target)
    : controls_(std::move(controls)), target_(target) {
  std::sort(controls_.begin(), controls_.end());
  if (target_ == 0) throw ContractError("wires are 1-based; target 0 is invalid");
  if (!controls_.empty() && controls_.front() == 0) {
    throw ContractError("wires are 1-based; control 0 is invalid");
  }
  if (std::adjacent_find(controls_.begin(), controls_.end()) != controls_.end()) {
    throw ContractError("duplicate control wire");
  }
  if (std::binary_search(controls_.begin(), controls_.end(), target_)) {
    throw ContractError("target wire " + std::to_string(target_) + " is also a control");
  }
}

Circuit::Circuit(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n_ == 0 || m_ == 0) throw ContractError("a circuit needs at least one input and one output");
}

Circuit::Circuit(std::size_t n, std::size_t m, std::vector<Gate> gates) : Circuit(n, m) {
  for (auto& g : gates) add(std::move(g));
}

void Circuit::add(Gate gate) {
  const auto w = width();
  if (gate.target() > w || (!gate.controls().empty() && gate.controls().back() > w)) {
    throw ContractError("gate references a wire outside [1, " + std::to_string(w) + "]");
  }
  gates_.push_back(std::move(gate));
}

bool Circuit::writes_only_outputs() const {
  return std::all_of(gates_.begin(), gates_.end(), [this](const Gate& g) {
    return g.target() > n_ && (g.controls().empty() || g.controls().back() <= n_);
  });
}

Circuit synthesize(const Polynomial& poly) {
  if (poly.k() != 2) {
    throw ContractError("circuit synthesis requires k = 2, got k=" + std::to_string(poly.k()));
  }
  Circuit circuit(poly.n(), poly.m());
  for (std::size_t c = 0; c < poly.m(); ++c) {
    for (std::uint64_t mono = 0; mono < poly.rows(); ++mono) {
      if (poly.at(mono, c) == 0) continue;
      const auto degrees = assignment_at(poly.modulus(), poly.n(), mono);
      std::vector<std::size_t> controls;
      for (std::size_t i = 0; i < poly.n(); ++i) {
        if (degrees[i] == 1) controls.push_back(i + 1);
      }
      circuit.add(Gate(std::move(controls), poly.n() + c + 1));
    }
  }
  return circuit;
}

BasisState simulate(const Circuit& circuit, const BasisState& state) {
  if (state.bits.size() != circuit.width()) {
    throw ContractError("state has " + std::to_string(state.bits.size()) + " digits, circuit has " +
                        std::to_string(circuit.width()) + " wires");
  }
  if (std::any_of(state.bits.begin(), state.bits.end(), [](auto b) { return b > 1; })) {
    throw ContractError("basis state digits must be 0 or 1");
  }
  BasisState out = state;
  for (const auto& g : circuit.gates()) {
    const bool fire = std::all_of(g.controls().begin(), g.controls().end(),
                                  [&](std::size_t w) { return out.bits[w - 1] == 1; });
    if (fire) out.bits[g.target() - 1] ^= 1;
  }
  return out;
}

namespace {

std::vector<kernels::PackedGate> pack(const Circuit& circuit) {
  const auto w = circuit.width();
  if (w > 64) throw SizeLimitError("packed simulation supports at most 64 wires");
  std::vector<kernels::PackedGate> packed;
  packed.reserve(circuit.gates().size());
  for (const auto& g : circuit.gates()) {
    std::uint64_t mask = 0;
    for (auto c : g.controls()) mask |= std::uint64_t{1} << (w - c);
    packed.push_back({mask, std::uint64_t{1} << (w - g.target())});
  }
  return packed;
}

}  // namespace

TruthTable table_of(const Circuit& circuit) {
  if (!circuit.writes_only_outputs()) {
    throw ContractError("table_of requires controls on inputs and targets on outputs");
  }
  const auto packed = pack(circuit);
  const auto rows = checked_power(2, circuit.n(), kMaxGridRows);
  const auto m = circuit.m();
  std::vector<std::uint64_t> outputs(rows);
  kernels::omp::circuit_outputs(packed, static_cast<unsigned>(m), outputs);

  std::vector<Digit> cells(rows * m);
  for (std::uint64_t x = 0; x < rows; ++x) {
    for (std::size_t c = 0; c < m; ++c) {
      cells[x * m + c] = static_cast<Digit>((outputs[x] >> (m - 1 - c)) & 1);
    }
  }
  return TruthTable(Modulus(2), circuit.n(), m, std::move(cells));
}

std::vector<std::uint64_t> basis_permutation(const Circuit& circuit) {
  const auto packed = pack(circuit);
  std::vector<std::uint64_t> image(checked_power(2, circuit.width(), kMaxGridRows));
  kernels::omp::circuit_permutation(packed, image);
  return image;
}

std::string render_ascii(const Circuit& circuit) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= circuit.n(); ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= circuit.m(); ++i) labels.push_back("y" + std::to_string(i));
  std::size_t pad = 0;
  for (const auto& l : labels) pad = std::max(pad, l.size());

  std::string out;
  for (std::size_t wire = 1; wire <= circuit.width(); ++wire) {
    std::string row = labels[wire - 1];
    row.append(pad - row.size() + 1, ' ');
    row += "─";
    for (const auto& g : circuit.gates()) {
      if (g.target() == wire) {
        row += "⊕";
      } else if (std::binary_search(g.controls().begin(), g.controls().end(), wire)) {
        row += "●";
      } else {
        row += "─";
      }
      row += "─";
    }
    out += row + "\n";
  }
  return out;
}

Circuit parse_circuit(std::string_view input) {
  using Kind = ParseError::Kind;
  namespace d = text::detail;
  const auto lines = d::significant_lines(input);
  if (lines.empty()) throw ParseError(Kind::kBadHeader, 1, "missing header");
  const auto header = d::parse_header(lines.front());
  if (header.k != 2) {
    throw ParseError(Kind::kBadHeader, lines.front().number,
                     "circuits are binary, expected 'k 2'");
  }
  Circuit circuit(static_cast<std::size_t>(header.n), static_cast<std::size_t>(header.m));

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto tok = d::split_ws(line.content);
    auto wire = [&](std::string_view t) {
      auto v = d::parse_uint(t);
      if (!v || *v < 1 || static_cast<std::size_t>(*v) > circuit.width()) {
        throw ParseError(Kind::kSyntax, line.number,
                         "bad wire '" + std::string(t) + "', expected 1.." +
                             std::to_string(circuit.width()));
      }
      return static_cast<std::size_t>(*v);
    };

    std::vector<std::size_t> controls;
    std::size_t target = 0;
    if (tok.size() == 2 && tok[0] == "X") {
      target = wire(tok[1]);
    } else if (tok.size() >= 3 && tok[0] == "MCX" && tok[tok.size() - 2] == "->") {
      for (std::size_t t = 1; t + 2 < tok.size(); ++t) controls.push_back(wire(tok[t]));
      target = wire(tok.back());
    } else {
      throw ParseError(Kind::kSyntax, line.number,
                       "expected 'X <target>' or 'MCX <controls...> -> <target>'");
    }
    try {
      circuit.add(Gate(std::move(controls), target));
    } catch (const ContractError& e) {
      throw ParseError(Kind::kSyntax, line.number, e.what());
    }
  }
  return circuit;
}

std::string serialize(const Circuit& circuit) {
  std::string out =
      "k 2 n " + std::to_string(circuit.n()) + " m " + std::to_string(circuit.m()) + "\n";
  for (const auto& g : circuit.gates()) {
    if (g.controls().empty()) {
      out += "X " + std::to_string(g.target()) + "\n";
      continue;
    }
    out += "MCX";
    for (auto c : g.controls()) out += " " + std::to_string(c);
    out += " -> " + std::to_string(g.target()) + "\n";
  }
  return out;
}

BasisState parse_basis_state(std::string_view digits) {
  BasisState s;
  for (char ch : digits) {
    if (ch == ' ' || ch == ',' || ch == '\t') continue;
    if (ch != '0' && ch != '1') {
      throw ContractError("basis state digits must be 0 or 1, got '" + std::string(1, ch) + "'");
    }
    s.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return s;
}

std::string format_basis_state(const BasisState& state) {
  std::string out;
  for (auto b : state.bits) out += static_cast<char>('0' + b);
  return out;
}

}  // namespace zhegalkin
