#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zhegalkin/anf.hpp"
#include "zhegalkin/truth_table.hpp"

namespace zhegalkin {

/// Multi-controlled NOT on 1-based wires. No controls is a plain X, one is
/// CNOT, two is CCNOT (Toffoli).
class Gate {
 public:
  /// Controls are sorted; duplicates, wire 0 and target-in-controls throw.
  Gate(std::vector<std::size_t> controls, std::size_t target);

  static Gate x(std::size_t target) { return Gate({}, target); }

  const std::vector<std::size_t>& controls() const noexcept { return controls_; }
  std::size_t target() const noexcept { return target_; }

  friend auto operator<=>(const Gate&, const Gate&) = default;

 private:
  std::vector<std::size_t> controls_;
  std::size_t target_;
};

/// Wires 1..n carry x_1..x_n, wires n+1..n+m carry y_1..y_m.
class Circuit {
 public:
  Circuit(std::size_t n, std::size_t m);
  Circuit(std::size_t n, std::size_t m, std::vector<Gate> gates);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t width() const noexcept { return n_ + m_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// Appends a gate; every wire must lie in [1, n + m].
  void add(Gate gate);

  /// True when every control is an input wire and every target an output
  /// wire, i.e. x passes through unchanged.
  bool writes_only_outputs() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Gate> gates_;
};

/// n + m bits, wire 1 first.
struct BasisState {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// One gate per nonzero coefficient: output c, degree vector d gives a gate
/// on wire n + c + 1 controlled by { i : d_i = 1 }. Ordered by output, then
/// by ascending monomial index. Requires k = 2.
Circuit synthesize(const Polynomial& poly);

/// Applies the gates left to right. Throws on width mismatch or non-bit digits.
BasisState simulate(const Circuit& circuit, const BasisState& state);

/// Runs every input x with y = 0 and collects y. Rejects circuits that
/// write input wires, and registers wider than 64 wires.
TruthTable table_of(const Circuit& circuit);

/// The basis-index permutation realized by the circuit over all 2^(n+m)
/// states, using idx(|x, y>) = idx(x) * 2^m + idx(y).
std::vector<std::uint64_t> basis_permutation(const Circuit& circuit);

/// One row per wire: control dots, target circles and plain wire segments,
/// one column per gate.
std::string render_ascii(const Circuit& circuit);

/// `.qc` text: `k 2 n <int> m <int>` then `X <t>` / `MCX <c...> -> <t>` lines.
Circuit parse_circuit(std::string_view text);
std::string serialize(const Circuit& circuit);

/// `digits` such as "10100" or "1 0 1 0 0".
BasisState parse_basis_state(std::string_view digits);
std::string format_basis_state(const BasisState& state);

}  // namespace zhegalkin
