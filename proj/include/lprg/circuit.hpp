#pragma once

#include <vector>

#include "lprg/dnf.hpp"

namespace lprg {

enum class GateKind { And, Or };

/// A gate input is either a literal of the circuit input or an earlier gate.
struct GateInput {
  bool is_gate = false;
  std::uint32_t index = 0;
  bool positive = true;  // literals only

  static GateInput literal(std::uint32_t coord, bool positive) { return {false, coord, positive}; }
  static GateInput gate(std::uint32_t g) { return {true, g, true}; }
  bool operator==(const GateInput&) const = default;
};

struct Gate {
  GateKind kind = GateKind::And;
  std::vector<GateInput> inputs;

  bool operator==(const Gate&) const = default;
};

/// Unbounded fan-in AND/OR circuit. Gates are topologically ordered: a gate
/// only reads gates with smaller index. The last gate is the output.
class BooleanCircuit {
 public:
  BooleanCircuit() = default;
  BooleanCircuit(std::size_t dim, std::vector<Gate> gates);

  std::size_t dim() const { return dim_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t gate_count() const { return gates_.size(); }

  /// Longest input-to-output path, counted in gates.
  std::size_t depth() const;

  std::uint8_t operator()(const BitVector& z) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace lprg
