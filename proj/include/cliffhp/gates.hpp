#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffhp/rng.hpp"

namespace cliffhp {

enum class GateKind : uint8_t { H, S, CNOT };

struct Gate {
  GateKind kind;
  uint32_t a = 0;  // target for H/S, control for CNOT
  uint32_t b = 0;  // target for CNOT

  bool operator==(const Gate& other) const = default;
};

using GateList = std::vector<Gate>;

// One gate per line: "H 0", "S 2", "CNOT 0 3". Blank lines and lines
// starting with '#' are skipped.
GateList parse_gate_list(const std::string& text);
std::string format_gate_list(const GateList& gates);

// Random circuit over {H, S, CNOT}; handy as a generic Clifford source that
// also has a gate-level description.
GateList random_circuit(size_t n, size_t num_gates, Rng& rng);

}  // namespace cliffhp
