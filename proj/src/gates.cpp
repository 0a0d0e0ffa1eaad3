#include "cliffhp/gates.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffhp {

GateList parse_gate_list(const std::string& text) {
  GateList gates;
  std::istringstream stream(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name[0] == '#') {
      continue;
    }
    Gate g;
    if (name == "H" || name == "h") {
      g.kind = GateKind::H;
      if (!(ls >> g.a)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": H needs one qubit");
      }
    } else if (name == "S" || name == "s") {
      g.kind = GateKind::S;
      if (!(ls >> g.a)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": S needs one qubit");
      }
    } else if (name == "CNOT" || name == "cnot" || name == "CX" || name == "cx") {
      g.kind = GateKind::CNOT;
      if (!(ls >> g.a >> g.b) || g.a == g.b) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": CNOT needs two distinct qubits");
      }
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate " + name);
    }
    gates.push_back(g);
  }
  return gates;
}

std::string format_gate_list(const GateList& gates) {
  std::string out;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::H:
        out += "H " + std::to_string(g.a) + "\n";
        break;
      case GateKind::S:
        out += "S " + std::to_string(g.a) + "\n";
        break;
      case GateKind::CNOT:
        out += "CNOT " + std::to_string(g.a) + " " + std::to_string(g.b) + "\n";
        break;
    }
  }
  return out;
}

GateList random_circuit(size_t n, size_t num_gates, Rng& rng) {
  if (n == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  GateList gates;
  gates.reserve(num_gates);
  for (size_t i = 0; i < num_gates; ++i) {
    Gate g;
    uint64_t pick = n == 1 ? rng.below(2) : rng.below(3);
    if (pick == 0) {
      g.kind = GateKind::H;
      g.a = static_cast<uint32_t>(rng.below(n));
    } else if (pick == 1) {
      g.kind = GateKind::S;
      g.a = static_cast<uint32_t>(rng.below(n));
    } else {
      g.kind = GateKind::CNOT;
      g.a = static_cast<uint32_t>(rng.below(n));
      g.b = static_cast<uint32_t>(rng.below(n - 1));
      if (g.b >= g.a) {
        ++g.b;
      }
    }
    gates.push_back(g);
  }
  return gates;
}

}  // namespace cliffhp
