#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffhp/bitvec.hpp"

namespace cliffhp {

// Phased n-qubit Pauli operator i^k * prod_j X_j^{x_j} Z_j^{z_j}, with X
// written left of Z on each qubit and k in Z_4. In this convention Y = iXZ.
class PauliOperator {
 public:
  PauliOperator() = default;

  static PauliOperator identity(size_t n) { return PauliOperator(n); }

  static PauliOperator from_parts(BitVec x, BitVec z, uint8_t phase);

  // Positive Pauli string with the given bits: phase = (#qubits with both
  // bits set) mod 4, so e.g. bits (1,1) give the textbook Y.
  static PauliOperator hermitian(BitVec x, BitVec z);

  // Single X/Y/Z at one qubit, identity elsewhere, positive sign.
  static PauliOperator single(size_t n, size_t qubit, char which);

  // Parses "XYZ", "-iXZ", "+IIY", ... Prefix is one of "", "+", "-", "+i",
  // "-i", "i".
  static PauliOperator from_string(const std::string& s);

  size_t num_qubits() const { return n_; }
  uint8_t phase() const { return phase_; }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  bool x_bit(size_t j) const { return x_.get(j); }
  bool z_bit(size_t j) const { return z_.get(j); }

  bool is_identity() const { return x_.is_zero() && z_.is_zero() && phase_ == 0; }
  bool has_trivial_bits() const { return x_.is_zero() && z_.is_zero(); }
  bool is_hermitian() const { return (phase_ & 1) == (x_.and_popcount(z_) & 1); }

  PauliOperator dagger() const;
  PauliOperator negated() const;

  // Concatenation onto disjoint registers: this on the first block, other on
  // the second. Phases add.
  PauliOperator tensor(const PauliOperator& other) const;

  // Same width, bits kept only on `subset`, phase reset to 0.
  PauliOperator restricted_to(const std::vector<size_t>& subset) const;

  // Compact extraction of `len` consecutive qubits starting at `start`;
  // phase reset to 0.
  PauliOperator slice(size_t start, size_t len) const;

  // This operator placed at wire offset inside a larger register of
  // `total_n` qubits; phase preserved.
  PauliOperator embedded(size_t total_n, size_t offset) const;
  PauliOperator embedded_at(size_t total_n, const std::vector<size_t>& wires) const;

  // (x_0..x_{n-1}, z_0..z_{n-1}) as 2n bits.
  BitVec symplectic_vector() const { return x_.concat(z_); }
  static PauliOperator hermitian_from_symplectic(const BitVec& v);

  std::string to_string() const;

  // "(k; x-bits; z-bits)" form used in JSON dumps.
  std::string to_compact() const;
  static PauliOperator from_compact(const std::string& s);

  bool operator==(const PauliOperator& other) const = default;

 private:
  explicit PauliOperator(size_t n) : n_(n), x_(n), z_(n) {}

  size_t n_ = 0;
  BitVec x_;
  BitVec z_;
  uint8_t phase_ = 0;

  friend PauliOperator multiply(const PauliOperator&, const PauliOperator&);
};

// Exact group product with Z_4 phase bookkeeping.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

// (-1)^{p.x * q.z + p.z * q.x}; equals Tr(PQP^dag Q^dag)/2^n.
int commutator_sign(const PauliOperator& p, const PauliOperator& q);

}  // namespace cliffhp
