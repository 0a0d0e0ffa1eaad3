#pragma once

#include <string>
#include <vector>

#include "cliffhp/gates.hpp"
#include "cliffhp/gf2.hpp"
#include "cliffhp/pauli.hpp"
#include "cliffhp/rng.hpp"

namespace cliffhp {

// Clifford operator represented by its conjugation action: the images
// U X_j U^dag and U Z_j U^dag with exact phases. Global phase of U is not
// represented.
class CliffordTableau {
 public:
  static CliffordTableau identity(size_t n);
  static CliffordTableau from_images(std::vector<PauliOperator> x_images,
                                     std::vector<PauliOperator> z_images);
  static CliffordTableau from_gates(size_t n, const GateList& gates);

  // Uniform over the n-qubit Clifford group mod global phase: uniform
  // symplectic part by sequential symplectic-basis completion, then uniform
  // sign bits on all 2n generator images.
  static CliffordTableau random(size_t n, Rng& rng);

  size_t num_qubits() const { return n_; }
  const PauliOperator& x_image(size_t j) const { return x_images_.at(j); }
  const PauliOperator& z_image(size_t j) const { return z_images_.at(j); }

  // U P U^dag with exact phase.
  PauliOperator conjugate(const PauliOperator& p) const;

  // Conjugation by U acting on the given wires of a larger register.
  PauliOperator conjugate_embedded(const PauliOperator& p, const std::vector<size_t>& wires) const;

  CliffordTableau inverse() const;

  // Tableau of U* (complex conjugation in the computational basis): same bit
  // images, negated phases.
  CliffordTableau star() const;

  // Left-multiplication U <- G U for a single gate G.
  void prepend_h(size_t q);
  void prepend_s(size_t q);
  void prepend_cnot(size_t control, size_t target);

  // 2n x 2n symplectic matrix; column j is the symplectic vector of the
  // image of the j-th generator (X_0..X_{n-1}, Z_0..Z_{n-1}).
  Gf2Matrix symplectic_matrix() const;

  // Checks canonical commutation of images and Hermiticity of image phases.
  bool is_valid() const;

  std::string to_json() const;
  static CliffordTableau from_json(const std::string& text);

  bool operator==(const CliffordTableau& other) const = default;

 private:
  CliffordTableau() = default;

  size_t n_ = 0;
  std::vector<PauliOperator> x_images_;
  std::vector<PauliOperator> z_images_;
};

// Tableau of the unitary product u*v (apply v first).
CliffordTableau compose(const CliffordTableau& u, const CliffordTableau& v);

}  // namespace cliffhp
