#pragma once

#include <optional>
#include <vector>

#include "cliffhp/bitvec.hpp"

namespace cliffhp {

// Dense bit matrix over GF(2), row-major packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

  static Gf2Matrix identity(size_t n);
  static Gf2Matrix from_columns(size_t rows, const std::vector<BitVec>& cols);
  static Gf2Matrix from_rows(const std::vector<BitVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const { return row_.at(r).get(c); }
  void set(size_t r, size_t c, bool v) { row_.at(r).set(c, v); }
  const BitVec& row(size_t r) const { return row_.at(r); }
  BitVec& row(size_t r) { return row_.at(r); }

  BitVec multiply(const BitVec& v) const;
  Gf2Matrix multiply(const Gf2Matrix& other) const;
  Gf2Matrix transposed() const;
  BitVec column(size_t c) const;

  size_t rank() const;
  std::vector<BitVec> kernel_basis() const;
  std::optional<BitVec> solve(const BitVec& b) const;
  bool image_contains(const BitVec& b) const;
  std::vector<BitVec> image_basis() const;

  bool operator==(const Gf2Matrix& other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<BitVec> row_;
};

// One-time Gaussian elimination with lowest-index pivoting; answers repeated
// solve / membership / kernel queries against the same matrix. Pivot choice
// is deterministic so particular solutions are reproducible across runs.
class Gf2Solver {
 public:
  explicit Gf2Solver(const Gf2Matrix& m);

  size_t rank() const { return pivot_cols_.size(); }
  size_t kernel_dim() const { return cols_ - rank(); }

  // Particular solution with all free variables set to zero, or nullopt.
  std::optional<BitVec> solve(const BitVec& b) const;
  bool in_image(const BitVec& b) const;
  const std::vector<BitVec>& kernel_basis() const { return kernel_; }

  // Basis of the column space: the original matrix's pivot columns.
  const std::vector<BitVec>& image_basis() const { return image_basis_; }

  // All 2^k image vectors, ordered by deterministic basis combination index.
  // Throws if k exceeds max_dim_enumerable.
  std::vector<BitVec> enumerate_image(size_t max_dim_enumerable = 24) const;

 private:
  size_t rows_;
  size_t cols_;
  std::vector<BitVec> rref_;          // row-reduced form of the input
  std::vector<BitVec> transform_;     // T with T*A = rref
  std::vector<size_t> pivot_cols_;
  std::vector<BitVec> kernel_;
  std::vector<BitVec> image_basis_;
};

// Enumerates all 2^k combinations of the given basis vectors (including the
// zero vector), in deterministic combination-index order.
std::vector<BitVec> enumerate_span(const std::vector<BitVec>& basis, size_t width);

}  // namespace cliffhp
