#include "cliffhp/gf2.hpp"

#include <stdexcept>

namespace cliffhp {

Gf2Matrix Gf2Matrix::identity(size_t n) {
  Gf2Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(size_t rows, const std::vector<BitVec>& cols) {
  Gf2Matrix m(rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) {
      throw std::invalid_argument("column length must equal row count");
    }
    for (size_t r = 0; r < rows; ++r) {
      m.set(r, c, cols[c].get(r));
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<BitVec>& rows) {
  if (rows.empty()) {
    return Gf2Matrix(0, 0);
  }
  Gf2Matrix m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      throw std::invalid_argument("ragged rows");
    }
    m.row(r) = rows[r];
  }
  return m;
}

BitVec Gf2Matrix::multiply(const BitVec& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("vector length must equal column count");
  }
  BitVec out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    out.set(r, row_[r].dot(v));
  }
  return out;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("inner dimensions must agree");
  }
  Gf2Matrix out(rows_, other.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t k = 0; k < cols_; ++k) {
      if (row_[r].get(k)) {
        out.row_[r] ^= other.row_[k];
      }
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) {
        out.set(c, r, true);
      }
    }
  }
  return out;
}

BitVec Gf2Matrix::column(size_t c) const {
  BitVec out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    out.set(r, get(r, c));
  }
  return out;
}

size_t Gf2Matrix::rank() const { return Gf2Solver(*this).rank(); }

std::vector<BitVec> Gf2Matrix::kernel_basis() const { return Gf2Solver(*this).kernel_basis(); }

std::optional<BitVec> Gf2Matrix::solve(const BitVec& b) const { return Gf2Solver(*this).solve(b); }

bool Gf2Matrix::image_contains(const BitVec& b) const { return Gf2Solver(*this).in_image(b); }

std::vector<BitVec> Gf2Matrix::image_basis() const { return Gf2Solver(*this).image_basis(); }

Gf2Solver::Gf2Solver(const Gf2Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
  rref_.reserve(rows_);
  transform_.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    rref_.push_back(m.row(r));
    BitVec t(rows_);
    t.set(r, true);
    transform_.push_back(t);
  }

  size_t pivot_row = 0;
  for (size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    size_t sel = pivot_row;
    while (sel < rows_ && !rref_[sel].get(c)) {
      ++sel;
    }
    if (sel == rows_) {
      continue;
    }
    std::swap(rref_[sel], rref_[pivot_row]);
    std::swap(transform_[sel], transform_[pivot_row]);
    for (size_t r = 0; r < rows_; ++r) {
      if (r != pivot_row && rref_[r].get(c)) {
        rref_[r] ^= rref_[pivot_row];
        transform_[r] ^= transform_[pivot_row];
      }
    }
    pivot_cols_.push_back(c);
    ++pivot_row;
  }

  // Kernel: one basis vector per free column, free columns ascending.
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivot_cols_) {
    is_pivot[c] = true;
  }
  for (size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitVec v(cols_);
    v.set(f, true);
    for (size_t r = 0; r < pivot_cols_.size(); ++r) {
      if (rref_[r].get(f)) {
        v.set(pivot_cols_[r], true);
      }
    }
    kernel_.push_back(v);
  }

  image_basis_.reserve(pivot_cols_.size());
  for (size_t c : pivot_cols_) {
    image_basis_.push_back(m.column(c));
  }
}

std::optional<BitVec> Gf2Solver::solve(const BitVec& b) const {
  if (b.size() != rows_) {
    throw std::invalid_argument("rhs length must equal row count");
  }
  BitVec c(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    c.set(r, transform_[r].dot(b));
  }
  for (size_t r = rank(); r < rows_; ++r) {
    if (c.get(r)) {
      return std::nullopt;
    }
  }
  BitVec x(cols_);
  for (size_t r = 0; r < rank(); ++r) {
    x.set(pivot_cols_[r], c.get(r));
  }
  return x;
}

bool Gf2Solver::in_image(const BitVec& b) const {
  if (b.size() != rows_) {
    throw std::invalid_argument("rhs length must equal row count");
  }
  for (size_t r = rank(); r < rows_; ++r) {
    if (transform_[r].dot(b)) {
      return false;
    }
  }
  return true;
}

std::vector<BitVec> Gf2Solver::enumerate_image(size_t max_dim_enumerable) const {
  if (rank() > max_dim_enumerable) {
    throw std::invalid_argument("image too large to enumerate");
  }
  return enumerate_span(image_basis_, rows_);
}

std::vector<BitVec> enumerate_span(const std::vector<BitVec>& basis, size_t width) {
  std::vector<BitVec> out;
  out.reserve(size_t{1} << basis.size());
  out.push_back(BitVec(width));
  for (const BitVec& b : basis) {
    size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i) {
      out.push_back(out[i] ^ b);
    }
  }
  return out;
}

}  // namespace cliffhp
