#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffhp {

// Fixed-length bit vector packed into 64-bit words. All inner products and
// parities go through popcount.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec zeros(size_t n) { return BitVec(n); }

  static BitVec from_u64(size_t n, uint64_t bits) {
    if (n > 64) {
      throw std::invalid_argument("from_u64 requires n <= 64");
    }
    BitVec v(n);
    if (n > 0) {
      v.w_[0] = n == 64 ? bits : (bits & ((uint64_t{1} << n) - 1));
    }
    return v;
  }

  size_t size() const { return n_; }

  bool get(size_t i) const {
    check_index(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void set(size_t i, bool value) {
    check_index(i);
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }

  void flip(size_t i) {
    check_index(i);
    w_[i >> 6] ^= uint64_t{1} << (i & 63);
  }

  BitVec& operator^=(const BitVec& other) {
    check_same_size(other);
    for (size_t k = 0; k < w_.size(); ++k) {
      w_[k] ^= other.w_[k];
    }
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  // Parity of the AND with `other`: sum_i a_i * b_i mod 2.
  bool dot(const BitVec& other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) {
      acc ^= w_[k] & other.w_[k];
    }
    return std::popcount(acc) & 1;
  }

  size_t popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) {
      c += std::popcount(w);
    }
    return c;
  }

  size_t and_popcount(const BitVec& other) const {
    check_same_size(other);
    size_t c = 0;
    for (size_t k = 0; k < w_.size(); ++k) {
      c += std::popcount(w_[k] & other.w_[k]);
    }
    return c;
  }

  bool is_zero() const {
    for (uint64_t w : w_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool operator==(const BitVec& other) const = default;

  // Lexicographic by length then bit content; gives deterministic map keys.
  std::strong_ordering operator<=>(const BitVec& other) const {
    if (n_ != other.n_) {
      return n_ <=> other.n_;
    }
    for (size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] != other.w_[k]) {
        return w_[k] <=> other.w_[k];
      }
    }
    return std::strong_ordering::equal;
  }

  BitVec concat(const BitVec& other) const {
    BitVec out(n_ + other.n_);
    for (size_t i = 0; i < n_; ++i) {
      out.set(i, get(i));
    }
    for (size_t i = 0; i < other.n_; ++i) {
      out.set(n_ + i, other.get(i));
    }
    return out;
  }

  BitVec slice(size_t start, size_t len) const {
    if (start + len > n_) {
      throw std::out_of_range("slice out of range");
    }
    BitVec out(len);
    for (size_t i = 0; i < len; ++i) {
      out.set(i, get(start + i));
    }
    return out;
  }

  uint64_t to_u64() const {
    if (n_ > 64) {
      throw std::invalid_argument("to_u64 requires n <= 64");
    }
    return w_.empty() ? 0 : w_[0];
  }

  std::string to_string01() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i) {
      if (get(i)) {
        s[i] = '1';
      }
    }
    return s;
  }

  static BitVec from_string01(const std::string& s) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string must contain only 0/1");
      }
    }
    return v;
  }

 private:
  void check_index(size_t i) const {
    if (i >= n_) {
      throw std::out_of_range("bit index out of range");
    }
  }
  void check_same_size(const BitVec& other) const {
    if (n_ != other.n_) {
      throw std::invalid_argument("bit vector size mismatch");
    }
  }

  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace cliffhp
