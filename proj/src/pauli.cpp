#include "cliffhp/pauli.hpp"

#include <stdexcept>

namespace cliffhp {

namespace {

void check_same_width(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli operators act on different qubit counts");
  }
}

}  // namespace

PauliOperator PauliOperator::from_parts(BitVec x, BitVec z, uint8_t phase) {
  if (x.size() != z.size()) {
    throw std::invalid_argument("x and z parts must have equal length");
  }
  PauliOperator p(x.size());
  p.x_ = std::move(x);
  p.z_ = std::move(z);
  p.phase_ = phase & 3;
  return p;
}

PauliOperator PauliOperator::hermitian(BitVec x, BitVec z) {
  uint8_t k = static_cast<uint8_t>(x.and_popcount(z) & 3);
  return from_parts(std::move(x), std::move(z), k);
}

PauliOperator PauliOperator::hermitian_from_symplectic(const BitVec& v) {
  if (v.size() % 2 != 0) {
    throw std::invalid_argument("symplectic vector must have even length");
  }
  size_t n = v.size() / 2;
  return hermitian(v.slice(0, n), v.slice(n, n));
}

PauliOperator PauliOperator::single(size_t n, size_t qubit, char which) {
  if (qubit >= n) {
    throw std::out_of_range("qubit index out of range");
  }
  BitVec x(n), z(n);
  switch (which) {
    case 'X':
      x.set(qubit, true);
      break;
    case 'Z':
      z.set(qubit, true);
      break;
    case 'Y':
      x.set(qubit, true);
      z.set(qubit, true);
      break;
    default:
      throw std::invalid_argument("single-qubit Pauli must be X, Y or Z");
  }
  return hermitian(std::move(x), std::move(z));
}

PauliOperator PauliOperator::from_string(const std::string& s) {
  size_t i = 0;
  uint8_t prefix = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i < s.size() && s[i] == 'i') {
    prefix = 1;
    ++i;
  }
  if (neg) {
    prefix = (prefix + 2) & 3;
  }
  size_t n = s.size() - i;
  BitVec x(n), z(n);
  for (size_t j = 0; j < n; ++j) {
    switch (s[i + j]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x.set(j, true);
        break;
      case 'Z':
        z.set(j, true);
        break;
      case 'Y':
        x.set(j, true);
        z.set(j, true);
        break;
      default:
        throw std::invalid_argument("invalid Pauli letter in string");
    }
  }
  uint8_t k = static_cast<uint8_t>((x.and_popcount(z) + prefix) & 3);
  return from_parts(std::move(x), std::move(z), k);
}

PauliOperator PauliOperator::dagger() const {
  PauliOperator p = *this;
  uint8_t xz = static_cast<uint8_t>(2 * (x_.and_popcount(z_) & 1));
  p.phase_ = static_cast<uint8_t>((4 - phase_ + xz) & 3);
  return p;
}

PauliOperator PauliOperator::negated() const {
  PauliOperator p = *this;
  p.phase_ = (p.phase_ + 2) & 3;
  return p;
}

PauliOperator PauliOperator::tensor(const PauliOperator& other) const {
  PauliOperator p(n_ + other.n_);
  p.x_ = x_.concat(other.x_);
  p.z_ = z_.concat(other.z_);
  p.phase_ = (phase_ + other.phase_) & 3;
  return p;
}

PauliOperator PauliOperator::restricted_to(const std::vector<size_t>& subset) const {
  PauliOperator p(n_);
  for (size_t q : subset) {
    if (q >= n_) {
      throw std::out_of_range("restriction subset out of range");
    }
    p.x_.set(q, x_.get(q));
    p.z_.set(q, z_.get(q));
  }
  return p;
}

PauliOperator PauliOperator::slice(size_t start, size_t len) const {
  PauliOperator p(len);
  p.x_ = x_.slice(start, len);
  p.z_ = z_.slice(start, len);
  return p;
}

PauliOperator PauliOperator::embedded(size_t total_n, size_t offset) const {
  if (offset + n_ > total_n) {
    throw std::out_of_range("embedding exceeds register size");
  }
  PauliOperator p(total_n);
  for (size_t j = 0; j < n_; ++j) {
    p.x_.set(offset + j, x_.get(j));
    p.z_.set(offset + j, z_.get(j));
  }
  p.phase_ = phase_;
  return p;
}

PauliOperator PauliOperator::embedded_at(size_t total_n, const std::vector<size_t>& wires) const {
  if (wires.size() != n_) {
    throw std::invalid_argument("wire list length must match qubit count");
  }
  PauliOperator p(total_n);
  for (size_t j = 0; j < n_; ++j) {
    if (wires[j] >= total_n) {
      throw std::out_of_range("embedding wire out of range");
    }
    p.x_.set(wires[j], x_.get(j));
    p.z_.set(wires[j], z_.get(j));
  }
  p.phase_ = phase_;
  return p;
}

std::string PauliOperator::to_string() const {
  static const char* prefixes[] = {"+", "+i", "-", "-i"};
  uint8_t head = static_cast<uint8_t>((phase_ + 4 - (x_.and_popcount(z_) & 3)) & 3);
  std::string s = prefixes[head];
  for (size_t j = 0; j < n_; ++j) {
    bool xb = x_.get(j), zb = z_.get(j);
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

std::string PauliOperator::to_compact() const {
  return "(" + std::to_string(phase_) + "; " + x_.to_string01() + "; " + z_.to_string01() + ")";
}

PauliOperator PauliOperator::from_compact(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("compact Pauli must look like (k; x; z)");
  }
  std::string body = s.substr(1, s.size() - 2);
  auto split = [&](const std::string& str, size_t& pos) {
    size_t semi = str.find(';', pos);
    std::string part = str.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    pos = semi == std::string::npos ? str.size() : semi + 1;
    size_t a = part.find_first_not_of(' ');
    size_t b = part.find_last_not_of(' ');
    return a == std::string::npos ? std::string() : part.substr(a, b - a + 1);
  };
  size_t pos = 0;
  std::string k_str = split(body, pos);
  std::string x_str = split(body, pos);
  std::string z_str = split(body, pos);
  return from_parts(BitVec::from_string01(x_str), BitVec::from_string01(z_str),
                    static_cast<uint8_t>(std::stoi(k_str)));
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  check_same_width(p, q);
  PauliOperator r(p.n_);
  r.x_ = p.x_ ^ q.x_;
  r.z_ = p.z_ ^ q.z_;
  // Z^{z_p} X^{x_q} reorder contributes (-1)^{z_p . x_q}.
  uint8_t swap = static_cast<uint8_t>(2 * (p.z_.and_popcount(q.x_) & 1));
  r.phase_ = static_cast<uint8_t>((p.phase_ + q.phase_ + swap) & 3);
  return r;
}

int commutator_sign(const PauliOperator& p, const PauliOperator& q) {
  check_same_width(p, q);
  bool anti = p.x().dot(q.z()) ^ p.z().dot(q.x());
  return anti ? -1 : 1;
}

}  // namespace cliffhp
