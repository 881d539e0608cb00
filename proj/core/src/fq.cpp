#include "frattini/fq.hpp"

#include <sstream>

#include "frattini/errors.hpp"

namespace frattini {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  base %= mod;
  uint64_t result = 1 % mod;
  while (exp > 0) {
    if (exp & 1) result = (__uint128_t(result) * base) % mod;
    base = (__uint128_t(base) * base) % mod;
    exp >>= 1;
  }
  return result;
}

uint64_t inv_mod(uint64_t a, uint64_t prime_mod) {
  a %= prime_mod;
  if (a == 0) throw DomainError("division by zero mod " + std::to_string(prime_mod));
  return pow_mod(a, prime_mod - 2, prime_mod);
}

FqMatrix::FqMatrix(uint32_t q, uint32_t dim) : q_(q), dim_(dim), entries_(size_t(dim) * dim, 0) {
  if (!is_prime(q)) throw DomainError("matrix modulus " + std::to_string(q) + " is not prime");
  if (dim == 0) throw DomainError("matrix dimension must be positive");
}

FqMatrix::FqMatrix(uint32_t q, uint32_t dim, const std::vector<int64_t>& entries) : FqMatrix(q, dim) {
  if (entries.size() != size_t(dim) * dim) {
    throw DomainError("expected " + std::to_string(size_t(dim) * dim) + " matrix entries");
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    int64_t r = entries[i] % int64_t(q);
    if (r < 0) r += q;
    entries_[i] = static_cast<uint32_t>(r);
  }
}

FqMatrix FqMatrix::identity(uint32_t q, uint32_t dim) {
  FqMatrix m(q, dim);
  for (uint32_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (q_ != rhs.q_ || dim_ != rhs.dim_) throw DomainError("matrix shape/modulus mismatch");
  FqMatrix out(q_, dim_);
  for (uint32_t i = 0; i < dim_; ++i) {
    for (uint32_t k = 0; k < dim_; ++k) {
      uint64_t a = at(i, k);
      if (a == 0) continue;
      for (uint32_t j = 0; j < dim_; ++j) {
        out.entries_[i * dim_ + j] =
            static_cast<uint32_t>((out.entries_[i * dim_ + j] + a * rhs.at(k, j)) % q_);
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(q_, dim_);
  for (uint32_t i = 0; i < dim_; ++i) {
    for (uint32_t j = 0; j < dim_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

uint32_t FqMatrix::det() const {
  std::vector<uint64_t> work(entries_.begin(), entries_.end());
  auto el = [&](uint32_t r, uint32_t c) -> uint64_t& { return work[r * dim_ + c]; };
  uint64_t det = 1;
  for (uint32_t col = 0; col < dim_; ++col) {
    uint32_t pivot = col;
    while (pivot < dim_ && el(pivot, col) == 0) ++pivot;
    if (pivot == dim_) return 0;
    if (pivot != col) {
      for (uint32_t j = 0; j < dim_; ++j) std::swap(el(pivot, j), el(col, j));
      det = (det * (q_ - 1)) % q_;  // row swap flips the sign
    }
    det = (det * el(col, col)) % q_;
    uint64_t inv = inv_mod(el(col, col), q_);
    for (uint32_t row = col + 1; row < dim_; ++row) {
      if (el(row, col) == 0) continue;
      uint64_t factor = (el(row, col) * inv) % q_;
      for (uint32_t j = col; j < dim_; ++j) {
        el(row, j) = (el(row, j) + (q_ - factor) * el(col, j)) % q_;
      }
    }
  }
  return static_cast<uint32_t>(det);
}

std::string FqMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (uint32_t i = 0; i < dim_; ++i) {
    if (i) out << ',';
    out << '[';
    for (uint32_t j = 0; j < dim_; ++j) {
      if (j) out << ',';
      out << at(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::vector<uint32_t> decode_vector(uint32_t point, uint32_t q, uint32_t dim) {
  std::vector<uint32_t> v(dim);
  uint64_t k = uint64_t(point) + 1;
  for (uint32_t i = 0; i < dim; ++i) {
    v[i] = static_cast<uint32_t>(k % q);
    k /= q;
  }
  return v;
}

uint32_t encode_vector(const std::vector<uint32_t>& v, uint32_t q) {
  uint64_t k = 0;
  uint64_t pw = 1;
  for (uint32_t digit : v) {
    k += uint64_t(digit % q) * pw;
    pw *= q;
  }
  if (k == 0) throw DomainError("zero vector has no point index");
  return static_cast<uint32_t>(k - 1);
}

Perm perm_from_matrix(const FqMatrix& m) {
  if (!m.invertible()) throw DomainError("singular generator: " + m.to_string());
  uint64_t n_points = 1;
  for (uint32_t i = 0; i < m.dim(); ++i) n_points *= m.q();
  n_points -= 1;
  std::vector<uint32_t> images(n_points);
  std::vector<uint32_t> w(m.dim());
  for (uint32_t point = 0; point < n_points; ++point) {
    std::vector<uint32_t> v = decode_vector(point, m.q(), m.dim());
    for (uint32_t i = 0; i < m.dim(); ++i) {
      uint64_t acc = 0;
      for (uint32_t j = 0; j < m.dim(); ++j) acc += uint64_t(m.at(i, j)) * v[j];
      w[i] = static_cast<uint32_t>(acc % m.q());
    }
    images[point] = encode_vector(w, m.q());
  }
  return Perm(std::move(images));
}

FqMatrix matrix_from_perm(const Perm& p, uint32_t q, uint32_t dim) {
  FqMatrix m(q, dim);
  uint64_t pw = 1;
  for (uint32_t j = 0; j < dim; ++j) {
    // basis vector e_j sits at point q^j - 1
    uint32_t image_point = p(static_cast<uint32_t>(pw - 1));
    std::vector<uint32_t> col = decode_vector(image_point, q, dim);
    for (uint32_t i = 0; i < dim; ++i) m.set(i, j, col[i]);
    pw *= q;
  }
  return m;
}

}  // namespace frattini
