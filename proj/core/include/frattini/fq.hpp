#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frattini/perm.hpp"

namespace frattini {

bool is_prime(uint64_t n);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);
uint64_t inv_mod(uint64_t a, uint64_t prime_mod);

/// Square matrix over the prime field F_q, entries reduced to [0, q).
class FqMatrix {
 public:
  FqMatrix(uint32_t q, uint32_t dim);
  /// Row-major entries; arbitrary integers are reduced mod q.
  FqMatrix(uint32_t q, uint32_t dim, const std::vector<int64_t>& entries);

  static FqMatrix identity(uint32_t q, uint32_t dim);

  uint32_t q() const { return q_; }
  uint32_t dim() const { return dim_; }
  uint32_t at(uint32_t row, uint32_t col) const { return entries_[row * dim_ + col]; }
  void set(uint32_t row, uint32_t col, uint32_t value) { entries_[row * dim_ + col] = value % q_; }

  FqMatrix operator*(const FqMatrix& rhs) const;
  FqMatrix transpose() const;
  uint32_t det() const;  // Gaussian elimination mod q
  bool invertible() const { return det() != 0; }

  bool operator==(const FqMatrix& rhs) const = default;

  std::string to_string() const;  // [[a,b],[c,d]]

 private:
  uint32_t q_;
  uint32_t dim_;
  std::vector<uint32_t> entries_;
};

/// Canonical indexing of the q^dim - 1 nonzero vectors of F_q^dim:
/// vector v corresponds to point (sum v_i q^i) - 1.
std::vector<uint32_t> decode_vector(uint32_t point, uint32_t q, uint32_t dim);
uint32_t encode_vector(const std::vector<uint32_t>& v, uint32_t q);

/// The permutation of nonzero vectors induced by v -> M v.
/// Requires M invertible.
Perm perm_from_matrix(const FqMatrix& m);

/// Recovers the matrix whose vector action induces `p` (columns are the
/// images of the basis vectors).
FqMatrix matrix_from_perm(const Perm& p, uint32_t q, uint32_t dim);

}  // namespace frattini
