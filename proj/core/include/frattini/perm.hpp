#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frattini {

/// A permutation of {0, ..., degree-1} stored as an image array.
/// File formats and printed cycles use 1-based points.
class Perm {
 public:
  Perm() = default;

  /// Validates that `images` is a bijection.
  explicit Perm(std::vector<uint32_t> images);

  static Perm identity(uint32_t degree);

  /// Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the
  /// identity. Points must lie in 1..degree and may appear at most once.
  static Perm from_cycles(const std::string& text, uint32_t degree);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t operator()(uint32_t point) const { return images_[point]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;

  /// Function composition: (a*b)(x) = a(b(x)), i.e. b acts first.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^{-1} * (*this) * g

  uint64_t element_order() const;

  std::string to_cycles() const;

  bool operator==(const Perm& rhs) const = default;
  /// Lexicographic order on image arrays; the identity is minimal.
  std::strong_ordering operator<=>(const Perm& rhs) const = default;

 private:
  std::vector<uint32_t> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace frattini
