#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frattini/fq.hpp"
#include "frattini/perm.hpp"

namespace frattini {

struct GroupLimits {
  uint64_t enumeration_cap = 1'000'000;  // max group order materialized
  uint32_t degree_cap = 100'000;         // max permutation points
};

/// Matrix-group provenance for groups built over F_q. The structural
/// algorithms all run on the permutation action on nonzero vectors of
/// F_q^dim; the matrices are kept so elements can be reported in matrix
/// form and defining conditions (det, form preservation) can be checked.
struct MatqContext {
  uint32_t q = 0;
  uint32_t dim = 0;
  std::vector<FqMatrix> generator_matrices;
};

namespace internal {
struct GroupData;
}

/// A concretely represented finite group with value semantics. Copies
/// share enumeration and stabilizer-chain caches; all caches are
/// populated under a once-guard, so values are safe for concurrent
/// reads after construction.
class FiniteGroup {
 public:
  /// Trivial group on one point.
  FiniteGroup();

  static FiniteGroup from_perm_generators(uint32_t degree, std::vector<Perm> generators,
                                          const GroupLimits& limits = {});
  /// Builds the faithful permutation action of the matrix group on the
  /// nonzero vectors of F_q^dim. Throws on singular generators or
  /// non-prime q.
  static FiniteGroup from_matrix_generators(uint32_t q, uint32_t dim,
                                            const std::vector<FqMatrix>& generators,
                                            const GroupLimits& limits = {});
  static FiniteGroup trivial(uint32_t degree = 1, const GroupLimits& limits = {});

  uint32_t degree() const;
  /// Normalized generator list: duplicates and identity elements dropped.
  const std::vector<Perm>& generators() const;
  const std::optional<MatqContext>& matq() const;
  const GroupLimits& limits() const;

  /// Exact order via a deterministic stabilizer chain. Throws
  /// CapExceededError when the order exceeds the enumeration cap.
  uint64_t order() const;
  bool contains(const Perm& x) const;
  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }

  /// All elements in canonical order (lexicographic on image arrays, so
  /// the identity is first). Materialized lazily; capped.
  const std::vector<Perm>& elements() const;
  std::optional<uint32_t> find_index(const Perm& x) const;

  /// Matrix form of an element of a matq-backed group.
  FqMatrix matrix_of(const Perm& x) const;

  /// Structural equality: same degree and same normalized generators
  /// (or same shared representation).
  bool same_group(const FiniteGroup& other) const;

 private:
  explicit FiniteGroup(std::shared_ptr<internal::GroupData> data);
  std::shared_ptr<internal::GroupData> data_;
};

/// A subgroup presented by generators inside a parent group. Generator
/// membership in the parent is always verified at construction.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<Perm> generators);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const;
  const std::vector<Perm>& generators() const;

  /// The subgroup as a standalone group on the parent's points. Cached;
  /// propagates the parent's matq context.
  const FiniteGroup& as_group() const;

  uint64_t order() const { return as_group().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& x) const { return as_group().contains(x); }
  /// Sorted canonical element list.
  const std::vector<Perm>& elements() const { return as_group().elements(); }

  bool contains_subgroup(const Subgroup& other) const;
  bool same_elements(const Subgroup& other) const;
  bool is_normal_in_parent() const;

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

/// Closure of a generator list as a sorted element vector (always
/// contains the identity). Throws CapExceededError past `cap`.
std::vector<Perm> closure_elements(const std::vector<Perm>& generators, uint32_t degree,
                                   uint64_t cap);

/// Smallest subgroup of g containing `elems` (⟨∅⟩ is trivial). Elements
/// must belong to g.
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Perm>& elems);

/// Builds a Subgroup from a known subgroup element set (sorted), with a
/// small generating set extracted greedily in canonical order. Throws
/// DomainError if the set is not closed.
Subgroup subgroup_from_elements(const FiniteGroup& g, const std::vector<Perm>& sorted_elements);

/// Smallest normal subgroup of g containing `elems`.
Subgroup normal_closure(const FiniteGroup& g, const std::vector<Perm>& elems);

Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);

/// {x in g : xh = hx for all h in h_sub}; h_sub must be a subgroup of g.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h_sub);

struct NilpotencyResult {
  bool nilpotent = false;
  /// Orders along the lower central series, starting with |G|.
  std::vector<uint64_t> series_orders;
};
NilpotencyResult is_nilpotent(const FiniteGroup& g);

/// One representative per conjugacy class, ascending in the canonical
/// element order (so the identity is first).
std::vector<Perm> conjugacy_class_representatives(const FiniteGroup& g);

struct SemisimpleReport {
  bool is_simple = false;
  bool is_product_of_nonabelian_simples = false;
  std::vector<Subgroup> factors;
};
/// is_simple: every nontrivial single-element normal closure is the whole
/// group (the trivial group is not considered simple).
/// is_product_of_nonabelian_simples: g is the internal direct product of
/// its minimal normal subgroups and each is nonabelian simple.
SemisimpleReport socle_semisimple_check(const FiniteGroup& g);

// Set helpers on sorted element vectors.
std::vector<Perm> intersect_sorted(const std::vector<Perm>& a, const std::vector<Perm>& b);
bool includes_sorted(const std::vector<Perm>& big, const std::vector<Perm>& small);

/// Cycle string, or matrix form when the group is matq-backed.
std::string element_label(const FiniteGroup& g, const Perm& x);

}  // namespace frattini
