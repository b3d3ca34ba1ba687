#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercover/card.hpp"

namespace hypercover {

/// An eventually periodic subset of the naturals, held in canonical form:
///
///   x ∈ S  iff  (x < t and x ∈ fin)  or  (x >= t and x mod p ∈ res)
///
/// with fin ⊂ [0, t), res ⊆ [0, p), p the minimal period of the tail and t
/// the minimal threshold. Two values denote the same set of naturals iff
/// they are structurally equal, so operator== decides extensional equality.
///
/// The class is closed under union, intersection and difference, and
/// membership, emptiness, minimum and cardinality are all decidable. That
/// is exactly the predicate budget the cover constructions need.
class EpSet {
 public:
  /// The empty set.
  EpSet() = default;

  /// Finite set from an arbitrary list of elements (sorted, deduped).
  static EpSet finite(std::vector<std::uint64_t> elems);

  /// Arithmetic progression {start, start+step, start+2*step, ...}.
  static EpSet ap(std::uint64_t start, std::uint64_t step);

  /// All naturals.
  static EpSet naturals() { return ap(0, 1); }

  /// General constructor: the union of the listed elements with the tail
  /// {x >= t : x mod p ∈ res}. Normalizes to canonical form.
  static EpSet make(std::vector<std::uint64_t> elems, std::uint64_t t,
                    std::uint64_t p, std::vector<std::uint64_t> res);

  bool contains(std::uint64_t x) const;
  bool empty() const { return fin_.empty() && res_.empty(); }
  bool is_finite() const { return res_.empty(); }
  Card cardinality() const;

  /// Least element; throws EmptySet on the empty set.
  std::uint64_t min_element() const;

  /// Greatest element of a nonempty finite set; throws otherwise.
  std::uint64_t max_element() const;

  /// The first min(n, |S|) elements in ascending order.
  std::vector<std::uint64_t> enumerate(std::size_t n) const;

  /// Members strictly below the bound, ascending.
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;

  bool subset_of(const EpSet& other) const;

  friend EpSet operator|(const EpSet& a, const EpSet& b);
  friend EpSet operator&(const EpSet& a, const EpSet& b);
  friend EpSet operator-(const EpSet& a, const EpSet& b);

  friend bool operator==(const EpSet&, const EpSet&) = default;

  // Canonical-form accessors.
  const std::vector<std::uint64_t>& finite_part() const { return fin_; }
  std::uint64_t threshold() const { return t_; }
  std::uint64_t period() const { return p_; }
  const std::vector<std::uint64_t>& residues() const { return res_; }

  /// Window on which a pointwise comparison against another value is
  /// complete: max threshold + 2 * lcm of the periods.
  static std::uint64_t joint_window(const EpSet& a, const EpSet& b);

  std::string str() const;

 private:
  bool tail_contains(std::uint64_t x) const;
  void canonicalize();

  std::vector<std::uint64_t> fin_;  // sorted, all < t_
  std::uint64_t t_ = 0;
  std::uint64_t p_ = 1;
  std::vector<std::uint64_t> res_;  // sorted, all < p_
};

/// Named entry point for the three Boolean operations ("union",
/// "intersect", "difference").
EpSet boolean_op(const std::string& op, const EpSet& a, const EpSet& b);

/// Union of the first `count` entries of a layer-indexed sequence
/// (the prefix union X_{<count}).
EpSet prefix_union(const std::vector<EpSet>& layers, std::size_t count);

}  // namespace hypercover
