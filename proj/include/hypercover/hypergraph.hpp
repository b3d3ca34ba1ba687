#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hypercover/epset.hpp"

namespace hypercover {

/// Edge selectors: edges containing a point, edges meeting a set, edges
/// avoiding a set.
struct ContainsPoint {
  std::uint64_t x;
};
struct Meets {
  EpSet y;
};
struct Avoids {
  EpSet y;
};
using Selector = std::variant<ContainsPoint, Meets, Avoids>;

/// Result of a C(k,rho) check: ok, or the least violating k-tuple of edge
/// indices in lexicographic order.
struct CheckCResult {
  std::optional<std::vector<std::size_t>> violation;
  bool ok() const { return !violation.has_value(); }
};

/// A family of nonempty EpSet edges, indexed by position. Duplicate edge
/// denotations are allowed; operations that treat the family as a set of
/// edges (check_c, min_family) collapse them.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::vector<EpSet> edges);

  std::size_t size() const { return edges_.size(); }
  const EpSet& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<EpSet>& edges() const { return edges_; }

  /// Union of all edges.
  EpSet universe() const;

  /// The set of edge cardinalities, sorted ascending.
  std::vector<Card> spectrum() const;

  /// Indices of edges satisfying the selector.
  std::vector<std::size_t> select(const Selector& sel) const;

  /// Indices of edges that are subsets of y.
  std::vector<std::size_t> confine(const EpSet& y) const;

  /// Indices of edges containing x as a subset (the multi-point form of
  /// the contains-point selector).
  std::vector<std::size_t> containing_edges(const EpSet& x) const;

  /// Every k-subset of distinct edges must intersect in fewer than rho
  /// points. k >= 1 and rho Finite(>=1) or Aleph0; duplicates collapse.
  CheckCResult check_c(unsigned k, Card rho) const;

  /// Indices of subset-minimal edges; lowest index kept among duplicates.
  std::vector<std::size_t> min_family() const;

  /// Lint: whether two positions carry the same edge denotation.
  bool has_duplicate_edges() const;

 private:
  std::vector<EpSet> edges_;
};

/// Traces of the edges meeting y, with the map from new indices back to
/// the indices they came from. Never contains an empty edge.
struct Restriction {
  Hypergraph traces;
  std::vector<std::size_t> parent;
};

Restriction restrict_to(const Hypergraph& h, const EpSet& y);

/// The subfamily at the given positions (indices into h).
Hypergraph subhypergraph(const Hypergraph& h,
                         const std::vector<std::size_t>& indices);

/// b is a shrink of a: every edge of b sits inside an edge of a from which
/// fewer than |A| points were removed.
bool is_shrink(const Hypergraph& b, const Hypergraph& a);

}  // namespace hypercover
