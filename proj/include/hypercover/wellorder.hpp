#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hypercover/cover.hpp"
#include "hypercover/hypergraph.hpp"

namespace hypercover {

enum class Ordering { less, equal, greater };

/// A computable well-order of a set of naturals, presented as a stack of
/// blocks with pairwise disjoint ground sets. Earlier blocks sit below
/// later ones; inside a block the inner order applies:
///
///   - natural:      ascending numeric order (type omega or finite),
///   - promoted(v):  numeric order with v lifted above everything else,
///   - nested:       a recursively given block order on the ground set.
///
/// Every inner order is a well-order of type at most omega+1 or recursively
/// well-founded, so every nonempty EpSet subset of the universe has a least
/// element and "greatest element of an edge" is decidable.
class BlockOrder {
 public:
  enum class Inner { natural, promoted, nested };

  struct Block {
    EpSet ground;
    Inner inner = Inner::natural;
    std::uint64_t promoted = 0;              // valid when inner == promoted
    std::shared_ptr<const BlockOrder> sub;   // valid when inner == nested
  };

  BlockOrder() = default;
  explicit BlockOrder(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  /// Union of the block grounds.
  EpSet universe() const;

  /// Throws on overlapping grounds, promoted vertices outside their
  /// ground, or malformed nested orders.
  void validate() const;

 private:
  std::vector<Block> blocks_;
};

/// Strict comparison of two universe members; throws UnknownVertex when
/// either lies outside every block.
Ordering compare(const BlockOrder& ord, std::uint64_t u, std::uint64_t v);

/// B_n = A_n minus the union of the earlier edges. Pairwise disjoint,
/// union equal to the universe; empty entries possible.
std::vector<EpSet> disjointify(const Hypergraph& h);

/// Builds a block order under which every edge of a C(k,r) hypergraph has
/// a greatest element. Requires check_c(h, k, Finite(r)) to pass; throws
/// PropertyViolated otherwise.
BlockOrder build_maximizing(const Hypergraph& h, unsigned k, unsigned r);

/// Greatest element of e under the order, or nullopt when e has none.
/// Throws EmptyEdge on an empty e and UnknownVertex when e is not
/// contained in the order's universe.
std::optional<std::uint64_t> edge_max(const BlockOrder& ord, const EpSet& e);

/// Does every edge of h have a greatest element under ord? Requires the
/// universe of h to be contained in the universe of ord (UniverseMismatch
/// otherwise).
bool is_maximizing(const BlockOrder& ord, const Hypergraph& h);

/// Extracts a minimal vertex cover from a maximizing order: the edge
/// maxima are processed in ascending order and a value v is admitted iff
/// some edge with greatest element v is still disjoint from the cover so
/// far; that edge becomes its witness. Throws NotMaximizing when some edge
/// has no greatest element.
WitnessedCover extract_cover(const BlockOrder& ord, const Hypergraph& h);

}  // namespace hypercover
