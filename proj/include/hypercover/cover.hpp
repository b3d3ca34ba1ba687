#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

/// A finite vertex cover together with a witnessing map: for every point y,
/// witness(y) names an edge E of the ambient hypergraph with E ∩ Y = {y}.
/// Such a map exists iff the cover is minimal.
struct WitnessedCover {
  std::map<std::uint64_t, std::size_t> witness;

  std::vector<std::uint64_t> points() const;
  EpSet point_set() const;

  friend bool operator==(const WitnessedCover&, const WitnessedCover&) =
      default;
};

/// The first ascending point that admits no witness edge.
struct NoWitness {
  std::uint64_t point;
};

using WitnessSearch = std::variant<WitnessedCover, NoWitness>;

/// Does y meet every edge of h?
bool is_cover(const Hypergraph& h, const EpSet& y);

/// For a cover Y, find a witnessing map (lowest admissible edge index per
/// point) or report the first point without one. Throws NotACover when Y
/// is not a cover.
WitnessSearch find_witness(const Hypergraph& h,
                           const std::vector<std::uint64_t>& y);

/// Greedy pruning: repeatedly drop the largest removable point, then attach
/// the witness (which must exist). Throws NotACover on a non-cover.
WitnessedCover minimalize(const Hypergraph& h,
                          const std::vector<std::uint64_t>& y);

/// All minimal vertex covers of a finite hypergraph, sorted
/// lexicographically. Requires every edge finite and the vertex universe
/// no larger than max_universe; throws TooLarge otherwise.
std::vector<std::vector<std::uint64_t>> brute_minimal_covers(
    const Hypergraph& h, std::size_t max_universe = 16);

/// Full invariant check of a witnessed cover against its hypergraph:
/// cover property, witness property, injectivity.
bool verify_witnessed_cover(const Hypergraph& h, const WitnessedCover& wc);

}  // namespace hypercover
