#pragma once

#include <functional>
#include <vector>

#include "hypercover/cover.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/wellorder.hpp"

namespace hypercover {

/// An increasing chain of layers used by the layered assembly operations.
/// A valid cut starts at the empty set and ends at (a superset of) the
/// universe of the hypergraph it is used with.
struct Cut {
  std::vector<EpSet> layers;
};

/// Good cut: the chain starts empty, increases, exhausts the universe
/// exactly, and every edge lands inside some successor layer while meeting
/// the layer before it in fewer than |A| points.
bool is_good_cut(const Hypergraph& h, const Cut& cut);

/// Closure chain for a finite-edge C(k,r) family: each stage adds a seed
/// and then absorbs, to a fixed point, every edge with at least r points
/// inside. A final universe layer is appended when the seeds do not
/// exhaust it. The result is a good cut. Throws PropertyViolated when the
/// C(k,r) check fails or some edge is infinite.
Cut build_closure_chain(const Hypergraph& h, unsigned k, unsigned r,
                        const std::vector<EpSet>& seeds);

/// Same, with the default seed sweep: one singleton per universe element
/// in ascending order.
Cut build_closure_chain(const Hypergraph& h, unsigned k, unsigned r);

/// Contract for a per-piece cover procedure.
using CoverSolver = std::function<WitnessedCover(const Hypergraph&)>;

/// Contract for a per-piece maximizing-order procedure.
using OrderBuilder = std::function<BlockOrder(const Hypergraph&)>;

/// Stage alpha covers the edges that avoid everything chosen so far and
/// fit inside layer alpha+1, traced onto the fresh region; the per-stage
/// witnesses are lifted back to edges of h. With the degenerate cut
/// [empty, universe] this reproduces solve(h) exactly.
WitnessedCover layered_cover(const Hypergraph& h, const Cut& cut,
                             const CoverSolver& solve);

/// Per layer, a maximizing order of the fresh region for the edges that
/// fit inside the layer with a strictly smaller earlier trace; the layers
/// are then stacked. The result maximizes h.
BlockOrder layered_order(const Hypergraph& h, const Cut& cut,
                         const OrderBuilder& build);

/// Least superset of m0 closed under absorbing any edge with at least r
/// points inside. Fixed-point iteration; each edge absorbs at most once.
EpSet r_closure(const Hypergraph& small, const EpSet& m0, unsigned r);

/// Finite-stage two-tier cover for a C(k,r) family whose infinite edges
/// intersect pairwise finitely (B) and which is an antichain (C). Each
/// infinite edge is covered by a fresh point or through a surviving finite
/// edge, an r-closed hull is grown, and the finite edges confined to the
/// hull are solved on the fresh region; a final stage covers the finite
/// edges the hull never reached. Throws PropertyViolated for (A) and
/// HypothesisViolated, naming the condition, for (B) and (C).
WitnessedCover two_tier_cover(const Hypergraph& h, unsigned r, unsigned k);

/// Transversal of a family of infinite edges with pairwise finite
/// intersections: the alpha-th point is the least element of the alpha-th
/// edge avoiding every pairwise intersection seen so far.
std::vector<std::uint64_t> pairwise_transversal(const Hypergraph& h);

/// Lexicographically first brute-force minimal cover, witnessed.
WitnessedCover solve_brute(const Hypergraph& h, std::size_t max_universe = 16);

/// Maximizing order plus extraction for a C(k,r) family.
WitnessedCover solve_maxwo(const Hypergraph& h, unsigned k, unsigned r);

}  // namespace hypercover
