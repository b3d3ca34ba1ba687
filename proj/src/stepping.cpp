#include "hypercover/stepping.hpp"

#include <algorithm>

#include "hypercover/errors.hpp"

namespace hypercover {

bool is_good_cut(const Hypergraph& h, const Cut& cut) {
  const auto& g = cut.layers;
  if (g.empty() || !g.front().empty()) return false;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (!g[i].subset_of(g[i + 1])) return false;
  if (!(g.back() == h.universe())) return false;

  for (std::size_t e = 0; e < h.size(); ++e) {
    const EpSet& a = h.edge(e);
    bool captured = false;
    for (std::size_t i = 0; i + 1 < g.size() && !captured; ++i)
      captured = a.subset_of(g[i + 1]) &&
                 (g[i] & a).cardinality() < a.cardinality();
    if (!captured) return false;
  }
  return true;
}

Cut build_closure_chain(const Hypergraph& h, unsigned k, unsigned r,
                        const std::vector<EpSet>& seeds) {
  CheckCResult cc = h.check_c(k, Card::finite(r));
  if (!cc.ok()) raise(Errc::property_violated, "family lacks C(k,r)");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h.edge(i).is_finite())
      raise(Errc::property_violated,
            "edge " + std::to_string(i) + " is infinite");

  Cut cut;
  cut.layers.push_back(EpSet());
  EpSet m;
  for (const EpSet& seed : seeds) {
    m = r_closure(h, m | seed, r);
    cut.layers.push_back(m);
  }
  EpSet u = h.universe();
  if (!(m == u)) cut.layers.push_back(u);
  return cut;
}

Cut build_closure_chain(const Hypergraph& h, unsigned k, unsigned r) {
  EpSet u = h.universe();
  std::vector<EpSet> seeds;
  for (std::uint64_t v : u.finite_part()) seeds.push_back(EpSet::finite({v}));
  return build_closure_chain(h, k, r, seeds);
}

EpSet r_closure(const Hypergraph& small, const EpSet& m0, unsigned r) {
  if (r < 1) raise(Errc::bad_arity, "r must be >= 1");
  EpSet m = m0;
  std::vector<bool> absorbed(small.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (absorbed[i]) continue;
      if ((small.edge(i) & m).cardinality() >= Card::finite(r)) {
        m = m | small.edge(i);
        absorbed[i] = true;
        changed = true;
      }
    }
  }
  return m;
}

namespace {

void merge_stage(WitnessedCover& total, const WitnessedCover& stage,
                 const std::vector<std::size_t>& lift) {
  for (const auto& [y, e] : stage.witness) {
    if (e >= lift.size()) raise(Errc::solver_failure, "witness index range");
    if (!total.witness.emplace(y, lift[e]).second)
      raise(Errc::solver_failure, "stages overlap on a cover point");
  }
}

}  // namespace

WitnessedCover layered_cover(const Hypergraph& h, const Cut& cut,
                             const CoverSolver& solve) {
  if (!is_good_cut(h, cut)) raise(Errc::bad_cut, "not a good cut");

  WitnessedCover total;
  for (std::size_t a = 0; a + 1 < cut.layers.size(); ++a) {
    const EpSet& lo = cut.layers[a];
    const EpSet& hi = cut.layers[a + 1];
    EpSet fresh = hi - lo;
    EpSet chosen = total.point_set();

    // Edges avoiding everything chosen so far and confined to the layer.
    std::vector<std::size_t> live;
    for (std::size_t e = 0; e < h.size(); ++e)
      if ((h.edge(e) & chosen).empty() && h.edge(e).subset_of(hi))
        live.push_back(e);

    Restriction piece = restrict_to(subhypergraph(h, live), fresh);
    if (piece.traces.size() != live.size())
      raise(Errc::solver_failure,
            "an uncovered edge fell entirely inside an earlier layer");
    if (piece.traces.size() == 0) continue;

    WitnessedCover stage = solve(piece.traces);
    if (!verify_witnessed_cover(piece.traces, stage))
      raise(Errc::solver_failure, "stage output failed verification");

    std::vector<std::size_t> lift;
    for (std::size_t j : piece.parent) lift.push_back(live[j]);
    merge_stage(total, stage, lift);
  }
  return total;
}

BlockOrder layered_order(const Hypergraph& h, const Cut& cut,
                         const OrderBuilder& build) {
  if (!is_good_cut(h, cut)) raise(Errc::bad_cut, "not a good cut");

  std::vector<BlockOrder::Block> blocks;
  for (std::size_t a = 0; a + 1 < cut.layers.size(); ++a) {
    const EpSet& lo = cut.layers[a];
    const EpSet& hi = cut.layers[a + 1];
    EpSet fresh = hi - lo;
    if (fresh.empty()) continue;

    // Tails of the edges captured at this layer.
    std::vector<EpSet> tails;
    for (std::size_t e = 0; e < h.size(); ++e) {
      const EpSet& edge = h.edge(e);
      if (edge.subset_of(hi) &&
          (edge & lo).cardinality() < edge.cardinality())
        tails.push_back(edge - lo);
    }

    if (tails.empty()) {
      blocks.push_back({fresh, BlockOrder::Inner::natural, 0, nullptr});
      continue;
    }
    Hypergraph piece{tails};
    BlockOrder ord = build(piece);
    if (!(ord.universe() == piece.universe()) || !is_maximizing(ord, piece))
      raise(Errc::builder_failure, "layer order failed verification");

    EpSet leftover = fresh - ord.universe();
    if (!leftover.empty())
      blocks.push_back({leftover, BlockOrder::Inner::natural, 0, nullptr});
    for (const BlockOrder::Block& b : ord.blocks()) blocks.push_back(b);
  }
  return BlockOrder(std::move(blocks));
}

namespace {

struct TwoTierState {
  EpSet hull;        // M: the r-closed region swept so far
  EpSet used_inf;    // union of infinite edges serving as witnesses
  EpSet processed;   // union of infinite edges handled so far
  WitnessedCover out;
};

// Solves the finite-edge family confined to the hull on the given fresh
// region and merges the result. `candidates` are indices into h of finite
// edges; an edge participates when it avoids every chosen point and sits
// inside `within`.
void residual_stage(const Hypergraph& h,
                    const std::vector<std::size_t>& candidates,
                    const EpSet& within, const EpSet& region, unsigned r,
                    unsigned k, TwoTierState& st) {
  EpSet chosen = st.out.point_set();
  std::vector<std::size_t> live;
  for (std::size_t e : candidates)
    if ((h.edge(e) & chosen).empty() && h.edge(e).subset_of(within))
      live.push_back(e);
  if (live.empty()) return;

  Restriction piece = restrict_to(subhypergraph(h, live), region);
  if (piece.traces.size() != live.size())
    raise(Errc::internal, "confined edge lost its fresh trace");

  BlockOrder ord = build_maximizing(piece.traces, k, r);
  WitnessedCover stage = extract_cover(ord, piece.traces);
  std::vector<std::size_t> lift;
  for (std::size_t j : piece.parent) lift.push_back(live[j]);
  merge_stage(st.out, stage, lift);
}

}  // namespace

WitnessedCover two_tier_cover(const Hypergraph& h, unsigned r, unsigned k) {
  if (k < 1 || r < 1) raise(Errc::bad_arity, "k and r must be >= 1");
  CheckCResult cc = h.check_c(k, Card::finite(r));
  if (!cc.ok()) raise(Errc::property_violated, "(A) C(k,r) fails");

  std::vector<std::size_t> fin_idx, inf_idx;
  for (std::size_t i = 0; i < h.size(); ++i)
    (h.edge(i).is_finite() ? fin_idx : inf_idx).push_back(i);

  // (B): distinct infinite edges intersect pairwise finitely.
  for (std::size_t a = 0; a < inf_idx.size(); ++a)
    for (std::size_t b = a + 1; b < inf_idx.size(); ++b) {
      if (h.edge(inf_idx[a]) == h.edge(inf_idx[b])) continue;
      if (!(h.edge(inf_idx[a]) & h.edge(inf_idx[b])).is_finite())
        raise(Errc::hypothesis_violated,
              "(B) edges " + std::to_string(inf_idx[a]) + "," +
                  std::to_string(inf_idx[b]) + " intersect infinitely");
    }

  // (C): the family is an antichain (over distinct denotations).
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b) {
      if (h.edge(a) == h.edge(b)) continue;
      if ((h.edge(a) - h.edge(b)).empty() || (h.edge(b) - h.edge(a)).empty())
        raise(Errc::hypothesis_violated,
              "(C) edges " + std::to_string(a) + "," + std::to_string(b) +
                  " are nested");
    }

  Hypergraph fin_family = subhypergraph(h, fin_idx);
  TwoTierState st;

  for (std::size_t eta = 0; eta < inf_idx.size(); ++eta) {
    const EpSet& c = h.edge(inf_idx[eta]);
    EpSet chosen = st.out.point_set();
    if (!(c & chosen).empty()) {  // already met: nothing to do this stage
      st.processed = st.processed | c;
      continue;
    }

    // Surviving finite edges and their traces off the hull.
    std::vector<std::size_t> surv;
    std::vector<EpSet> traces;
    for (std::size_t e : fin_idx) {
      if (!(h.edge(e) & chosen).empty()) continue;
      EpSet t = h.edge(e) - st.hull;
      if (t.empty())
        raise(Errc::internal, "surviving edge inside the hull");
      surv.push_back(e);
      traces.push_back(std::move(t));
    }
    std::vector<std::size_t> minimal =
        traces.empty() ? std::vector<std::size_t>{}
                       : Hypergraph(traces).min_family();
    EpSet min_union;
    for (std::size_t j : minimal) min_union = min_union | traces[j];
    EpSet c_prime = c & min_union;

    EpSet pre_hull;
    bool witness_is_c = false;
    std::uint64_t y = 0;
    if (c_prime.empty()) {
      // Witness the infinite edge itself with a point that is fresh and
      // outside every earlier infinite edge. Its meets with the surviving
      // finite edges go into the hull: later fresh points land off it.
      EpSet candidates = (c - st.processed) - st.hull;
      if (candidates.empty())
        raise(Errc::hypothesis_violated, "(B) no fresh point left in edge " +
                                             std::to_string(inf_idx[eta]));
      y = candidates.min_element();
      witness_is_c = true;
      st.out.witness[y] = inf_idx[eta];
      st.used_inf = st.used_inf | c;
      EpSet sweep;
      for (std::size_t e : surv) sweep = sweep | (c & h.edge(e));
      pre_hull = (st.hull | EpSet::finite({y})) | sweep;
    } else {
      // Cover it through a minimal surviving trace instead.
      y = c_prime.min_element();
      std::size_t pick = SIZE_MAX;
      for (std::size_t j : minimal)
        if (traces[j].contains(y)) pick = std::min(pick, surv[j]);
      if (pick == SIZE_MAX) raise(Errc::internal, "no trace holds the point");
      st.out.witness[y] = pick;
      pre_hull = (st.hull | EpSet::finite({y})) | h.edge(pick);
    }

    EpSet new_hull = r_closure(fin_family, pre_hull, r);
    EpSet region = (new_hull - st.hull) - st.used_inf;
    if (!witness_is_c) region = region - h.edge(st.out.witness[y]);
    residual_stage(h, fin_idx, new_hull, region, r, k, st);

    st.hull = new_hull;
    st.processed = st.processed | c;
  }

  // Final stage: finite edges the hull never confined.
  EpSet everything = h.universe();
  EpSet region = (everything - st.hull) - st.used_inf;
  residual_stage(h, fin_idx, everything, region, r, k, st);

  return st.out;
}

WitnessedCover solve_brute(const Hypergraph& h, std::size_t max_universe) {
  auto covers = brute_minimal_covers(h, max_universe);
  if (covers.empty()) raise(Errc::internal, "a finite family has no cover");
  WitnessSearch ws = find_witness(h, covers.front());
  if (auto* wc = std::get_if<WitnessedCover>(&ws)) return *wc;
  raise(Errc::internal, "brute minimal cover has no witness");
}

WitnessedCover solve_maxwo(const Hypergraph& h, unsigned k, unsigned r) {
  return extract_cover(build_maximizing(h, k, r), h);
}

std::vector<std::uint64_t> pairwise_transversal(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h.edge(i).is_finite())
      raise(Errc::hypothesis_violated,
            "edge " + std::to_string(i) + " is finite");
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (!(h.edge(i) & h.edge(j)).is_finite())
        raise(Errc::hypothesis_violated,
              "edges " + std::to_string(i) + "," + std::to_string(j) +
                  " intersect infinitely");

  std::vector<std::uint64_t> out;
  EpSet avoided;  // union of the pairwise intersections seen so far
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t xi = 0; xi < a; ++xi)
      avoided = avoided | (h.edge(xi) & h.edge(a));
    EpSet pool = h.edge(a) - avoided;
    if (pool.empty())
      raise(Errc::hypothesis_violated,
            "edge " + std::to_string(a) + " exhausted");
    out.push_back(pool.min_element());
  }
  return out;
}

}  // namespace hypercover
