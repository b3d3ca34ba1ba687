#include "hypercover/cover.hpp"

#include <algorithm>

#include "hypercover/errors.hpp"

namespace hypercover {

std::vector<std::uint64_t> WitnessedCover::points() const {
  std::vector<std::uint64_t> out;
  out.reserve(witness.size());
  for (const auto& [y, _] : witness) out.push_back(y);
  return out;
}

EpSet WitnessedCover::point_set() const { return EpSet::finite(points()); }

bool is_cover(const Hypergraph& h, const EpSet& y) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if ((h.edge(i) & y).empty()) return false;
  return true;
}

WitnessSearch find_witness(const Hypergraph& h,
                           const std::vector<std::uint64_t>& y) {
  EpSet yset = EpSet::finite(y);
  if (!is_cover(h, yset)) raise(Errc::not_a_cover, "Y does not meet every edge");

  WitnessedCover wc;
  for (std::uint64_t v : yset.finite_part()) {
    EpSet single = EpSet::finite({v});
    bool found = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if ((h.edge(i) & yset) == single) {
        wc.witness[v] = i;
        found = true;
        break;
      }
    }
    if (!found) return NoWitness{v};
  }
  return wc;
}

WitnessedCover minimalize(const Hypergraph& h,
                          const std::vector<std::uint64_t>& y) {
  EpSet yset = EpSet::finite(y);
  if (!is_cover(h, yset)) raise(Errc::not_a_cover, "Y does not meet every edge");

  std::vector<std::uint64_t> pts = yset.finite_part();
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = pts.size(); i-- > 0;) {  // largest first
      std::vector<std::uint64_t> trial = pts;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_cover(h, EpSet::finite(trial))) {
        pts = std::move(trial);
        removed = true;
        break;
      }
    }
  }

  WitnessSearch ws = find_witness(h, pts);
  if (auto* wc = std::get_if<WitnessedCover>(&ws)) return *wc;
  raise(Errc::internal, "pruned cover has no witness");
}

std::vector<std::vector<std::uint64_t>> brute_minimal_covers(
    const Hypergraph& h, std::size_t max_universe) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h.edge(i).is_finite())
      raise(Errc::too_large, "edge " + std::to_string(i) + " is infinite");

  std::vector<std::uint64_t> verts = h.universe().finite_part();
  std::size_t n = verts.size();
  if (n > max_universe || n >= 63)
    raise(Errc::too_large, "universe has " + std::to_string(n) + " vertices");

  // Bitmask per edge over the universe enumeration.
  std::vector<std::uint64_t> edge_mask(h.size(), 0);
  for (std::size_t e = 0; e < h.size(); ++e)
    for (std::size_t b = 0; b < n; ++b)
      if (h.edge(e).contains(verts[b])) edge_mask[e] |= 1ull << b;

  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    bool cover = true;
    for (std::uint64_t em : edge_mask)
      if ((em & m) == 0) {
        cover = false;
        break;
      }
    if (!cover) continue;
    // Minimal iff dropping any single point breaks some edge.
    bool minimal = true;
    for (std::size_t b = 0; b < n && minimal; ++b) {
      if (!(m & (1ull << b))) continue;
      std::uint64_t sub = m ^ (1ull << b);
      bool still = true;
      for (std::uint64_t em : edge_mask)
        if ((em & sub) == 0) {
          still = false;
          break;
        }
      if (still) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::uint64_t> pts;
    for (std::size_t b = 0; b < n; ++b)
      if (m & (1ull << b)) pts.push_back(verts[b]);
    out.push_back(std::move(pts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_witnessed_cover(const Hypergraph& h, const WitnessedCover& wc) {
  EpSet yset = wc.point_set();
  if (!is_cover(h, yset)) return false;
  std::vector<std::size_t> used;
  for (const auto& [y, e] : wc.witness) {
    if (e >= h.size()) return false;
    if ((h.edge(e) & yset) != EpSet::finite({y})) return false;
    used.push_back(e);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

}  // namespace hypercover
