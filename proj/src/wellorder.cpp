#include "hypercover/wellorder.hpp"

#include <algorithm>

#include "hypercover/errors.hpp"

namespace hypercover {

BlockOrder::BlockOrder(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  validate();
}

EpSet BlockOrder::universe() const {
  EpSet u;
  for (const Block& b : blocks_) u = u | b.ground;
  return u;
}

void BlockOrder::validate() const {
  EpSet seen;
  for (const Block& b : blocks_) {
    if (b.ground.empty()) raise(Errc::bad_arity, "empty block ground");
    if (!(seen & b.ground).empty())
      raise(Errc::bad_arity, "block grounds overlap");
    seen = seen | b.ground;
    switch (b.inner) {
      case Inner::natural:
        break;
      case Inner::promoted:
        if (!b.ground.contains(b.promoted))
          raise(Errc::bad_arity, "promoted vertex outside its block");
        break;
      case Inner::nested:
        if (!b.sub) raise(Errc::bad_arity, "missing nested order");
        b.sub->validate();
        if (!(b.sub->universe() == b.ground))
          raise(Errc::bad_arity, "nested order does not cover its block");
        break;
    }
  }
}

namespace {

std::optional<std::size_t> block_of(const BlockOrder& ord, std::uint64_t v) {
  const auto& bs = ord.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (bs[i].ground.contains(v)) return i;
  return std::nullopt;
}

Ordering from_ints(std::uint64_t a, std::uint64_t b) {
  if (a < b) return Ordering::less;
  if (a > b) return Ordering::greater;
  return Ordering::equal;
}

}  // namespace

Ordering compare(const BlockOrder& ord, std::uint64_t u, std::uint64_t v) {
  auto bu = block_of(ord, u);
  auto bv = block_of(ord, v);
  if (!bu || !bv) raise(Errc::unknown_vertex, "vertex outside the order");
  if (*bu != *bv) return from_ints(*bu, *bv);
  const BlockOrder::Block& blk = ord.blocks()[*bu];
  switch (blk.inner) {
    case BlockOrder::Inner::natural:
      return from_ints(u, v);
    case BlockOrder::Inner::promoted:
      if (u == v) return Ordering::equal;
      if (u == blk.promoted) return Ordering::greater;
      if (v == blk.promoted) return Ordering::less;
      return from_ints(u, v);
    case BlockOrder::Inner::nested:
      return compare(*blk.sub, u, v);
  }
  raise(Errc::internal, "unreachable");
}

std::vector<EpSet> disjointify(const Hypergraph& h) {
  std::vector<EpSet> out;
  out.reserve(h.size());
  EpSet before;
  for (std::size_t i = 0; i < h.size(); ++i) {
    out.push_back(h.edge(i) - before);
    before = before | h.edge(i);
  }
  return out;
}

std::optional<std::uint64_t> edge_max(const BlockOrder& ord, const EpSet& e) {
  if (e.empty()) raise(Errc::empty_edge, "edge_max of the empty set");
  if (!e.subset_of(ord.universe()))
    raise(Errc::unknown_vertex, "edge not contained in the order's universe");

  // Last block meeting the edge; its trace decides.
  const auto& bs = ord.blocks();
  for (std::size_t i = bs.size(); i-- > 0;) {
    EpSet trace = e & bs[i].ground;
    if (trace.empty()) continue;
    switch (bs[i].inner) {
      case BlockOrder::Inner::natural:
        if (trace.is_finite()) return trace.max_element();
        return std::nullopt;
      case BlockOrder::Inner::promoted: {
        if (trace.contains(bs[i].promoted)) return bs[i].promoted;
        if (trace.is_finite()) return trace.max_element();
        return std::nullopt;
      }
      case BlockOrder::Inner::nested:
        return edge_max(*bs[i].sub, trace);
    }
  }
  raise(Errc::internal, "unreachable: edge inside universe meets no block");
}

bool is_maximizing(const BlockOrder& ord, const Hypergraph& h) {
  EpSet u = ord.universe();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h.edge(i).subset_of(u))
      raise(Errc::universe_mismatch,
            "edge " + std::to_string(i) + " not inside the order's universe");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!edge_max(ord, h.edge(i)).has_value()) return false;
  return true;
}

namespace {

// Removes v from the order (it is about to be re-inserted at the top).
void remove_vertex(std::vector<BlockOrder::Block>& blocks, std::uint64_t v) {
  EpSet single = EpSet::finite({v});
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    BlockOrder::Block& b = blocks[i];
    if (!b.ground.contains(v)) continue;
    EpSet rest = b.ground - single;
    if (rest.empty()) {
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
    b.ground = rest;
    switch (b.inner) {
      case BlockOrder::Inner::natural:
        break;
      case BlockOrder::Inner::promoted:
        if (b.promoted == v) b.inner = BlockOrder::Inner::natural;
        break;
      case BlockOrder::Inner::nested: {
        std::vector<BlockOrder::Block> sub = b.sub->blocks();
        remove_vertex(sub, v);
        b.sub = std::make_shared<const BlockOrder>(std::move(sub));
        break;
      }
    }
    return;
  }
}

BlockOrder::Block assemble_block(const EpSet& ground,
                                 const std::vector<EpSet>& traces, unsigned k,
                                 unsigned r) {
  BlockOrder::Block blk;
  blk.ground = ground;
  if (traces.empty()) {
    if (ground.is_finite()) {
      blk.inner = BlockOrder::Inner::natural;
    } else {
      // No inner structure to respect; create a top by lifting the least
      // element above the rest.
      blk.inner = BlockOrder::Inner::promoted;
      blk.promoted = ground.min_element();
    }
    return blk;
  }

  BlockOrder sub = build_maximizing(Hypergraph(traces), k - 1, r);
  std::vector<BlockOrder::Block> inner = sub.blocks();
  EpSet leftover = ground - sub.universe();
  if (!leftover.empty()) {
    BlockOrder::Block bottom;
    bottom.ground = leftover;
    bottom.inner = BlockOrder::Inner::natural;
    inner.insert(inner.begin(), std::move(bottom));
  }
  BlockOrder assembled(std::move(inner));
  if (!edge_max(assembled, ground).has_value()) {
    std::uint64_t v = ground.min_element();
    std::vector<BlockOrder::Block> lifted = assembled.blocks();
    remove_vertex(lifted, v);
    BlockOrder::Block top;
    top.ground = EpSet::finite({v});
    top.inner = BlockOrder::Inner::natural;
    lifted.push_back(std::move(top));
    assembled = BlockOrder(std::move(lifted));
  }
  blk.inner = BlockOrder::Inner::nested;
  blk.sub = std::make_shared<const BlockOrder>(std::move(assembled));
  return blk;
}

}  // namespace

BlockOrder build_maximizing(const Hypergraph& h, unsigned k, unsigned r) {
  CheckCResult cc = h.check_c(k, Card::finite(r));
  if (!cc.ok())
    raise(Errc::property_violated,
          "family lacks C(" + std::to_string(k) + "," + std::to_string(r) + ")");
  if (h.size() == 0) return BlockOrder();

  if (k == 1) {
    // Every edge has fewer than r points, so any numeric order maximizes.
    return BlockOrder({{h.universe(), BlockOrder::Inner::natural, 0, nullptr}});
  }

  std::vector<EpSet> parts = disjointify(h);
  std::vector<BlockOrder::Block> blocks;
  for (std::size_t n = 0; n < parts.size(); ++n) {
    if (parts[n].empty()) continue;
    // The traces of the later, distinct edges on this part form a
    // C(k-1,r) family; order it recursively, leftover points at the
    // bottom, and lift a top element only if the part still has no
    // greatest element.
    std::vector<EpSet> traces;
    for (std::size_t m = n + 1; m < h.size(); ++m) {
      if (h.edge(m) == h.edge(n)) continue;
      EpSet t = h.edge(m) & parts[n];
      if (!t.empty()) traces.push_back(std::move(t));
    }
    blocks.push_back(assemble_block(parts[n], traces, k, r));
  }
  return BlockOrder(std::move(blocks));
}

WitnessedCover extract_cover(const BlockOrder& ord, const Hypergraph& h) {
  if (!is_maximizing(ord, h))
    raise(Errc::not_maximizing, "some edge has no greatest element");

  // Greatest element of every edge, grouped by value.
  std::vector<std::uint64_t> maxima;
  std::vector<std::uint64_t> per_edge(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    per_edge[i] = *edge_max(ord, h.edge(i));
    maxima.push_back(per_edge[i]);
  }
  std::sort(maxima.begin(), maxima.end());
  maxima.erase(std::unique(maxima.begin(), maxima.end()), maxima.end());
  std::sort(maxima.begin(), maxima.end(), [&](std::uint64_t a, std::uint64_t b) {
    return compare(ord, a, b) == Ordering::less;
  });

  WitnessedCover wc;
  EpSet y;
  for (std::uint64_t v : maxima) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (per_edge[i] != v) continue;
      if ((h.edge(i) & y).empty()) {
        wc.witness[v] = i;
        y = y | EpSet::finite({v});
        break;
      }
    }
  }
  return wc;
}

}  // namespace hypercover
