#include "hypercover/hypergraph.hpp"

#include <algorithm>

#include "hypercover/errors.hpp"

namespace hypercover {

Hypergraph::Hypergraph(std::vector<EpSet> edges) : edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].empty())
      raise(Errc::empty_edge, "edge " + std::to_string(i) + " is empty");
}

EpSet Hypergraph::universe() const { return prefix_union(edges_, edges_.size()); }

std::vector<Card> Hypergraph::spectrum() const {
  std::vector<Card> out;
  for (const EpSet& e : edges_) out.push_back(e.cardinality());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> Hypergraph::select(const Selector& sel) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    bool hit = std::visit(
        [&](const auto& s) -> bool {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ContainsPoint>)
            return edges_[i].contains(s.x);
          else if constexpr (std::is_same_v<T, Meets>)
            return !(edges_[i] & s.y).empty();
          else
            return (edges_[i] & s.y).empty();
        },
        sel);
    if (hit) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Hypergraph::confine(const EpSet& y) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].subset_of(y)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Hypergraph::containing_edges(const EpSet& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (x.subset_of(edges_[i])) out.push_back(i);
  return out;
}

namespace {

// Depth-first scan over k-subsets of the deduplicated edge list, pruning a
// branch as soon as the running intersection is already below rho.
bool scan_tuples(const std::vector<EpSet>& distinct, unsigned k, Card rho,
                 std::size_t from, const EpSet& acc,
                 std::vector<std::size_t>& picked) {
  if (picked.size() == k) return acc.cardinality() >= rho;
  for (std::size_t i = from; i + (k - picked.size()) <= distinct.size(); ++i) {
    EpSet next = picked.empty() ? distinct[i] : (acc & distinct[i]);
    if (next.cardinality() < rho) continue;
    picked.push_back(i);
    if (scan_tuples(distinct, k, rho, i + 1, next, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

CheckCResult Hypergraph::check_c(unsigned k, Card rho) const {
  if (k < 1) raise(Errc::bad_arity, "k must be >= 1");
  if (rho.is_finite() && rho.value() < 1)
    raise(Errc::bad_arity, "rho must be Finite(>=1) or Aleph0");

  // The family is treated as a set of edges: collapse duplicates, keeping
  // the lowest index of each denotation.
  std::vector<EpSet> distinct;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    bool seen = false;
    for (const EpSet& d : distinct)
      if (d == edges_[i]) {
        seen = true;
        break;
      }
    if (!seen) {
      distinct.push_back(edges_[i]);
      origin.push_back(i);
    }
  }

  if (distinct.size() < k) return {};
  std::vector<std::size_t> picked;
  if (scan_tuples(distinct, k, rho, 0, EpSet(), picked)) {
    std::vector<std::size_t> tuple;
    for (std::size_t j : picked) tuple.push_back(origin[j]);
    return {tuple};
  }
  return {};
}

std::vector<std::size_t> Hypergraph::min_family() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < edges_.size() && keep; ++j) {
      if (j == i) continue;
      if (edges_[j] == edges_[i]) {
        if (j < i) keep = false;  // duplicate: lowest index wins
      } else if (edges_[j].subset_of(edges_[i])) {
        keep = false;
      }
    }
    if (keep) out.push_back(i);
  }
  return out;
}

bool Hypergraph::has_duplicate_edges() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i] == edges_[j]) return true;
  return false;
}

Restriction restrict_to(const Hypergraph& h, const EpSet& y) {
  std::vector<EpSet> traces;
  std::vector<std::size_t> parent;
  for (std::size_t i = 0; i < h.size(); ++i) {
    EpSet t = h.edge(i) & y;
    if (!t.empty()) {
      traces.push_back(std::move(t));
      parent.push_back(i);
    }
  }
  return {Hypergraph(std::move(traces)), std::move(parent)};
}

Hypergraph subhypergraph(const Hypergraph& h,
                         const std::vector<std::size_t>& indices) {
  std::vector<EpSet> edges;
  edges.reserve(indices.size());
  for (std::size_t i : indices) edges.push_back(h.edge(i));
  return Hypergraph(std::move(edges));
}

bool is_shrink(const Hypergraph& b, const Hypergraph& a) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < a.size() && !found; ++j) {
      if (!b.edge(i).subset_of(a.edge(j))) continue;
      found = (a.edge(j) - b.edge(i)).cardinality() < a.edge(j).cardinality();
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace hypercover
