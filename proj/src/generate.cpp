#include "hypercover/generate.hpp"

#include <algorithm>

#include "hypercover/errors.hpp"

namespace hypercover {

namespace {

constexpr std::uint64_t kPeriodPrimes[] = {2, 3, 5, 7};

std::vector<std::uint64_t> divisors_of_210() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= 210; ++d)
    if (210 % d == 0) out.push_back(d);
  return out;
}

EpSet random_finite_edge(CounterRng& rng, std::uint64_t max_vertex,
                         unsigned max_size) {
  unsigned size = 1 + static_cast<unsigned>(rng.below(max_size));
  std::vector<std::uint64_t> pts;
  for (unsigned i = 0; i < size; ++i) pts.push_back(rng.below(max_vertex));
  return EpSet::finite(std::move(pts));
}

// Extension check: the family so far passes C(k,r), so only the k-tuples
// through the candidate need testing. Pruned on the running intersection.
bool tuples_through(const std::vector<EpSet>& distinct, const EpSet& acc,
                    std::size_t from, unsigned depth, unsigned r) {
  if (acc.cardinality() < Card::finite(r)) return true;
  if (depth == 0) return false;
  for (std::size_t i = from; i + depth <= distinct.size(); ++i)
    if (!tuples_through(distinct, acc & distinct[i], i + 1, depth - 1, r))
      return false;
  return true;
}

bool extends_ok(const std::vector<EpSet>& old_edges, const EpSet& cand,
                unsigned k, unsigned r) {
  if (k == 1) return cand.cardinality() < Card::finite(r);
  std::vector<EpSet> distinct;
  for (const EpSet& e : old_edges) {
    if (e == cand) return true;  // duplicate denotations collapse
    bool seen = false;
    for (const EpSet& d : distinct) seen = seen || d == e;
    if (!seen) distinct.push_back(e);
  }
  return tuples_through(distinct, cand, 0, k - 1, r);
}

}  // namespace

void validate_params(const GenParams& p) {
  if (p.edges > 64) raise(Errc::bad_arity, "edges must be <= 64");
  if (p.max_vertex == 0 || p.max_vertex > 1000000)
    raise(Errc::bad_arity, "vertex bound must be in [1, 10^6]");
  if (p.k < 1 || p.r < 1) raise(Errc::bad_arity, "k and r must be >= 1");
  if (p.max_edge_size < 1) raise(Errc::bad_arity, "edge size must be >= 1");
}

Instance gen_finite_ckr(const GenParams& p, std::uint64_t seed) {
  validate_params(p);
  CounterRng rng(seed, 0x66696eull);
  std::vector<EpSet> edges;
  unsigned spent = 0;
  while (edges.size() < p.edges) {
    if (++spent > p.budget) raise(Errc::generation_timeout, "finite_ckr");
    // candidate size decays as rejections accumulate
    unsigned cap = p.max_edge_size;
    if (spent > p.budget / 4) cap = std::max(1u, cap / 2);
    if (spent > p.budget / 2) cap = 1;
    EpSet cand = random_finite_edge(rng, p.max_vertex, cap);
    if (extends_ok(edges, cand, p.k, p.r)) edges.push_back(std::move(cand));
  }
  Instance inst;
  inst.hypergraph = Hypergraph(std::move(edges));
  inst.k = p.k;
  inst.r = p.r;
  return inst;
}

Instance gen_epset_ckr(const GenParams& p, std::uint64_t seed) {
  validate_params(p);
  CounterRng rng(seed, 0x657073ull);
  static const std::vector<std::uint64_t> divisors = divisors_of_210();

  for (unsigned attempt = 0; attempt < 40; ++attempt) {
    // Master modulus: product of a nonempty subset of {2,3,5,7}. Edge
    // periods divide it, so every lcm stays at most 210.
    std::uint64_t m = 1;
    for (std::uint64_t q : kPeriodPrimes)
      if (rng.chance(55)) m *= q;
    if (m == 1) m = kPeriodPrimes[rng.below(4)];

    std::vector<EpSet> edges;
    unsigned spent = 0;
    bool gave_up = false;
    while (edges.size() < p.edges && !gave_up) {
      if (++spent > p.budget / 10) {
        gave_up = true;
        break;
      }
      EpSet cand;
      std::uint64_t roll = rng.below(100);
      if (roll < 10) {
        cand = random_finite_edge(rng, 40, p.max_edge_size);
      } else {
        // Full-modulus progressions with distinct residues have empty
        // tail intersections; divisor periods vary the overlap structure.
        std::uint64_t period = m;
        if (roll >= 65) {
          std::uint64_t d = divisors[rng.below(divisors.size())];
          period = std::gcd(d, std::uint64_t{210});
          if (m % period != 0) period = m;
        }
        std::uint64_t start = rng.below(period) + period * rng.below(3);
        cand = EpSet::ap(start, period);
        if (rng.chance(45)) {  // add a few stray points
          unsigned extra = 1 + static_cast<unsigned>(rng.below(3));
          std::vector<std::uint64_t> pts;
          for (unsigned i = 0; i < extra; ++i) pts.push_back(rng.below(50));
          cand = cand | EpSet::finite(std::move(pts));
        }
        if (rng.chance(30)) {  // drop a few tail points
          unsigned cut = 1 + static_cast<unsigned>(rng.below(2));
          std::vector<std::uint64_t> pts = cand.enumerate(cut + 2);
          pts.resize(std::min<std::size_t>(cut, pts.size()));
          cand = cand - EpSet::finite(std::move(pts));
        }
      }
      if (cand.empty()) continue;
      if (extends_ok(edges, cand, p.k, p.r)) edges.push_back(std::move(cand));
    }
    if (edges.size() == p.edges) {
      Instance inst;
      inst.hypergraph = Hypergraph(std::move(edges));
      inst.k = p.k;
      inst.r = p.r;
      return inst;
    }
  }
  raise(Errc::generation_timeout, "epset_ckr");
}

Instance gen_sunflower_violation(const GenParams& p, std::uint64_t seed) {
  validate_params(p);
  CounterRng rng(seed, 0x73756eull);
  std::vector<std::uint64_t> core;
  for (unsigned i = 0; i < p.r; ++i) core.push_back(i);

  std::uint64_t fresh = p.r;
  std::vector<EpSet> edges;
  for (unsigned e = 0; e < std::max(p.k, 1u); ++e) {
    std::vector<std::uint64_t> pts = core;
    unsigned petal = 1 + static_cast<unsigned>(rng.below(3));
    for (unsigned i = 0; i < petal; ++i) pts.push_back(fresh++);
    edges.push_back(EpSet::finite(std::move(pts)));
  }
  unsigned fillers = static_cast<unsigned>(rng.below(3));
  for (unsigned i = 0; i < fillers; ++i)
    edges.push_back(EpSet::finite({fresh++}));

  Instance inst;
  inst.hypergraph = Hypergraph(std::move(edges));
  inst.name = "sunflower";
  return inst;
}

Instance gen_mixed_two_tier(const GenParams& p, std::uint64_t seed) {
  validate_params(p);
  CounterRng rng(seed, 0x6d6978ull);

  for (unsigned attempt = 0; attempt < 400; ++attempt) {
    std::uint64_t period = 3 + rng.below(4);  // 3..6
    unsigned n_inf = 1 + static_cast<unsigned>(rng.below(3));
    unsigned n_fin = static_cast<unsigned>(rng.below(3));

    std::vector<EpSet> edges;
    std::vector<std::uint64_t> used_res;
    for (unsigned i = 0; i < n_inf; ++i) {
      std::uint64_t res = rng.below(period);
      if (std::find(used_res.begin(), used_res.end(), res) != used_res.end())
        continue;  // distinct residues keep tail intersections empty
      used_res.push_back(res);
      // Sometimes a doubled period with the same residue class cut in
      // half; still tail-disjoint from the other classes.
      EpSet e = rng.chance(25) ? EpSet::ap(res + period, 2 * period)
                               : EpSet::ap(res, period);
      if (rng.chance(40))
        e = e | EpSet::finite({rng.below(14)});
      if (rng.chance(25))
        e = e | EpSet::finite({rng.below(14), rng.below(20)});
      if (rng.chance(30)) {
        auto first = e.enumerate(1 + rng.below(2));
        e = e - EpSet::finite(first);
      }
      edges.push_back(e);
    }
    for (unsigned i = 0; i < n_fin; ++i) {
      unsigned size = 2 + static_cast<unsigned>(rng.below(3));
      std::vector<std::uint64_t> pts;
      for (unsigned j = 0; j < size; ++j) pts.push_back(rng.below(15));
      edges.push_back(EpSet::finite(std::move(pts)));
    }
    if (edges.empty()) continue;
    for (const EpSet& e : edges)
      if (e.empty()) goto next_attempt;

    {
      Hypergraph h(edges);
      if (!h.check_c(p.k, Card::finite(p.r)).ok()) continue;
      bool ok = true;
      for (std::size_t a = 0; a < h.size() && ok; ++a)
        for (std::size_t b = a + 1; b < h.size() && ok; ++b) {
          if (!h.edge(a).is_finite() && !h.edge(b).is_finite() &&
              !(h.edge(a) & h.edge(b)).is_finite())
            ok = false;
          if (h.edge(a) == h.edge(b)) {
            ok = false;
          } else if ((h.edge(a) - h.edge(b)).empty() ||
                     (h.edge(b) - h.edge(a)).empty()) {
            ok = false;
          }
        }
      if (!ok) continue;
      Instance inst;
      inst.hypergraph = std::move(h);
      inst.k = p.k;
      inst.r = p.r;
      return inst;
    }
  next_attempt:;
  }
  raise(Errc::generation_timeout, "mixed");
}

Instance generate(const std::string& kind, const GenParams& p,
                  std::uint64_t seed) {
  if (kind == "finite_ckr") return gen_finite_ckr(p, seed);
  if (kind == "epset_ckr") return gen_epset_ckr(p, seed);
  if (kind == "sunflower_violation") return gen_sunflower_violation(p, seed);
  if (kind == "mixed") return gen_mixed_two_tier(p, seed);
  raise(Errc::parse_error, "unknown generator '" + kind + "'");
}

}  // namespace hypercover
