#include <doctest.h>

#include "hypercover/errors.hpp"
#include "hypercover/generate.hpp"
#include "hypercover/hypergraph.hpp"

using namespace hypercover;

namespace {

EpSet fin(std::vector<std::uint64_t> xs) { return EpSet::finite(std::move(xs)); }

Hypergraph hg(std::vector<EpSet> edges) { return Hypergraph(std::move(edges)); }

// Direct enumeration of all k-subsets of distinct edges; the reference
// point for check_c.
bool brute_check_c(const Hypergraph& h, unsigned k, Card rho) {
  std::vector<EpSet> distinct;
  for (const EpSet& e : h.edges()) {
    bool seen = false;
    for (const EpSet& d : distinct) seen = seen || d == e;
    if (!seen) distinct.push_back(e);
  }
  std::size_t n = distinct.size();
  if (n < k) return true;
  std::vector<std::size_t> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    EpSet acc = distinct[idx[0]];
    for (unsigned i = 1; i < k; ++i) acc = acc & distinct[idx[i]];
    if (acc.cardinality() >= rho) return false;
    std::size_t i = k;
    bool more = false;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        more = true;
        break;
      }
    }
    if (!more) return true;
  }
}

}  // namespace

TEST_CASE("edges must be nonempty") {
  CHECK_THROWS_AS(hg({EpSet()}), Error);
}

TEST_CASE("spectrum") {
  Hypergraph h = hg({fin({1}), fin({2, 3}), EpSet::ap(0, 2)});
  CHECK(h.spectrum() ==
        std::vector<Card>{Card::finite(1), Card::finite(2), Card::aleph0()});
  CHECK(hg({fin({0})}).spectrum() == std::vector<Card>{Card::finite(1)});
  CHECK(hg({EpSet::ap(0, 2), EpSet::ap(1, 2)}).spectrum() ==
        std::vector<Card>{Card::aleph0()});
}

TEST_CASE("select") {
  Hypergraph h = hg({fin({1, 2, 3}), fin({2, 3, 4}), fin({1, 4})});
  auto with2 = h.select(ContainsPoint{2});
  auto with3 = h.select(ContainsPoint{3});
  std::vector<std::size_t> both;
  std::set_intersection(with2.begin(), with2.end(), with3.begin(), with3.end(),
                        std::back_inserter(both));
  CHECK(both == std::vector<std::size_t>{0, 1});

  CHECK(hg({fin({1}), fin({2})}).select(Meets{fin({2})}) ==
        std::vector<std::size_t>{1});
  CHECK(hg({EpSet::ap(0, 2), fin({1})}).select(Avoids{fin({0, 2})}) ==
        std::vector<std::size_t>{1});
}

TEST_CASE("select meets/avoids partition the index set") {
  CounterRng rng(41);
  GenParams p;
  p.k = 3;
  p.r = 2;
  p.edges = 5;
  for (unsigned t = 0; t < 20; ++t) {
    Hypergraph h = gen_epset_ckr(p, rng.next()).hypergraph;
    EpSet y = EpSet::finite({rng.below(20), rng.below(20)});
    auto meets = h.select(Meets{y});
    auto avoids = h.select(Avoids{y});
    std::vector<std::size_t> all = meets;
    all.insert(all.end(), avoids.begin(), avoids.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) expect[i] = i;
    REQUIRE(all == expect);
  }
}

TEST_CASE("restrict") {
  Restriction r1 = restrict_to(hg({fin({1, 2}), fin({3})}), fin({1}));
  CHECK(r1.traces.size() == 1);
  CHECK(r1.traces.edge(0) == fin({1}));
  CHECK(r1.parent == std::vector<std::size_t>{0});

  CHECK(restrict_to(hg({fin({1, 2})}), fin({3})).traces.size() == 0);

  Restriction r2 =
      restrict_to(hg({EpSet::ap(0, 2), EpSet::ap(1, 2)}), EpSet::ap(0, 4));
  CHECK(r2.traces.size() == 1);
  CHECK(r2.traces.edge(0) == EpSet::ap(0, 4));
}

TEST_CASE("confine") {
  CHECK(hg({fin({1}), fin({1, 2})}).confine(fin({1})) ==
        std::vector<std::size_t>{0});
  CHECK(hg({fin({1})}).confine(EpSet()) == std::vector<std::size_t>{});
  CHECK(hg({EpSet::ap(0, 6), EpSet::ap(1, 2)}).confine(EpSet::ap(0, 2)) ==
        std::vector<std::size_t>{0});
}

TEST_CASE("check_c") {
  CHECK(hg({fin({1, 2}), fin({3, 4})}).check_c(2, Card::finite(1)).ok());

  auto v = hg({fin({1, 2, 3, 4}), fin({2, 3, 4, 5})})
               .check_c(2, Card::finite(3))
               .violation;
  REQUIRE(v.has_value());
  CHECK(*v == std::vector<std::size_t>{0, 1});

  auto w = hg({EpSet::ap(0, 2), EpSet::ap(0, 3), EpSet::ap(0, 5)})
               .check_c(3, Card::finite(4))
               .violation;
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<std::size_t>{0, 1, 2});

  CHECK_THROWS_AS(hg({fin({1})}).check_c(0, Card::finite(1)), Error);

  // duplicates collapse: two copies of one edge are a single edge
  CHECK(hg({fin({1, 2}), fin({1, 2})}).check_c(2, Card::finite(1)).ok());

  // rho = omega: infinite pairwise intersection is the only failure mode
  CHECK(hg({EpSet::ap(0, 2), EpSet::ap(1, 2)}).check_c(2, Card::aleph0()).ok());
  CHECK_FALSE(
      hg({EpSet::ap(0, 2), EpSet::ap(0, 4)}).check_c(2, Card::aleph0()).ok());
}

TEST_CASE("check_c agrees with direct enumeration and is monotone") {
  CounterRng rng(1234);
  GenParams p;
  for (unsigned t = 0; t < 60; ++t) {
    p.k = 2 + t % 3;
    p.r = 1 + t % 3;
    p.edges = 3 + t % 4;
    p.max_vertex = 12;
    Hypergraph h = gen_finite_ckr(p, rng.next()).hypergraph;
    for (unsigned k = 1; k <= 4; ++k)
      for (unsigned r = 1; r <= 4; ++r) {
        bool mine = h.check_c(k, Card::finite(r)).ok();
        REQUIRE(mine == brute_check_c(h, k, Card::finite(r)));
        if (mine) {
          REQUIRE(h.check_c(k + 1, Card::finite(r)).ok());
          REQUIRE(h.check_c(k, Card::finite(r + 1)).ok());
          REQUIRE(h.check_c(k, Card::aleph0()).ok());
        }
      }
  }
}

TEST_CASE("min_family") {
  CHECK(hg({fin({1}), fin({1, 2})}).min_family() == std::vector<std::size_t>{0});
  CHECK(hg({fin({1}), fin({2})}).min_family() ==
        std::vector<std::size_t>{0, 1});
  CHECK(hg({EpSet::ap(0, 2), EpSet::ap(0, 6), EpSet::ap(1, 2)}).min_family() ==
        std::vector<std::size_t>{1, 2});
  // duplicates: lowest index kept
  CHECK(hg({fin({1}), fin({1})}).min_family() == std::vector<std::size_t>{0});
}

TEST_CASE("min_family dominates every edge") {
  CounterRng rng(555);
  GenParams p;
  p.k = 3;
  p.r = 3;
  p.edges = 6;
  p.max_vertex = 10;
  for (unsigned t = 0; t < 30; ++t) {
    Hypergraph h = gen_finite_ckr(p, rng.next()).hypergraph;
    auto mins = h.min_family();
    for (std::size_t e = 0; e < h.size(); ++e) {
      bool dominated = false;
      for (std::size_t m : mins)
        dominated = dominated || h.edge(m).subset_of(h.edge(e));
      REQUIRE(dominated);
    }
  }
}

TEST_CASE("is_shrink") {
  CHECK(is_shrink(hg({fin({1, 2})}), hg({fin({1, 2, 3})})));
  CHECK(is_shrink(hg({fin({1})}), hg({fin({1, 2, 3, 4})})));
  CHECK(is_shrink(hg({fin({1})}), hg({fin({1, 2})})));
  CHECK_FALSE(is_shrink(hg({fin({1})}), hg({fin({2, 3})})));
  CHECK(is_shrink(hg({EpSet::ap(0, 2) - fin({0})}), hg({EpSet::ap(0, 2)})));
}

TEST_CASE("restriction of a min-family is a shrink when cuts are small") {
  Hypergraph a = hg({fin({1, 2, 3}), fin({4, 5, 6})});
  Restriction res = restrict_to(a, fin({1, 2, 4, 5}));
  CHECK(is_shrink(res.traces, a));
}

TEST_CASE("duplicate lint") {
  CHECK(hg({fin({1}), fin({1})}).has_duplicate_edges());
  CHECK_FALSE(hg({fin({1}), fin({2})}).has_duplicate_edges());
}
