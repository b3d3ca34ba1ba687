#include <doctest.h>

#include "hypercover/errors.hpp"
#include "hypercover/fuzz.hpp"
#include "hypercover/generate.hpp"
#include "hypercover/stepping.hpp"

using namespace hypercover;

namespace {

EpSet fin(std::vector<std::uint64_t> xs) { return EpSet::finite(std::move(xs)); }

Hypergraph hg(std::vector<EpSet> edges) { return Hypergraph(std::move(edges)); }

Cut cut_of(std::vector<EpSet> layers) { return Cut{std::move(layers)}; }

CoverSolver brute_solver() {
  return [](const Hypergraph& piece) { return solve_brute(piece); };
}

}  // namespace

TEST_CASE("is_good_cut") {
  Hypergraph pairs = hg({fin({0, 1}), fin({2, 3})});
  CHECK(is_good_cut(pairs, cut_of({EpSet(), fin({0, 1}), fin({0, 1, 2, 3})})));

  CHECK(is_good_cut(hg({fin({0})}), cut_of({EpSet(), fin({0})})));
  CHECK(is_good_cut(hg({fin({0, 1})}), cut_of({EpSet(), fin({0}), fin({0, 1})})));

  // An infinite edge whose earlier trace is already infinite fails.
  Hypergraph evens = hg({EpSet::ap(0, 2)});
  CHECK_FALSE(
      is_good_cut(evens, cut_of({EpSet(), EpSet::ap(0, 4), EpSet::ap(0, 2)})));
  CHECK(is_good_cut(evens, cut_of({EpSet(), EpSet::ap(0, 2)})));

  // Structure failures.
  CHECK_FALSE(is_good_cut(pairs, cut_of({fin({0}), fin({0, 1, 2, 3})})));
  CHECK_FALSE(is_good_cut(pairs, cut_of({EpSet(), fin({0, 1})})));
  CHECK(is_good_cut(Hypergraph(), cut_of({EpSet()})));
}

TEST_CASE("build_closure_chain traces") {
  Hypergraph h = hg({fin({0, 1}), fin({1, 2})});
  Cut cut = build_closure_chain(h, 2, 2, {fin({0}), fin({2})});
  CHECK(cut.layers == std::vector<EpSet>{EpSet(), fin({0}), fin({0, 2}),
                                         fin({0, 1, 2})});
  CHECK(is_good_cut(h, cut));

  CHECK(build_closure_chain(Hypergraph(), 2, 2, {}).layers ==
        std::vector<EpSet>{EpSet()});

  Cut one = build_closure_chain(hg({fin({0, 1})}), 2, 2, {fin({0, 1})});
  CHECK(one.layers == std::vector<EpSet>{EpSet(), fin({0, 1})});

  CHECK_THROWS_AS(build_closure_chain(hg({EpSet::ap(0, 2)}), 2, 1, {}), Error);
}

TEST_CASE("r_closure") {
  Hypergraph tri = hg({fin({0, 1, 2})});
  CHECK(r_closure(tri, fin({0, 1}), 2) == fin({0, 1, 2}));
  CHECK(r_closure(tri, fin({0}), 2) == fin({0}));
  CHECK(r_closure(hg({fin({0, 1, 2}), fin({2, 3, 4})}), fin({0, 1}), 2) ==
        fin({0, 1, 2}));
}

TEST_CASE("r_closure is a closure operator") {
  CounterRng rng(17);
  GenParams p;
  p.k = 3;
  p.r = 2;
  p.edges = 6;
  p.max_vertex = 12;
  for (unsigned t = 0; t < 25; ++t) {
    Hypergraph h = gen_finite_ckr(p, rng.next()).hypergraph;
    EpSet m0 = fin({rng.below(12), rng.below(12)});
    EpSet m1 = m0 | fin({rng.below(12)});
    unsigned r = 1 + t % 3;
    EpSet c0 = r_closure(h, m0, r);
    REQUIRE(m0.subset_of(c0));                       // extensive
    REQUIRE(c0.subset_of(r_closure(h, m1, r)));      // monotone
    REQUIRE(r_closure(h, c0, r) == c0);              // idempotent
  }
}

TEST_CASE("layered_cover") {
  Hypergraph pairs = hg({fin({0, 1}), fin({2, 3})});
  Cut cut = cut_of({EpSet(), fin({0, 1}), fin({0, 1, 2, 3})});
  WitnessedCover wc = layered_cover(pairs, cut, brute_solver());
  CHECK(wc.points() == std::vector<std::uint64_t>{0, 2});
  CHECK(verify_witnessed_cover(pairs, wc));

  CHECK(layered_cover(Hypergraph(), cut_of({EpSet()}), brute_solver())
            .points()
            .empty());

  // Degenerate cut reproduces the direct solver exactly.
  Hypergraph path = hg({fin({0, 1}), fin({1, 2}), fin({2, 3})});
  Cut degenerate = cut_of({EpSet(), path.universe()});
  CHECK(layered_cover(path, degenerate, brute_solver()) == solve_brute(path));

  CHECK_THROWS_AS(
      layered_cover(pairs, cut_of({EpSet(), fin({0, 1})}), brute_solver()),
      Error);
}

TEST_CASE("layered_order") {
  Hypergraph pairs = hg({fin({0, 1}), fin({2, 3})});
  Cut cut = cut_of({EpSet(), fin({0, 1}), fin({0, 1, 2, 3})});
  OrderBuilder builder = [](const Hypergraph& piece) {
    return build_maximizing(piece, 2, 2);
  };
  BlockOrder ord = layered_order(pairs, cut, builder);
  CHECK(is_maximizing(ord, pairs));
  CHECK(compare(ord, 0, 1) == Ordering::less);
  CHECK(compare(ord, 1, 2) == Ordering::less);
  CHECK(compare(ord, 2, 3) == Ordering::less);
  CHECK(*edge_max(ord, fin({0, 1})) == 1);
  CHECK(*edge_max(ord, fin({2, 3})) == 3);

  // Mixed instance: the finite edge is maximized inside the middle layer,
  // the infinite tail by the final layer's builder.
  Hypergraph mixed = hg({EpSet::ap(0, 2), fin({1, 3})});
  Cut mcut = cut_of({EpSet(), fin({1, 3}), mixed.universe()});
  REQUIRE(is_good_cut(mixed, mcut));
  BlockOrder mord = layered_order(mixed, mcut, builder);
  CHECK(is_maximizing(mord, mixed));
  CHECK(*edge_max(mord, fin({1, 3})) == 3);
}

TEST_CASE("two_tier_cover on a single infinite edge") {
  WitnessedCover wc = two_tier_cover(hg({EpSet::ap(0, 2)}), 1, 2);
  CHECK(wc.points() == std::vector<std::uint64_t>{0});
  CHECK(wc.witness.at(0) == 0);
}

TEST_CASE("two_tier_cover on the empty family") {
  CHECK(two_tier_cover(Hypergraph(), 1, 2).points().empty());
}

TEST_CASE("two_tier_cover covers a disjoint finite edge in the final stage") {
  // The infinite edge takes its own fresh minimum; the finite edge is
  // solved by the residual pipeline, which admits its greatest element.
  Hypergraph h = hg({EpSet::ap(0, 2), fin({1, 5})});
  WitnessedCover wc = two_tier_cover(h, 2, 2);
  CHECK(wc.points() == std::vector<std::uint64_t>{0, 5});
  CHECK(wc.witness.at(0) == 0);
  CHECK(wc.witness.at(5) == 1);
  CHECK(verify_witnessed_cover(h, wc));
}

TEST_CASE("two_tier_cover routes through a finite edge when traces meet") {
  Hypergraph h = hg({EpSet::ap(0, 2), fin({0, 7})});
  WitnessedCover wc = two_tier_cover(h, 2, 2);
  CHECK(wc.points() == std::vector<std::uint64_t>{0});
  CHECK(wc.witness.at(0) == 1);  // witnessed by the finite edge
  CHECK(verify_witnessed_cover(h, wc));
}

TEST_CASE("two_tier_cover collapses duplicate edges") {
  Hypergraph h = hg({EpSet::ap(0, 2), EpSet::ap(0, 2), fin({1, 5}),
                     fin({1, 5})});
  WitnessedCover wc = two_tier_cover(h, 2, 2);
  CHECK(wc.points() == std::vector<std::uint64_t>{0, 5});
  CHECK(verify_witnessed_cover(h, wc));
}

TEST_CASE("two_tier_cover skips an infinite edge already met") {
  Hypergraph h = hg({EpSet::ap(0, 2), fin({0}) | EpSet::ap(3, 2)});
  WitnessedCover wc = two_tier_cover(h, 2, 2);
  CHECK(wc.points() == std::vector<std::uint64_t>{0});
  CHECK(wc.witness.at(0) == 0);
  CHECK(verify_witnessed_cover(h, wc));
}

TEST_CASE("two_tier_cover interleaves finite witnesses, sweeps and residuals") {
  // Edge 0 is routed through the finite edge {1,5,9}; edge 1 then takes a
  // fresh point off the grown hull; the leftover finite edge is solved on
  // the region that excludes the hull and the infinite witness.
  Hypergraph h = hg({fin({0, 1}) | EpSet::ap(8, 4),  // 0
                     EpSet::ap(3, 4),                // 1
                     fin({1, 5, 9}),                 // 2
                     fin({5, 9, 13})});              // 3
  REQUIRE(h.check_c(2, Card::finite(3)).ok());
  WitnessedCover wc = two_tier_cover(h, 3, 2);
  CHECK(wc.points() == std::vector<std::uint64_t>{1, 3, 13});
  CHECK(wc.witness.at(1) == 2);
  CHECK(wc.witness.at(3) == 1);
  CHECK(wc.witness.at(13) == 3);
  CHECK(verify_witnessed_cover(h, wc));
  CHECK(std::holds_alternative<WitnessedCover>(find_witness(h, wc.points())));
}

TEST_CASE("layered assembly rejects broken sub-procedures") {
  Hypergraph pairs = hg({fin({0, 1}), fin({2, 3})});
  Cut cut = cut_of({EpSet(), fin({0, 1}), fin({0, 1, 2, 3})});

  CoverSolver lying = [](const Hypergraph&) {
    WitnessedCover wc;
    wc.witness[77] = 0;
    return wc;
  };
  CHECK_THROWS_AS(layered_cover(pairs, cut, lying), Error);

  OrderBuilder wrong_universe = [](const Hypergraph&) {
    return BlockOrder({{fin({99}), BlockOrder::Inner::natural, 0, nullptr}});
  };
  CHECK_THROWS_AS(layered_order(pairs, cut, wrong_universe), Error);

  Hypergraph evens = hg({EpSet::ap(0, 2)});
  OrderBuilder never_max = [](const Hypergraph& piece) {
    return BlockOrder(
        {{piece.universe(), BlockOrder::Inner::natural, 0, nullptr}});
  };
  CHECK_THROWS_AS(
      layered_order(evens, cut_of({EpSet(), EpSet::ap(0, 2)}), never_max),
      Error);
}

TEST_CASE("two_tier_cover rejects broken hypotheses") {
  auto code_of = [](const Hypergraph& h, unsigned r, unsigned k) {
    try {
      two_tier_cover(h, r, k);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  // (A): pairwise overlap too large for C(2,2)
  CHECK(code_of(hg({fin({0, 1}), fin({0, 1, 2}), fin({0, 1, 3})}), 2, 2) ==
        Errc::property_violated);
  // (B): two infinite edges with infinite intersection, C(3,2) still fine
  CHECK(code_of(hg({EpSet::ap(0, 2), fin({1}) | EpSet::ap(0, 4),
                    EpSet::ap(3, 4)}),
                2, 3) == Errc::hypothesis_violated);
  // (C): nested edges
  CHECK(code_of(hg({fin({0}), fin({0, 1})}), 3, 3) ==
        Errc::hypothesis_violated);
}

TEST_CASE("pairwise_transversal") {
  CHECK(pairwise_transversal(hg({EpSet::ap(0, 2), EpSet::ap(1, 2)})) ==
        std::vector<std::uint64_t>{0, 1});

  CHECK_THROWS_AS(pairwise_transversal(hg({EpSet::ap(0, 2), EpSet::ap(0, 3)})),
                  Error);

  CHECK(pairwise_transversal(
            hg({EpSet::ap(0, 4), fin({0}) | EpSet::ap(1, 4)})) ==
        std::vector<std::uint64_t>{0, 1});

  CHECK_THROWS_AS(pairwise_transversal(hg({fin({1})})), Error);
}

TEST_CASE("transversal traces keep triple-wise bounds") {
  Hypergraph h = hg({EpSet::ap(0, 6), EpSet::ap(1, 6), EpSet::ap(2, 6),
                     fin({0, 1, 2}) | EpSet::ap(3, 6)});
  REQUIRE(h.check_c(3, Card::finite(4)).ok());
  auto ys = pairwise_transversal(h);
  Restriction traces = restrict_to(h, EpSet::finite(ys));
  REQUIRE(traces.traces.check_c(3, Card::finite(4)).ok());
  for (std::size_t i = 0; i < traces.traces.size(); ++i)
    for (std::size_t j = i + 1; j < traces.traces.size(); ++j)
      REQUIRE(
          (traces.traces.edge(i) & traces.traces.edge(j)).is_finite());
}

TEST_CASE("two_tier_cover equals a brute minimal cover on every tiny "
          "antichain family") {
  // Exhaustive over families of up to 3 distinct nonempty edges on 4
  // vertices that satisfy C(2,2) and the antichain hypothesis.
  std::vector<EpSet> pool;
  for (unsigned m = 1; m < 16; ++m) {
    std::vector<std::uint64_t> pts;
    for (unsigned b = 0; b < 4; ++b)
      if (m & (1u << b)) pts.push_back(b);
    pool.push_back(fin(pts));
  }
  auto try_family = [&](std::vector<EpSet> edges) {
    Hypergraph h(std::move(edges));
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t b = a + 1; b < h.size(); ++b)
        if (h.edge(a).subset_of(h.edge(b)) || h.edge(b).subset_of(h.edge(a)))
          return;
    if (!h.check_c(2, Card::finite(2)).ok()) return;
    WitnessedCover wc = two_tier_cover(h, 2, 2);
    REQUIRE(verify_witnessed_cover(h, wc));
    auto oracle = brute_minimal_covers(h);
    REQUIRE(std::binary_search(oracle.begin(), oracle.end(), wc.points()));
  };
  for (std::size_t i = 0; i < pool.size(); ++i) {
    try_family({pool[i]});
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      try_family({pool[i], pool[j]});
      for (std::size_t k = j + 1; k < pool.size(); ++k)
        try_family({pool[i], pool[j], pool[k]});
    }
  }
}

TEST_CASE("stepping pipelines verify on random mixed instances") {
  CounterRng rng(2025);
  GenParams p;
  for (unsigned t = 0; t < 25; ++t) {
    p.k = 2 + t % 2;
    p.r = 2 + t % 2;
    p.edges = 4;
    Instance inst = gen_mixed_two_tier(p, rng.next());
    const Hypergraph& h = inst.hypergraph;
    WitnessedCover wc = two_tier_cover(h, p.r, p.k);
    REQUIRE(verify_witnessed_cover(h, wc));
    REQUIRE(std::holds_alternative<WitnessedCover>(find_witness(h, wc.points())));
  }
}
