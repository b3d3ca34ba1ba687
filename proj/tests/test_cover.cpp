#include <doctest.h>

#include "hypercover/cover.hpp"
#include "hypercover/errors.hpp"

using namespace hypercover;

namespace {

EpSet fin(std::vector<std::uint64_t> xs) { return EpSet::finite(std::move(xs)); }

Hypergraph hg(std::vector<EpSet> edges) { return Hypergraph(std::move(edges)); }

}  // namespace

TEST_CASE("is_cover") {
  CHECK(is_cover(hg({fin({1, 2}), fin({2, 3})}), fin({2})));
  CHECK_FALSE(is_cover(hg({fin({1, 2})}), EpSet()));
  CHECK(is_cover(hg({EpSet::ap(0, 2), EpSet::ap(1, 2)}), fin({0, 1})));
  CHECK(is_cover(Hypergraph(), EpSet()));  // vacuous
}

TEST_CASE("find_witness") {
  auto w1 = find_witness(hg({fin({1, 2}), fin({2, 3})}), {2});
  REQUIRE(std::holds_alternative<WitnessedCover>(w1));
  CHECK(std::get<WitnessedCover>(w1).witness.at(2) == 0);  // lowest index

  auto w2 = find_witness(hg({fin({1, 2}), fin({2, 3}), fin({3, 4})}), {2, 3});
  REQUIRE(std::holds_alternative<WitnessedCover>(w2));
  CHECK(std::get<WitnessedCover>(w2).witness.at(2) == 0);
  CHECK(std::get<WitnessedCover>(w2).witness.at(3) == 2);

  auto w3 = find_witness(hg({fin({1, 2}), fin({2, 3})}), {1, 2});
  REQUIRE(std::holds_alternative<NoWitness>(w3));
  CHECK(std::get<NoWitness>(w3).point == 1);

  CHECK_THROWS_AS(find_witness(hg({fin({1}), fin({2})}), {1}), Error);
}

TEST_CASE("minimalize") {
  WitnessedCover a = minimalize(hg({fin({1, 2}), fin({2, 3})}), {1, 2, 3});
  CHECK(a.points() == std::vector<std::uint64_t>{2});

  WitnessedCover b = minimalize(hg({fin({1})}), {1});
  CHECK(b.points() == std::vector<std::uint64_t>{1});

  WitnessedCover c = minimalize(hg({fin({1, 2}), fin({3, 4})}), {2, 4});
  CHECK(c.points() == std::vector<std::uint64_t>{2, 4});
}

TEST_CASE("brute_minimal_covers") {
  auto covers = brute_minimal_covers(hg({fin({1, 2}), fin({2, 3}), fin({3, 4})}));
  CHECK(covers == std::vector<std::vector<std::uint64_t>>{
                      {1, 3}, {2, 3}, {2, 4}});
  CHECK(brute_minimal_covers(hg({fin({1})})) ==
        std::vector<std::vector<std::uint64_t>>{{1}});
  CHECK(brute_minimal_covers(hg({fin({1, 2})})) ==
        std::vector<std::vector<std::uint64_t>>{{1}, {2}});
  CHECK_THROWS_AS(brute_minimal_covers(hg({EpSet::ap(0, 2)})), Error);
}

TEST_CASE("exhaustive witness equivalence on tiny families") {
  // All families of up to 3 distinct nonempty edges over {0,1,2,3}: the
  // witness search succeeds exactly on the minimal covers.
  std::vector<EpSet> all_edges;
  for (unsigned m = 1; m < 16; ++m) {
    std::vector<std::uint64_t> pts;
    for (unsigned b = 0; b < 4; ++b)
      if (m & (1u << b)) pts.push_back(b);
    all_edges.push_back(fin(pts));
  }

  auto run_family = [&](const std::vector<EpSet>& edges) {
    Hypergraph h(edges);
    EpSet u = h.universe();
    std::vector<std::uint64_t> verts = u.finite_part();
    for (unsigned m = 0; m < (1u << verts.size()); ++m) {
      std::vector<std::uint64_t> y;
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (m & (1u << b)) y.push_back(verts[b]);
      if (!is_cover(h, fin(y))) continue;
      bool witnessed =
          std::holds_alternative<WitnessedCover>(find_witness(h, y));
      // minimal iff no single-point removal stays a cover
      bool minimal = true;
      for (std::size_t i = 0; i < y.size() && minimal; ++i) {
        std::vector<std::uint64_t> sub = y;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_cover(h, fin(sub))) minimal = false;
      }
      REQUIRE(witnessed == minimal);
    }
  };

  for (std::size_t i = 0; i < all_edges.size(); ++i) {
    run_family({all_edges[i]});
    for (std::size_t j = i + 1; j < all_edges.size(); ++j) {
      run_family({all_edges[i], all_edges[j]});
      for (std::size_t k = j + 1; k < all_edges.size(); ++k)
        run_family({all_edges[i], all_edges[j], all_edges[k]});
    }
  }
}

TEST_CASE("witness injectivity and membership in the oracle") {
  Hypergraph h = hg({fin({0, 1}), fin({1, 2}), fin({2, 3}), fin({0, 3})});
  auto oracle = brute_minimal_covers(h);
  for (const auto& y : oracle) {
    auto ws = find_witness(h, y);
    REQUIRE(std::holds_alternative<WitnessedCover>(ws));
    const auto& wc = std::get<WitnessedCover>(ws);
    REQUIRE(verify_witnessed_cover(h, wc));
    std::vector<std::size_t> used;
    for (const auto& [pt, e] : wc.witness) used.push_back(e);
    std::sort(used.begin(), used.end());
    REQUIRE(std::adjacent_find(used.begin(), used.end()) == used.end());
  }
}
