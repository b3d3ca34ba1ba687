#include <doctest.h>

#include "hypercover/errors.hpp"
#include "hypercover/fuzz.hpp"
#include "hypercover/json_io.hpp"
#include "hypercover/stepping.hpp"

using namespace hypercover;
using nlohmann::json;

namespace {

EpSet fin(std::vector<std::uint64_t> xs) { return EpSet::finite(std::move(xs)); }

}  // namespace

TEST_CASE("epset textual forms") {
  CHECK(epset_from_json(json::parse(R"({"ap":[0,2]})")) == EpSet::ap(0, 2));
  CHECK(epset_from_json(json::parse(R"({"fin":[3,1]})")) == fin({1, 3}));
  CHECK(epset_from_json(
            json::parse(R"({"fin":[5],"t":9,"p":2,"res":[1]})")) ==
        (fin({5}) | EpSet::ap(9, 2)));
  CHECK_THROWS_AS(epset_from_json(json::parse(R"({"ap":[1,0]})")), Error);
  CHECK_THROWS_AS(epset_from_json(json::parse(R"({"res":[5],"p":2})")), Error);
}

TEST_CASE("round trips") {
  CounterRng rng(4242);
  GenParams p;
  p.k = 3;
  p.r = 2;
  p.edges = 5;
  for (unsigned t = 0; t < 15; ++t) {
    Instance inst = gen_epset_ckr(p, rng.next());
    json j = instance_to_json(inst);
    Instance back = instance_from_json(j);
    REQUIRE(back.hypergraph.edges() == inst.hypergraph.edges());
    REQUIRE(instance_to_json(back) == j);

    Cut cut{{EpSet(), inst.hypergraph.edge(0), inst.hypergraph.universe()}};
    REQUIRE(cut_from_json(cut_to_json(cut)).layers == cut.layers);

    BlockOrder ord = build_maximizing(inst.hypergraph, p.k, p.r);
    json oj = order_to_json(ord);
    REQUIRE(order_to_json(order_from_json(oj)) == oj);

    WitnessedCover wc = extract_cover(ord, inst.hypergraph);
    REQUIRE(cover_from_json(cover_to_json(wc)) == wc);
  }
}

TEST_CASE("cover and order parse errors") {
  CHECK_THROWS_AS(cover_from_json(json::parse(R"({"Y":[1],"w":{}})")), Error);
  CHECK_THROWS_AS(cover_from_json(json::parse(R"({"Y":[],"w":{"3":0}})")),
                  Error);
  CHECK_THROWS_AS(order_from_json(json::parse(
                      R"([{"ground":{"fin":[1]},"inner":"sideways"}])")),
                  Error);
  // overlapping grounds are rejected by validation
  CHECK_THROWS_AS(
      order_from_json(json::parse(
          R"([{"ground":{"fin":[1]},"inner":"nat"},
              {"ground":{"fin":[1,2]},"inner":"nat"}])")),
      Error);
  // promoted vertex must live in its block
  CHECK_THROWS_AS(order_from_json(json::parse(
                      R"([{"ground":{"fin":[1]},"inner":{"promoted":9}}])")),
                  Error);
}

TEST_CASE("instance parsing errors") {
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"edges":[{"fin":[]}]})")),
                  Error);
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"nope":1})")), Error);
  CHECK_THROWS_AS(parse_json_text("{oops"), Error);
  // declared properties are verified on load
  CHECK_THROWS_AS(
      instance_from_json(json::parse(
          R"({"edges":[{"fin":[0,1]},{"fin":[0,1,2]}],"k":2,"r":1})")),
      Error);
}

TEST_CASE("finite_ckr generator") {
  GenParams p;
  p.k = 2;
  p.r = 1;
  p.edges = 4;
  p.max_vertex = 10;
  CounterRng rng(5);
  for (unsigned t = 0; t < 25; ++t) {
    Instance inst = gen_finite_ckr(p, rng.next());
    REQUIRE(inst.hypergraph.size() == p.edges);
    REQUIRE(inst.hypergraph.check_c(p.k, Card::finite(p.r)).ok());
    for (const EpSet& e : inst.hypergraph.edges()) REQUIRE(e.is_finite());
  }
}

TEST_CASE("epset_ckr generator") {
  GenParams p;
  p.edges = 5;
  CounterRng rng(6);
  for (unsigned t = 0; t < 25; ++t) {
    p.k = 2 + t % 3;
    p.r = 1 + t % 5;
    Instance inst = gen_epset_ckr(p, rng.next());
    REQUIRE(inst.hypergraph.size() == p.edges);
    REQUIRE(inst.hypergraph.check_c(p.k, Card::finite(p.r)).ok());
    for (const EpSet& e : inst.hypergraph.edges())
      REQUIRE(e.period() <= 210);
  }
}

TEST_CASE("sunflower generator plants the first tuple") {
  GenParams p;
  CounterRng rng(7);
  for (unsigned t = 0; t < 25; ++t) {
    p.k = 2 + t % 3;
    p.r = 1 + t % 4;
    p.edges = p.k;
    Instance inst = gen_sunflower_violation(p, rng.next());
    auto cc = inst.hypergraph.check_c(p.k, Card::finite(p.r));
    REQUIRE_FALSE(cc.ok());
    std::vector<std::size_t> expected(p.k);
    for (unsigned i = 0; i < p.k; ++i) expected[i] = i;
    REQUIRE(*cc.violation == expected);
  }
}

TEST_CASE("generators are deterministic per seed") {
  GenParams p;
  p.k = 3;
  p.r = 2;
  p.edges = 5;
  CHECK(instance_to_json(gen_epset_ckr(p, 99)) ==
        instance_to_json(gen_epset_ckr(p, 99)));
  CHECK(instance_to_json(gen_finite_ckr(p, 99)) ==
        instance_to_json(gen_finite_ckr(p, 99)));
  CHECK(instance_to_json(gen_epset_ckr(p, 99)) !=
        instance_to_json(gen_epset_ckr(p, 100)));
}

TEST_CASE("generator bounds are validated") {
  GenParams p;
  p.edges = 100;
  CHECK_THROWS_AS(gen_finite_ckr(p, 1), Error);
}

TEST_CASE("fuzz run is deterministic and self-verifying") {
  FuzzConfig cfg;
  cfg.seed = 12;
  cfg.trials = 2;
  auto a = run_fuzz(cfg);
  auto b = run_fuzz(cfg);
  REQUIRE(a.size() == b.size());
  std::string sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += report_to_json(a[i]).dump() + "\n";
    sb += report_to_json(b[i]).dump() + "\n";
  }
  CHECK(sa == sb);
  for (const TrialReport& r : a) {
    INFO(report_to_json(r).dump());
    CHECK(r.pass());
  }
  // A parallel run reaches the same bytes.
  FuzzConfig par = cfg;
  par.jobs = 4;
  auto c = run_fuzz(par);
  std::string sc;
  for (const auto& r : c) sc += report_to_json(r).dump() + "\n";
  CHECK(sc == sa);
}

TEST_CASE("fuzz filters select pairs") {
  FuzzConfig cfg;
  cfg.seed = 3;
  cfg.trials = 1;
  cfg.generators = {"sunflower_violation"};
  auto reports = run_fuzz(cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].generator == "sunflower_violation");
  CHECK(reports[0].check == "negative");
  CHECK(reports[0].pass());
}
