#include "hypercover/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hypercover/errors.hpp"

namespace hypercover {

using nlohmann::json;

namespace {

EpSet random_epset(CounterRng& rng) {
  std::vector<std::uint64_t> fin;
  unsigned nf = static_cast<unsigned>(rng.below(5));
  for (unsigned i = 0; i < nf; ++i) fin.push_back(rng.below(30));
  std::uint64_t p = 1 + rng.below(12);
  std::vector<std::uint64_t> res;
  for (std::uint64_t x = 0; x < p; ++x)
    if (rng.chance(30)) res.push_back(x);
  std::uint64_t t = rng.below(15);
  return EpSet::make(std::move(fin), t, p, std::move(res));
}

std::string pts_str(const std::vector<std::uint64_t>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pts[i]);
  }
  return s + "}";
}

bool oracle_has(const std::vector<std::vector<std::uint64_t>>& oracle,
                const std::vector<std::uint64_t>& pts) {
  return std::binary_search(oracle.begin(), oracle.end(), pts);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t r = idx.size();
  std::size_t i = r;
  while (i-- > 0) {
    if (idx[i] != i + n - r) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::string> check_epset_window(CounterRng& rng) {
  static const char* ops[] = {"union", "intersect", "difference"};
  EpSet a = random_epset(rng);
  EpSet b = random_epset(rng);
  std::uint64_t window = EpSet::joint_window(a, b);
  for (const char* op : ops) {
    EpSet c = boolean_op(op, a, b);
    for (std::uint64_t x = 0; x <= window; ++x) {
      bool lhs = c.contains(x);
      bool rhs = op == std::string("union")
                     ? (a.contains(x) || b.contains(x))
                     : op == std::string("intersect")
                           ? (a.contains(x) && b.contains(x))
                           : (a.contains(x) && !b.contains(x));
      if (lhs != rhs)
        return "op " + std::string(op) + " disagrees at x=" +
               std::to_string(x) + " for " + a.str() + ", " + b.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_maxwo_extract(const Hypergraph& h, unsigned k,
                                             unsigned r) {
  BlockOrder ord = build_maximizing(h, k, r);
  if (!is_maximizing(ord, h)) return "constructed order does not maximize";

  // Inner claim: the traces of the later, distinct edges on each part of
  // the disjointification form a C(k-1,r) family.
  if (k >= 2) {
    std::vector<EpSet> parts = disjointify(h);
    for (std::size_t n = 0; n < parts.size(); ++n) {
      if (parts[n].empty()) continue;
      std::vector<EpSet> traces;
      for (std::size_t m = n + 1; m < h.size(); ++m) {
        if (h.edge(m) == h.edge(n)) continue;
        EpSet t = h.edge(m) & parts[n];
        if (!t.empty()) traces.push_back(std::move(t));
      }
      if (traces.empty()) continue;
      if (!Hypergraph(traces).check_c(k - 1, Card::finite(r)).ok())
        return "subsystem of part " + std::to_string(n) + " lacks C(k-1,r)";
    }
  }

  WitnessedCover wc = extract_cover(ord, h);
  if (!verify_witnessed_cover(h, wc)) return "extracted cover fails invariants";
  WitnessSearch ws = find_witness(h, wc.points());
  if (!std::holds_alternative<WitnessedCover>(ws))
    return "extracted cover is not minimal";
  return std::nullopt;
}

std::optional<std::string> check_oracle_membership(const Hypergraph& h,
                                                   unsigned k, unsigned r) {
  auto oracle = brute_minimal_covers(h);

  WitnessedCover by_maxwo = solve_maxwo(h, k, r);
  if (!oracle_has(oracle, by_maxwo.points()))
    return "maxwo cover " + pts_str(by_maxwo.points()) + " not in the oracle";

  Cut chain = build_closure_chain(h, k, r);
  WitnessedCover by_layer = layered_cover(
      h, chain, [](const Hypergraph& piece) { return solve_brute(piece); });
  if (!oracle_has(oracle, by_layer.points()))
    return "layered cover " + pts_str(by_layer.points()) + " not in the oracle";

  // The two-tier route goes through the subset-minimal subfamily, whose
  // minimal covers are minimal covers of the whole family.
  Hypergraph collapsed = subhypergraph(h, h.min_family());
  WitnessedCover by_two_tier = two_tier_cover(collapsed, r, k);
  if (!verify_witnessed_cover(collapsed, by_two_tier))
    return "two-tier cover fails invariants";
  if (!oracle_has(oracle, by_two_tier.points()))
    return "two-tier cover " + pts_str(by_two_tier.points()) +
           " not in the oracle";

  WitnessedCover by_prune = minimalize(h, h.universe().finite_part());
  if (!oracle_has(oracle, by_prune.points()))
    return "pruned cover " + pts_str(by_prune.points()) + " not in the oracle";

  return std::nullopt;
}

std::optional<std::string> check_good_cut(const Hypergraph& h, unsigned k,
                                          unsigned r) {
  Cut cut = build_closure_chain(h, k, r);
  if (!is_good_cut(h, cut)) return "closure chain is not a good cut";

  // Multiplicity bound: any r points lie in at most k-1 distinct edges.
  std::vector<EpSet> distinct;
  for (const EpSet& e : h.edges())
    if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
      distinct.push_back(e);

  for (const EpSet& layer : cut.layers) {
    std::vector<std::uint64_t> pts = layer.finite_part();
    if (pts.size() < r) continue;
    // Lexicographic prefix of the r-subsets, capped per layer.
    std::vector<std::size_t> idx(r);
    for (unsigned i = 0; i < r; ++i) idx[i] = i;
    unsigned sampled = 0;
    do {
      std::vector<std::uint64_t> x;
      for (std::size_t i : idx) x.push_back(pts[i]);
      EpSet xs = EpSet::finite(x);
      unsigned holders = 0;
      for (const EpSet& e : distinct)
        if (xs.subset_of(e)) ++holders;
      if (holders >= k)
        return "r-subset " + pts_str(x) + " lies in " +
               std::to_string(holders) + " edges";
    } while (++sampled < 3000 && next_combination(idx, pts.size()));
  }
  return std::nullopt;
}

std::optional<std::string> check_step_up(const Hypergraph& h, unsigned k,
                                         unsigned r) {
  bool all_finite = true;
  for (const EpSet& e : h.edges())
    if (!e.is_finite()) all_finite = false;

  CoverSolver via_order = [k, r](const Hypergraph& piece) {
    return solve_maxwo(piece, k, r);
  };
  CoverSolver direct = all_finite
                           ? CoverSolver([](const Hypergraph& piece) {
                               return solve_brute(piece);
                             })
                           : via_order;

  EpSet u = h.universe();
  Cut degenerate;
  degenerate.layers.push_back(EpSet());
  if (!u.empty()) degenerate.layers.push_back(u);

  WitnessedCover via_layers = layered_cover(h, degenerate, direct);
  WitnessedCover straight = h.size() ? direct(h) : WitnessedCover{};
  if (!(via_layers == straight))
    return "degenerate cut disagrees with the direct solver";
  if (all_finite) {
    // the order-based sub-solver must reproduce itself as well
    WitnessedCover by_order = layered_cover(h, degenerate, via_order);
    if (!(by_order == (h.size() ? via_order(h) : WitnessedCover{})))
      return "degenerate cut disagrees with the order-based solver";
  }

  OrderBuilder builder = [k, r](const Hypergraph& piece) {
    return build_maximizing(piece, k, r);
  };
  BlockOrder deg_order = layered_order(h, degenerate, builder);
  if (!is_maximizing(deg_order, h))
    return "degenerate layered order does not maximize";

  Cut nontrivial;
  if (all_finite) {
    nontrivial = build_closure_chain(h, k, r);
  } else {
    EpSet core;
    for (const EpSet& e : h.edges())
      if (e.is_finite()) core = core | e;
    nontrivial.layers.push_back(EpSet());
    if (!core.empty() && !(core == u)) nontrivial.layers.push_back(core);
    nontrivial.layers.push_back(u);
  }
  if (!is_good_cut(h, nontrivial)) return "generated cut is not good";

  WitnessedCover layered = layered_cover(h, nontrivial, direct);
  if (!verify_witnessed_cover(h, layered))
    return "layered cover fails invariants";
  if (!std::holds_alternative<WitnessedCover>(find_witness(h, layered.points())))
    return "layered cover is not minimal";
  if (all_finite) {
    WitnessedCover by_order = layered_cover(h, nontrivial, via_order);
    if (!verify_witnessed_cover(h, by_order) ||
        !std::holds_alternative<WitnessedCover>(
            find_witness(h, by_order.points())))
      return "layered cover through orders fails verification";
  }

  BlockOrder ord = layered_order(h, nontrivial, builder);
  if (!is_maximizing(ord, h)) return "layered order does not maximize";

  return std::nullopt;
}

std::optional<std::string> check_negative(const Hypergraph& h, unsigned k,
                                          unsigned r) {
  CheckCResult cc = h.check_c(k, Card::finite(r));
  if (cc.ok()) return "planted violation not flagged";
  std::vector<std::size_t> expected(k);
  for (unsigned i = 0; i < k; ++i) expected[i] = i;
  if (*cc.violation != expected) return "wrong violating tuple";
  return std::nullopt;
}

Hypergraph truncate_preserving(const Hypergraph& h,
                               const std::vector<std::uint64_t>& keep) {
  std::vector<EpSet> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const EpSet& e = h.edge(i);
    if (e.is_finite()) {
      out.push_back(e);
      continue;
    }
    std::uint64_t top = e.min_element();
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (j == i) continue;
      EpSet meet = e & h.edge(j);
      if (!meet.is_finite())
        raise(Errc::hypothesis_violated, "infinite pairwise intersection");
      if (!meet.empty()) top = std::max(top, meet.max_element());
    }
    for (std::uint64_t y : keep)
      if (e.contains(y)) top = std::max(top, y);
    std::vector<std::uint64_t> rng_pts;
    for (std::uint64_t x = 0; x <= top + 1; ++x) rng_pts.push_back(x);
    out.push_back(e & EpSet::finite(std::move(rng_pts)));
  }
  return Hypergraph(std::move(out));
}

std::optional<std::string> check_two_tier_truncation(const Hypergraph& h,
                                                     unsigned k, unsigned r) {
  WitnessedCover wc = two_tier_cover(h, r, k);
  if (!verify_witnessed_cover(h, wc)) return "two-tier cover fails invariants";

  Hypergraph trunc = truncate_preserving(h, wc.points());
  auto oracle = brute_minimal_covers(trunc, 18);
  if (!oracle_has(oracle, wc.points()))
    return "cover " + pts_str(wc.points()) +
           " is not a minimal cover of the truncation";
  return std::nullopt;
}

bool TrialReport::pass() const {
  for (const CheckOutcome& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct Pair {
  std::string generator;
  std::string check;
};

const std::vector<Pair>& all_pairs() {
  static const std::vector<Pair> pairs = {
      {"epset_ckr", "epset_window"},  {"epset_ckr", "maxwo_extract"},
      {"epset_ckr", "step_up"},       {"finite_ckr", "maxwo_extract"},
      {"finite_ckr", "oracle"},       {"finite_ckr", "good_cut"},
      {"finite_ckr", "step_up"},      {"sunflower_violation", "negative"},
      {"mixed", "two_tier"},
  };
  return pairs;
}

GenParams params_for(const Pair& p, unsigned trial) {
  GenParams g;
  g.k = 2 + trial % 3;
  g.r = 1 + trial % 4;
  if (p.check == "oracle" || p.generator == "finite_ckr") {
    g.edges = 3 + trial % 4;
    g.max_vertex = 10;
    g.max_edge_size = 3;
  } else if (p.generator == "epset_ckr") {
    g.edges = 3 + trial % 6;
    g.max_edge_size = 3;
  } else if (p.generator == "mixed") {
    g.k = 2 + trial % 2;
    g.r = 2 + trial % 2;
    g.edges = 4;
  } else {  // sunflower
    g.edges = g.k;
  }
  return g;
}

TrialReport run_trial(const FuzzConfig& cfg, std::size_t pair_idx,
                      unsigned trial, std::uint64_t global_index) {
  const Pair& p = all_pairs()[pair_idx];
  TrialReport rep;
  rep.trial = global_index;
  rep.generator = p.generator;
  rep.check = p.check;
  CounterRng derive(cfg.seed, (static_cast<std::uint64_t>(pair_idx) << 32) |
                                  trial);
  rep.seed = derive.next();

  GenParams g = params_for(p, trial);
  rep.k = g.k;
  rep.r = g.r;
  rep.edges = g.edges;

  Instance inst;
  try {
    inst = generate(p.generator, g, rep.seed);
  } catch (const std::exception& ex) {
    rep.checks.push_back({"generate", false, ex.what()});
    return rep;
  }

  std::optional<std::string> fail;
  try {
    if (p.check == "epset_window") {
      CounterRng rng(rep.seed, 0x77696eull);
      fail = check_epset_window(rng);
    } else if (p.check == "maxwo_extract") {
      fail = check_maxwo_extract(inst.hypergraph, g.k, g.r);
    } else if (p.check == "oracle") {
      fail = check_oracle_membership(inst.hypergraph, g.k, g.r);
    } else if (p.check == "good_cut") {
      fail = check_good_cut(inst.hypergraph, g.k, g.r);
    } else if (p.check == "step_up") {
      fail = check_step_up(inst.hypergraph, g.k, g.r);
    } else if (p.check == "negative") {
      fail = check_negative(inst.hypergraph, g.k, g.r);
    } else if (p.check == "two_tier") {
      fail = check_two_tier_truncation(inst.hypergraph, g.k, g.r);
    } else {
      fail = "unknown check";
    }
  } catch (const std::exception& ex) {
    fail = std::string("exception: ") + ex.what();
  }

  rep.checks.push_back({p.check, !fail.has_value(), fail.value_or("")});
  if (fail)
    rep.counterexample = instance_to_json(inst).dump();
  return rep;
}

}  // namespace

std::vector<TrialReport> run_fuzz(const FuzzConfig& cfg) {
  auto wanted = [](const std::vector<std::string>& filter,
                   const std::string& name) {
    return filter.empty() ||
           std::find(filter.begin(), filter.end(), name) != filter.end();
  };

  struct Task {
    std::size_t pair_idx;
    unsigned trial;
  };
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < all_pairs().size(); ++pi) {
    const Pair& p = all_pairs()[pi];
    if (!wanted(cfg.generators, p.generator) || !wanted(cfg.checks, p.check))
      continue;
    for (unsigned t = 0; t < cfg.trials; ++t) tasks.push_back({pi, t});
  }

  std::vector<TrialReport> reports(tasks.size());
  unsigned jobs = std::max(1u, cfg.jobs);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      reports[i] = run_trial(cfg, tasks[i].pair_idx, tasks[i].trial, i);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;
}

json report_to_json(const TrialReport& r) {
  json checks = json::array();
  for (const CheckOutcome& c : r.checks) {
    json jc{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  json out{{"trial", r.trial},
           {"seed", r.seed},
           {"generator", r.generator},
           {"check", r.check},
           {"params", json{{"k", r.k}, {"r", r.r}, {"edges", r.edges}}},
           {"pass", r.pass()},
           {"checks", checks}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

std::vector<std::string> fuzz_generator_names() {
  return {"finite_ckr", "epset_ckr", "sunflower_violation", "mixed"};
}

std::vector<std::string> fuzz_check_names() {
  return {"epset_window", "maxwo_extract", "oracle",   "good_cut",
          "step_up",      "negative",    "two_tier"};
}

}  // namespace hypercover
