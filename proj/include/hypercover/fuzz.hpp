#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercover/generate.hpp"

namespace hypercover {

// Verification helpers shared by the fuzz harness and the acceptance
// suite. Each returns nullopt on success and a readable failure detail
// otherwise; the instance параметры are the generator's declared (k, r).

/// Boolean ops against pointwise membership on the complete joint window.
std::optional<std::string> check_epset_window(CounterRng& rng);

/// build_maximizing maximizes, the per-part subsystem keeps C(k-1,r), and
/// the extracted cover passes the witness test.
std::optional<std::string> check_maxwo_extract(const Hypergraph& h, unsigned k,
                                             unsigned r);

/// Every pipeline's cover on a small finite instance is one of the
/// brute-force minimal covers.
std::optional<std::string> check_oracle_membership(const Hypergraph& h,
                                                   unsigned k, unsigned r);

/// Closure chains are good cuts and every sampled r-subset of a layer is
/// contained in at most k-1 distinct edges.
std::optional<std::string> check_good_cut(const Hypergraph& h, unsigned k,
                                          unsigned r);

/// Degenerate-cut equality plus verification of layered covers and
/// layered orders over a nontrivial cut.
std::optional<std::string> check_step_up(const Hypergraph& h, unsigned k,
                                         unsigned r);

/// Planted violations are flagged with the exact planted tuple.
std::optional<std::string> check_negative(const Hypergraph& h, unsigned k,
                                          unsigned r);

/// The two-tier cover agrees with the brute oracle on the
/// intersection-pattern-preserving finite truncation.
std::optional<std::string> check_two_tier_truncation(const Hypergraph& h,
                                                     unsigned k, unsigned r);

/// Replaces each infinite edge by its intersection with [0, T] where T
/// lies beyond every pairwise intersection and every listed point.
Hypergraph truncate_preserving(const Hypergraph& h,
                               const std::vector<std::uint64_t>& keep);

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TrialReport {
  std::uint64_t seed = 0;   // replay seed of this trial
  std::uint64_t trial = 0;  // global trial index
  std::string generator;
  std::string check;
  unsigned k = 0, r = 0, edges = 0;
  std::vector<CheckOutcome> checks;
  std::optional<std::string> counterexample;  // serialized instance

  bool pass() const;
};

struct FuzzConfig {
  std::uint64_t seed = 1;
  unsigned trials = 50;
  std::vector<std::string> generators;  // empty selects all
  std::vector<std::string> checks;      // empty selects all
  unsigned jobs = 1;
};

/// Runs the compatible generator/check pairs over the requested trial
/// count. Reports come back sorted by trial index and are a pure function
/// of the config.
std::vector<TrialReport> run_fuzz(const FuzzConfig& cfg);

nlohmann::json report_to_json(const TrialReport& r);

/// Names accepted by FuzzConfig.
std::vector<std::string> fuzz_generator_names();
std::vector<std::string> fuzz_check_names();

}  // namespace hypercover
