#pragma once

#include <cstdint>
#include <string>

#include "hypercover/json_io.hpp"

namespace hypercover {

/// Counter-based generator: the i-th value is a pure function of
/// (seed, stream, i), so any trial can be replayed from the root seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1))) {}

  std::uint64_t next() {
    std::uint64_t z = seed_ + (++ctr_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::uint64_t seed_;
  std::uint64_t ctr_ = 0;
};

struct GenParams {
  unsigned k = 2;
  unsigned r = 1;
  unsigned edges = 4;
  std::uint64_t max_vertex = 32;   // vertex pool bound for finite edges
  unsigned max_edge_size = 4;
  unsigned budget = 20000;         // rejection budget
};

/// Bounds from the CLI contract: edges <= 64, vertices <= 10^6,
/// periods <= 210. Throws BadArity outside them.
void validate_params(const GenParams& p);

/// Finite edges, rejection-sampled until the C(k,r) check passes.
Instance gen_finite_ckr(const GenParams& p, std::uint64_t seed);

/// Arithmetic progressions with periods dividing 210 plus finite
/// perturbations, rejection-checked so every k-wise intersection has
/// fewer than r points.
Instance gen_epset_ckr(const GenParams& p, std::uint64_t seed);

/// k edges sharing exactly an r-point core: a guaranteed violation whose
/// first offending tuple is (0, ..., k-1).
Instance gen_sunflower_violation(const GenParams& p, std::uint64_t seed);

/// Small mixed instance (infinite and finite edges) satisfying the
/// two-tier hypotheses: C(k,r), pairwise-finite infinite intersections,
/// antichain.
Instance gen_mixed_two_tier(const GenParams& p, std::uint64_t seed);

/// Dispatch by generator name ("finite_ckr", "epset_ckr",
/// "sunflower_violation", "mixed").
Instance generate(const std::string& kind, const GenParams& p,
                  std::uint64_t seed);

}  // namespace hypercover
