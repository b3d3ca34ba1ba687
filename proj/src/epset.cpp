#include "hypercover/epset.hpp"

#include <algorithm>
#include <numeric>

#include "hypercover/errors.hpp"

namespace hypercover {

namespace {

constexpr std::uint64_t kMaxPeriodLcm = 1u << 22;
constexpr std::uint64_t kMaxWindow = 1u << 24;

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (q > kMaxPeriodLcm / b)
    raise(Errc::overflow, "period lcm exceeds the supported bound");
  return q * b;
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

EpSet EpSet::finite(std::vector<std::uint64_t> elems) {
  return make(std::move(elems), 0, 1, {});
}

EpSet EpSet::ap(std::uint64_t start, std::uint64_t step) {
  if (step == 0) raise(Errc::bad_arity, "progression step must be >= 1");
  EpSet s;
  s.t_ = start;
  s.p_ = step;
  s.res_ = {start % step};
  s.canonicalize();
  return s;
}

EpSet EpSet::make(std::vector<std::uint64_t> elems, std::uint64_t t,
                  std::uint64_t p, std::vector<std::uint64_t> res) {
  if (p == 0) raise(Errc::bad_arity, "period must be >= 1");
  sort_unique(res);
  if (!res.empty() && res.back() >= p)
    raise(Errc::bad_arity, "residue out of range");
  sort_unique(elems);

  if (res.empty()) {  // no tail: the listed elements are the whole set
    EpSet s;
    s.t_ = elems.empty() ? 0 : elems.back() + 1;
    s.fin_ = std::move(elems);
    s.canonicalize();
    return s;
  }

  EpSet s;
  s.t_ = t;
  s.p_ = p;
  s.res_ = std::move(res);

  // Fold listed elements at or beyond the threshold into an extended
  // finite part so that the invariant fin ⊂ [0, t) holds.
  std::uint64_t t_ext = t;
  if (!elems.empty() && elems.back() >= t) t_ext = elems.back() + 1;
  if (t_ext - t > kMaxWindow)
    raise(Errc::overflow, "finite part too far beyond the threshold");
  std::vector<std::uint64_t> fin;
  for (std::uint64_t x : elems)
    if (x < t) fin.push_back(x);
  for (std::uint64_t x = t; x < t_ext; ++x)
    if (sorted_contains(elems, x) || s.tail_contains(x)) fin.push_back(x);
  sort_unique(fin);
  s.fin_ = std::move(fin);
  s.t_ = t_ext;
  s.canonicalize();
  return s;
}

bool EpSet::tail_contains(std::uint64_t x) const {
  return sorted_contains(res_, x % p_);
}

bool EpSet::contains(std::uint64_t x) const {
  if (x < t_) return sorted_contains(fin_, x);
  return tail_contains(x);
}

void EpSet::canonicalize() {
  if (res_.empty()) {
    p_ = 1;
  } else {
    // Minimal period: the least divisor d of p such that the residue
    // pattern is invariant under shifting by d.
    std::vector<char> tail(p_, 0);
    for (std::uint64_t r : res_) tail[r] = 1;
    for (std::uint64_t d = 1; d < p_; ++d) {
      if (p_ % d != 0) continue;
      bool ok = true;
      for (std::uint64_t r = 0; r < p_ && ok; ++r)
        ok = tail[r] == tail[(r + d) % p_];
      if (ok) {
        std::vector<std::uint64_t> reduced;
        for (std::uint64_t r = 0; r < d; ++r)
          if (tail[r]) reduced.push_back(r);
        res_ = std::move(reduced);
        p_ = d;
        break;
      }
    }
    if (res_.size() == p_) {  // full tail
      res_ = {0};
      p_ = 1;
    }
  }
  // Minimal threshold: pull the boundary down while the last finite slot
  // agrees with the tail pattern.
  while (t_ > 0) {
    std::uint64_t x = t_ - 1;
    bool in_fin = !fin_.empty() && fin_.back() == x;
    if (in_fin != tail_contains(x)) break;
    if (in_fin) fin_.pop_back();
    t_ = x;
  }
}

Card EpSet::cardinality() const {
  if (!res_.empty()) return Card::aleph0();
  return Card::finite(fin_.size());
}

std::uint64_t EpSet::min_element() const {
  if (empty()) raise(Errc::empty_set, "min of the empty set");
  if (!fin_.empty()) return fin_.front();
  std::uint64_t best = 0;
  bool have = false;
  for (std::uint64_t r : res_) {
    std::uint64_t k = t_ % p_;
    std::uint64_t x = t_ + (r >= k ? r - k : p_ - k + r);
    if (!have || x < best) {
      best = x;
      have = true;
    }
  }
  return best;
}

std::uint64_t EpSet::max_element() const {
  if (empty()) raise(Errc::empty_set, "max of the empty set");
  if (!res_.empty()) raise(Errc::overflow, "max of an infinite set");
  return fin_.back();
}

std::vector<std::uint64_t> EpSet::enumerate(std::size_t n) const {
  std::vector<std::uint64_t> out;
  out.reserve(std::min<std::size_t>(n, fin_.size() + 1));
  for (std::uint64_t x : fin_) {
    if (out.size() == n) return out;
    out.push_back(x);
  }
  if (res_.empty()) return out;
  for (std::uint64_t x = t_; out.size() < n; ++x)
    if (tail_contains(x)) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> EpSet::members_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x : fin_) {
    if (x >= bound) return out;
    out.push_back(x);
  }
  if (res_.empty()) return out;
  for (std::uint64_t x = t_; x < bound; ++x)
    if (tail_contains(x)) out.push_back(x);
  return out;
}

bool EpSet::subset_of(const EpSet& other) const {
  return (*this - other).empty();
}

std::uint64_t EpSet::joint_window(const EpSet& a, const EpSet& b) {
  return std::max(a.t_, b.t_) + 2 * lcm_checked(a.p_, b.p_);
}

namespace {

template <typename Op>
EpSet combine(const EpSet& a, const EpSet& b, Op op) {
  std::uint64_t p = lcm_checked(a.period(), b.period());
  std::uint64_t t = std::max(a.threshold(), b.threshold());

  std::vector<std::uint64_t> res;
  for (std::uint64_t r = 0; r < p; ++r) {
    // Tail membership beyond t depends only on the residue mod each period.
    bool ina = std::binary_search(a.residues().begin(), a.residues().end(),
                                  r % a.period());
    bool inb = std::binary_search(b.residues().begin(), b.residues().end(),
                                  r % b.period());
    if (op(ina, inb)) res.push_back(r);
  }

  // Candidates below t: members of either operand (all three operations
  // produce subsets of the union, so nothing else can appear).
  std::vector<std::uint64_t> cand = a.members_below(t);
  {
    std::vector<std::uint64_t> more = b.members_below(t);
    cand.insert(cand.end(), more.begin(), more.end());
  }
  sort_unique(cand);
  std::vector<std::uint64_t> fin;
  for (std::uint64_t x : cand)
    if (op(a.contains(x), b.contains(x))) fin.push_back(x);

  return EpSet::make(std::move(fin), t, p, std::move(res));
}

}  // namespace

EpSet operator|(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EpSet operator&(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EpSet operator-(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

EpSet boolean_op(const std::string& op, const EpSet& a, const EpSet& b) {
  if (op == "union") return a | b;
  if (op == "intersect") return a & b;
  if (op == "difference") return a - b;
  raise(Errc::bad_arity, "unknown boolean op '" + op + "'");
}

EpSet prefix_union(const std::vector<EpSet>& layers, std::size_t count) {
  EpSet acc;
  count = std::min(count, layers.size());
  for (std::size_t i = 0; i < count; ++i) acc = acc | layers[i];
  return acc;
}

std::string EpSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fin_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(fin_[i]);
  }
  out += "}";
  if (!res_.empty()) {
    out += "+(t=" + std::to_string(t_) + ",p=" + std::to_string(p_) + ",res={";
    for (std::size_t i = 0; i < res_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(res_[i]);
    }
    out += "})";
  }
  return out;
}

}  // namespace hypercover
