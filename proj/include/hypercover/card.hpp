#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hypercover/errors.hpp"

namespace hypercover {

/// A set cardinality: a natural number or aleph-null. Aleph-null compares
/// strictly greater than every finite value.
class Card {
 public:
  static Card finite(std::uint64_t n) { return Card(false, n); }
  static Card aleph0() { return Card(true, 0); }

  bool is_finite() const { return !infinite_; }

  std::uint64_t value() const {
    if (infinite_) raise(Errc::overflow, "cardinality is aleph0");
    return n_;
  }

  friend bool operator==(const Card&, const Card&) = default;

  friend std::strong_ordering operator<=>(const Card& a, const Card& b) {
    if (a.infinite_ != b.infinite_)
      return a.infinite_ ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    return a.n_ <=> b.n_;
  }

  std::string str() const {
    return infinite_ ? "aleph0" : std::to_string(n_);
  }

 private:
  Card(bool infinite, std::uint64_t n) : infinite_(infinite), n_(n) {}

  bool infinite_;
  std::uint64_t n_;
};

}  // namespace hypercover
