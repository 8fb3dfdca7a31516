#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qk {

// Element index inside a finite group's universe [0, size).
using Index = std::uint32_t;

// Resource gates for enumeration and complex construction.  Exceeding a
// gate raises FeasibilityError rather than silently truncating.
struct Limits {
  std::uint64_t max_elements = 200000;
  std::uint64_t max_simplices = 1000000;
};

class FeasibilityError : public std::runtime_error {
public:
  explicit FeasibilityError(const std::string &what)
      : std::runtime_error(what) {}
};

bool is_prime(std::uint64_t n);
bool is_odd_prime(std::uint64_t n);

// Returns p when n = p^k with p prime and k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

// Deterministic generator; every randomized check in the toolkit seeds
// through this so runs are reproducible.
std::mt19937_64 seeded_rng(std::uint64_t salt);

// Fixed-capacity dynamic bitset over element indices.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size_bits() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  std::size_t count() const;
  bool subset_of(const Bitset &other) const;
  bool intersects(const Bitset &other) const;
  Bitset intersect(const Bitset &other) const;

  bool operator==(const Bitset &other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }
  bool operator!=(const Bitset &other) const { return !(*this == other); }

  // Orders sets as sorted index lists compared lexicographically: the set
  // holding the smaller first-differing element comes first.
  bool lex_less(const Bitset &other) const;

  std::uint64_t hash() const;

  // Calls f(i) for every set bit, in increasing order.
  template <typename F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        f(static_cast<Index>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Index> to_indices() const;

private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset &b) const {
    return static_cast<std::size_t>(b.hash());
  }
};

} // namespace qk
