#include "qk/common.hpp"

namespace qk {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

bool is_odd_prime(std::uint64_t n) { return n != 2 && is_prime(n); }

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2)
    return 0;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  while (n % p == 0)
    n /= p;
  return n == 1 ? p : 0;
}

std::mt19937_64 seeded_rng(std::uint64_t salt) {
  // splitmix-style scramble so nearby salts give unrelated streams
  std::uint64_t z = salt + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return std::mt19937_64(z ^ (z >> 31));
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_)
    c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool Bitset::subset_of(const Bitset &other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

bool Bitset::intersects(const Bitset &other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i])
      return true;
  return false;
}

Bitset Bitset::intersect(const Bitset &other) const {
  Bitset out(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

bool Bitset::lex_less(const Bitset &other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      // the side owning the lowest differing bit sorts first
      return words_[i] & (diff & (~diff + 1));
    }
  }
  return false;
}

std::uint64_t Bitset::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ nbits_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

std::vector<Index> Bitset::to_indices() const {
  std::vector<Index> out;
  out.reserve(count());
  for_each([&](Index i) { out.push_back(i); });
  return out;
}

} // namespace qk
