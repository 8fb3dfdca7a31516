#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qk/common.hpp"
#include "qk/groups.hpp"

namespace qk::posets {

using groups::FiniteGroup;
using groups::Subgroup;

// Rank-1 subgroups are handled through one representative each: the least
// element index generating the subgroup.  A commutation bitmap over
// representative positions is filled lazily (by espec's pair sweep or on
// demand) and shared between enumerations of the same group; when the
// representative count is too large to table, checks fall back to direct
// multiplication.
struct Rank1Context {
  std::vector<Index> reps;            // ascending element indices
  std::vector<std::uint32_t> pos_of;  // element -> position, npos otherwise
  std::vector<std::uint64_t> commute_bits;
  std::size_t row_words = 0;
  bool tabled = false;

  static constexpr std::uint32_t npos = 0xffffffffu;

  bool commute(const FiniteGroup &G, std::uint32_t i, std::uint32_t j) const {
    if (tabled)
      return (commute_bits[i * row_words + (j >> 6)] >> (j & 63)) & 1u;
    Index a = reps[i], b = reps[j];
    return G.mul(a, b) == G.mul(b, a);
  }
};

// Least-index generator of every order-p subgroup, ascending.
std::vector<Index> rank1_representatives(const FiniteGroup &G);

Rank1Context make_rank1_context(const FiniteGroup &G);

// The order-p subgroups themselves (materialized; small-scale use).
std::vector<Subgroup> rank1_subgroups(const FiniteGroup &G);

// Subgroup family with carrier in canonical order (by order, then by
// membership set); the order relation is inclusion, recovered via bitset
// subset tests.  Inclusion implies a strictly smaller carrier index.
struct SubgroupPoset {
  FiniteGroup parent;
  std::vector<Subgroup> members;
};

// All elementary abelian subgroups of order >= p^2.  Rank-2 members come
// from commuting pairs of distinct rank-1 subgroups; rank r+1 extends a
// rank-r member by a commuting rank-1 subgroup outside it.
SubgroupPoset elem_abelian_poset(const FiniteGroup &G, const Limits &lim = {},
                                 Rank1Context *ctx = nullptr);

// The members strictly containing Z = Omega_1(Z(G)); requires |Z| = p
// (equivalently Z(G) cyclic).  Agrees with filtering elem_abelian_poset by
// Z < H.
SubgroupPoset above_z_poset(const FiniteGroup &G, const Limits &lim = {},
                            Rank1Context *ctx = nullptr);

struct EspecReport {
  Subgroup z;                          // Omega_1(Z(G))
  bool z_rank_one = false;             // |Z| = p
  std::vector<Subgroup> members;       // E(G) in canonical order
  std::map<unsigned, std::uint64_t> a; // n -> #members of order p^(2n+1)
};

// E(G): extraspecial exponent-p subgroups X with Omega_1(C_G(X)) = Z(X).
// Nonempty only when |Omega_1(Z(G))| = p, in which case Z(X) = Z for every
// member.  Enumerates all extraspecial subgroups with center Z level by
// level (order p^3 from noncommuting rank-1 pairs with central commutator,
// order p^(2n+3) by extending with a commuting such pair), then filters by
// the centralizer condition.
EspecReport espec(const FiniteGroup &G, const Limits &lim = {},
                  Rank1Context *ctx = nullptr);

// Every subgroup, by iterated join closure; brute-force verification scale.
std::vector<Subgroup> all_subgroups(const FiniteGroup &G,
                                    std::uint64_t max_order = 243);

// {X : Z < X = Omega_1(X), [X,X] <= Z} and its inclusion-maximal members.
std::vector<Subgroup> mz_members_bruteforce(const FiniteGroup &G,
                                            const Subgroup &z,
                                            std::uint64_t max_order = 243);
std::vector<Subgroup> mz_star_bruteforce(const FiniteGroup &G,
                                         const Subgroup &z,
                                         std::uint64_t max_order = 243);
// Z = Omega_1(Z(G)), which must have order p.
std::vector<Subgroup> mz_star_bruteforce(const FiniteGroup &G);

} // namespace qk::posets
