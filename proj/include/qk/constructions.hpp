#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qk/common.hpp"
#include "qk/fpalg.hpp"
#include "qk/groups.hpp"

namespace qk::constructions {

using groups::FiniteGroup;

// Cyclic group of order p^k, k >= 1.  Element i is the i-th power of the
// generator; index arithmetic is addition mod p^k.
FiniteGroup cyclic_group(std::uint32_t p, unsigned k);

// (C_p)^k, k >= 1.  Indices encode base-p digit vectors, first digit most
// significant.
FiniteGroup elementary_abelian_group(std::uint32_t p, unsigned k);

// Extraspecial group of order p^(2m+1) and exponent p, p odd, m >= 1.
// Elements are triples (a, b, c) with a, b in F_p^m and c in F_p:
//   (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')
// Index encoding is the digit string [a_1..a_m, b_1..b_m, c] in base p with
// c least significant, so the central generator z is index 1 and z^c is
// index c.  Generators are x_1..x_m, y_1..y_m with [x_i, y_j] = z^(i==j).
FiniteGroup extraspecial_exponent_p(std::uint32_t p, unsigned m);

// Index of the element (a, b, c) in the encoding above.  Digits are reduced
// mod p; a and b must each have length m.
Index extraspecial_index(std::uint32_t p, unsigned m, const std::vector<int> &a,
                         const std::vector<int> &b, int c);

// Central product (A x B)/N where N identifies the least-index nonidentity
// element of Omega_1(Z(A)) with that of Omega_1(Z(B)); both must have order
// exactly p.  Element indices name the class representative whose right
// component has least index.  embed_left/embed_right are the injective
// factor embeddings; their images intersect in the identified central
// subgroup.
struct CentralProduct {
  FiniteGroup group;
  std::vector<Index> embed_left;
  std::vector<Index> embed_right;
};

CentralProduct central_product(const FiniteGroup &A, const FiniteGroup &B);

// Automorphism of extraspecial_exponent_p(p, m) acting as (v, c) |->
// (vM, c + q(v) + <u, vM>) with q(v) = (1/2)(B(vM,vM) - B(v,v)) for
// B((a,b),(a',b')) = a.b', where M is symplectic with M^p = I.  q makes the
// map a homomorphism; u is the lexicographically first correction making the
// order divide p (u = 0 whenever possible).  Order is 1 iff M = I, else p.
struct LiftedAutomorphism {
  std::uint32_t p = 0;
  unsigned m = 0;
  fpalg::FpMatrix matrix;
  std::vector<int> correction;
  bool correction_is_zero = true;
  std::uint64_t order = 0;

  // action tables over the F_p^(2m) part: v |-> (vperm[v], central shift)
  std::vector<Index> vperm;
  std::vector<int> vshift;

  // x is an element index of extraspecial_exponent_p(p, m)
  Index apply(Index x) const {
    Index v = x / p;
    std::uint32_t c = x % p;
    return vperm[v] * p + (c + static_cast<std::uint32_t>(vshift[v])) % p;
  }
};

LiftedAutomorphism lift_symplectic(std::uint32_t p, unsigned m,
                                   const fpalg::FpMatrix &M);

// P = <g> |x X with X = extraspecial_exponent_p(p, m), g of order p acting
// by the lift of the fixed-space-free symplectic element phi_matrix(p, m).
// |P| = p^(2m+2).  Element (j, x) = g^j x has index j*|X| + x, so X embeds
// as the indices below |X|.
struct SemidirectExample {
  FiniteGroup group;
  std::uint32_t p = 0;
  unsigned m = 0;
  LiftedAutomorphism alpha;
  Index g = 0;                 // index of the acting generator
  std::vector<Index> x_gens;   // images of x_1..x_m
  std::vector<Index> y_gens;   // images of y_1..y_m
  int twist = 0;               // [g, y_1] = z^twist
  std::vector<Index> s_gens;   // <g x_1^(1-twist), y_1>, extraspecial p^3
};

SemidirectExample semidirect_example(std::uint32_t p, unsigned m);

// Family member P(p, t, k): for t = 0 this is semidirect_example(p, k+1);
// for t >= 1 the central product of semidirect_example(p, k+1) with an
// extraspecial group of order p^(2t+1).  |P| = p^(2(t+k+2)).  Requires
// p > 2k+3.
struct FamilyGroup {
  FiniteGroup group;
  std::uint32_t p = 0;
  unsigned t = 0;
  unsigned k = 0;
  SemidirectExample semi; // left factor (the whole group when t = 0)
  std::optional<FiniteGroup> extraspecial_factor; // right factor when t >= 1
  std::vector<Index> embed_semi;         // factor embeddings when t >= 1
  std::vector<Index> embed_extraspecial;
};

FamilyGroup family_group(std::uint32_t p, unsigned t, unsigned k);

} // namespace qk::constructions
