#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qk/common.hpp"

namespace qk::groups {

// Multiplication oracle over element indices [0, size).  Implementations
// must be immutable after construction; FiniteGroup adds caching on top.
struct GroupOps {
  virtual ~GroupOps() = default;
  virtual std::uint64_t size() const = 0;
  virtual Index identity() const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual Index inv(Index a) const = 0;
  virtual std::vector<int> decode(Index a) const = 0;
  virtual std::string label() const = 0;
  virtual std::vector<Index> generators() const = 0;
  virtual std::uint32_t prime() const = 0;
};

// Value-semantic handle to an immutable finite p-group.  A full Cayley
// table is cached when size <= 4096; inverses are tabulated when the index
// space is small enough.  Construction runs identity/inverse/associativity
// spot checks (exhaustive for tiny groups) and rejects broken oracles.
class FiniteGroup {
public:
  FiniteGroup() = default;
  static FiniteGroup create(std::shared_ptr<const GroupOps> ops);

  std::uint64_t size() const { return im_->n; }
  Index identity() const { return im_->e; }
  std::uint32_t prime() const { return im_->p; }
  const std::string &label() const { return im_->label; }
  const std::vector<Index> &generators() const { return im_->gens; }

  Index mul(Index a, Index b) const {
    const Impl &im = *im_;
    if (!im.cayley.empty())
      return im.cayley[static_cast<std::size_t>(a) * im.n + b];
    return im.ops->mul(a, b);
  }
  Index inv(Index a) const {
    const Impl &im = *im_;
    if (!im.invtab.empty())
      return im.invtab[a];
    return im.ops->inv(a);
  }
  Index pow(Index g, std::int64_t e) const;
  Index conj(Index g, Index h) const { // g^h = h^-1 g h
    return mul(inv(h), mul(g, h));
  }
  Index comm(Index a, Index b) const { // [a,b] = a^-1 b^-1 a b
    return mul(inv(a), mul(inv(b), mul(a, b)));
  }

  std::vector<int> decode(Index a) const { return im_->ops->decode(a); }

  bool same_group(const FiniteGroup &o) const { return im_ == o.im_; }
  bool valid() const { return im_ != nullptr; }

  const GroupOps &ops() const { return *im_->ops; }

private:
  struct Impl {
    std::shared_ptr<const GroupOps> ops;
    std::uint64_t n = 0;
    Index e = 0;
    std::uint32_t p = 0;
    std::string label;
    std::vector<Index> gens;
    std::vector<Index> cayley; // n*n when n <= 4096
    std::vector<Index> invtab; // n when n small enough
  };
  std::shared_ptr<const Impl> im_;
};

// Subgroup of a fixed parent, held as a membership bitset plus a generator
// list.  Order always divides the parent order.
struct Subgroup {
  FiniteGroup parent;
  Bitset members;
  std::vector<Index> generators;
  std::uint64_t order = 0;

  bool contains(Index g) const { return members.test(g); }
  bool contains(const Subgroup &other) const {
    return other.members.subset_of(members);
  }
  bool operator==(const Subgroup &o) const { return members == o.members; }
};

// Canonical order on subgroups of one parent: by order, then by membership
// set compared as sorted index lists.
bool subgroup_less(const Subgroup &a, const Subgroup &b);

std::uint32_t element_order(const FiniteGroup &G, Index g);

Subgroup subgroup_closure(const FiniteGroup &G, std::vector<Index> gens);
Subgroup trivial_subgroup(const FiniteGroup &G);
Subgroup full_subgroup(const FiniteGroup &G);
Subgroup subgroup_from_members(const FiniteGroup &G, const Bitset &members,
                               std::vector<Index> gens);

Subgroup center(const FiniteGroup &G);
Subgroup centralizer(const FiniteGroup &G, const Subgroup &S);

// Subgroup generated by the order-dividing-p elements of S.
Subgroup omega1(const FiniteGroup &G, const Subgroup &S);

// [A, B]: generated by generator-pair commutators, saturated under
// conjugation by <A, B>.
Subgroup commutator_subgroup(const FiniteGroup &G, const Subgroup &A,
                             const Subgroup &B);

unsigned nilpotence_class(const FiniteGroup &G);

bool exponent_is_p(const FiniteGroup &G, const Subgroup &S);

enum class GroupClass { elementary_abelian, extraspecial, abelian_other, other };
const char *group_class_name(GroupClass c);

GroupClass classify(const FiniteGroup &G, const Subgroup &S);

// Builds a group from an explicit Cayley table.  table[i*order+j] is the
// index of the product; identity must sit at index 0.  Validates the latin
// square property, associativity, and that order is a power of p.
FiniteGroup from_cayley_table(std::uint64_t order, std::uint32_t p,
                              const std::vector<Index> &table,
                              const std::string &label);

} // namespace qk::groups
