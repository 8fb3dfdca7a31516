#include "qk/groups.hpp"

#include <algorithm>
#include <queue>

namespace qk::groups {

namespace {

constexpr std::uint64_t kCayleyCacheMax = 4096;
constexpr std::uint64_t kInvTableMax = 1u << 21;

void check_identity_and_inverses(const GroupOps &ops) {
  std::uint64_t n = ops.size();
  Index e = ops.identity();
  if (e >= n)
    throw std::logic_error("group oracle: identity index out of range");
  auto rng = seeded_rng(0x1d + n);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  std::uint64_t trials = std::min<std::uint64_t>(n, 1000);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Index g = n <= 1000 ? static_cast<Index>(t) : pick(rng);
    if (ops.mul(e, g) != g || ops.mul(g, e) != g)
      throw std::logic_error("group oracle: identity law fails at index " +
                             std::to_string(g));
    Index gi = ops.inv(g);
    if (gi >= n || ops.mul(g, gi) != e || ops.mul(gi, g) != e)
      throw std::logic_error("group oracle: inverse law fails at index " +
                             std::to_string(g));
  }
}

void check_associativity(const GroupOps &ops) {
  std::uint64_t n = ops.size();
  if (n <= 512) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (ops.mul(ops.mul(a, b), c) != ops.mul(a, ops.mul(b, c)))
            throw std::logic_error("group oracle: associativity fails");
    return;
  }
  auto rng = seeded_rng(0xa550c + n);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  for (int t = 0; t < 1000; ++t) {
    Index a = pick(rng), b = pick(rng), c = pick(rng);
    if (ops.mul(ops.mul(a, b), c) != ops.mul(a, ops.mul(b, c)))
      throw std::logic_error("group oracle: associativity fails");
  }
}

// [uv,w] = [u,w]^v [v,w] must hold in any group; a cheap smoke test that
// multiplication and inversion are mutually consistent.
void check_commutator_identity(const GroupOps &ops) {
  std::uint64_t n = ops.size();
  auto rng = seeded_rng(0xce1 + n);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  auto comm = [&](Index a, Index b) {
    return ops.mul(ops.inv(a), ops.mul(ops.inv(b), ops.mul(a, b)));
  };
  for (int t = 0; t < 100; ++t) {
    Index u = pick(rng), v = pick(rng), w = pick(rng);
    Index lhs = comm(ops.mul(u, v), w);
    Index cw = comm(u, w);
    Index rhs = ops.mul(ops.mul(ops.inv(v), ops.mul(cw, v)), comm(v, w));
    if (lhs != rhs)
      throw std::logic_error("group oracle: commutator identity fails");
  }
}

} // namespace

FiniteGroup FiniteGroup::create(std::shared_ptr<const GroupOps> ops) {
  if (!ops)
    throw std::invalid_argument("null group oracle");
  std::uint64_t n = ops->size();
  if (n == 0 || n > (std::uint64_t(1) << 31))
    throw std::invalid_argument("group size out of supported range");
  std::uint32_t p = ops->prime();
  if (!is_odd_prime(p) || p >= (1u << 16))
    throw std::invalid_argument("group prime must be an odd prime below 2^16");
  if (prime_power_base(n) != p && n != 1)
    throw std::invalid_argument("group order " + std::to_string(n) +
                                " is not a power of " + std::to_string(p));

  check_identity_and_inverses(*ops);
  check_associativity(*ops);
  check_commutator_identity(*ops);

  auto im = std::make_shared<Impl>();
  im->ops = ops;
  im->n = n;
  im->e = ops->identity();
  im->p = p;
  im->label = ops->label();
  im->gens = ops->generators();
  for (Index g : im->gens)
    if (g >= n)
      throw std::logic_error("group oracle: generator index out of range");
  if (n <= kCayleyCacheMax) {
    im->cayley.resize(static_cast<std::size_t>(n) * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        im->cayley[static_cast<std::size_t>(a) * n + b] = ops->mul(a, b);
  }
  if (n <= kInvTableMax) {
    im->invtab.resize(n);
    for (Index a = 0; a < n; ++a)
      im->invtab[a] = ops->inv(a);
  }
  FiniteGroup g;
  g.im_ = std::move(im);
  return g;
}

Index FiniteGroup::pow(Index g, std::int64_t e) const {
  std::uint64_t n = size();
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  (void)n;
  Index acc = identity();
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1)
      acc = mul(acc, g);
    g = mul(g, g);
    k >>= 1;
  }
  return acc;
}

bool subgroup_less(const Subgroup &a, const Subgroup &b) {
  if (a.order != b.order)
    return a.order < b.order;
  return a.members.lex_less(b.members);
}

std::uint32_t element_order(const FiniteGroup &G, Index g) {
  Index e = G.identity();
  Index acc = g;
  std::uint32_t k = 1;
  while (acc != e) {
    acc = G.mul(acc, g);
    ++k;
    if (k > G.size())
      throw std::logic_error("element order exceeds group size");
  }
  return k;
}

Subgroup subgroup_from_members(const FiniteGroup &G, const Bitset &members,
                               std::vector<Index> gens) {
  Subgroup s;
  s.parent = G;
  s.members = members;
  s.order = members.count();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  s.generators = std::move(gens);
  if (s.order == 0 || G.size() % s.order != 0)
    throw std::logic_error("subgroup order does not divide group order");
  return s;
}

Subgroup subgroup_closure(const FiniteGroup &G, std::vector<Index> gens) {
  Bitset members(G.size());
  std::vector<Index> queue;
  Index e = G.identity();
  members.set(e);
  queue.push_back(e);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index m = queue[head];
    for (Index g : gens) {
      Index x = G.mul(m, g);
      if (!members.test(x)) {
        members.set(x);
        queue.push_back(x);
      }
    }
  }
  return subgroup_from_members(G, members, std::move(gens));
}

Subgroup trivial_subgroup(const FiniteGroup &G) {
  Bitset members(G.size());
  members.set(G.identity());
  return subgroup_from_members(G, members, {});
}

Subgroup full_subgroup(const FiniteGroup &G) {
  Bitset members(G.size());
  for (std::uint64_t i = 0; i < G.size(); ++i)
    members.set(i);
  return subgroup_from_members(G, members, G.generators());
}

namespace {

// Small generating set for a known member bitset, greedy in index order.
std::vector<Index> greedy_generators(const FiniteGroup &G,
                                     const Bitset &members) {
  std::vector<Index> gens;
  Subgroup acc = trivial_subgroup(G);
  members.for_each([&](Index g) {
    if (!acc.members.test(g)) {
      gens.push_back(g);
      acc = subgroup_closure(G, gens);
    }
  });
  return gens;
}

Bitset commuting_with(const FiniteGroup &G, const std::vector<Index> &gens) {
  Bitset members(G.size());
  for (std::uint64_t g = 0; g < G.size(); ++g) {
    bool ok = true;
    for (Index h : gens)
      if (G.mul(static_cast<Index>(g), h) != G.mul(h, static_cast<Index>(g))) {
        ok = false;
        break;
      }
    if (ok)
      members.set(g);
  }
  return members;
}

} // namespace

Subgroup center(const FiniteGroup &G) {
  // An element is central iff it commutes with a generating set.
  Bitset members = commuting_with(G, G.generators());
  return subgroup_from_members(G, members, greedy_generators(G, members));
}

Subgroup centralizer(const FiniteGroup &G, const Subgroup &S) {
  if (!G.same_group(S.parent))
    throw std::invalid_argument("centralizer: subgroup belongs to another group");
  const std::vector<Index> &gens =
      S.generators.empty() ? S.members.to_indices() : S.generators;
  Bitset members = commuting_with(G, gens);
  return subgroup_from_members(G, members, greedy_generators(G, members));
}

Subgroup omega1(const FiniteGroup &G, const Subgroup &S) {
  if (!G.same_group(S.parent))
    throw std::invalid_argument("omega1: subgroup belongs to another group");
  std::uint32_t p = G.prime();
  std::vector<Index> gens;
  S.members.for_each([&](Index g) {
    if (g != G.identity() && G.pow(g, p) == G.identity())
      gens.push_back(g);
  });
  if (gens.empty())
    return trivial_subgroup(G);
  return subgroup_closure(G, std::move(gens));
}

Subgroup commutator_subgroup(const FiniteGroup &G, const Subgroup &A,
                             const Subgroup &B) {
  std::vector<Index> agens =
      A.generators.empty() ? A.members.to_indices() : A.generators;
  std::vector<Index> bgens =
      B.generators.empty() ? B.members.to_indices() : B.generators;
  std::vector<Index> seed;
  for (Index a : agens)
    for (Index b : bgens) {
      Index c = G.comm(a, b);
      if (c != G.identity())
        seed.push_back(c);
    }
  std::vector<Index> conj_by = agens;
  conj_by.insert(conj_by.end(), bgens.begin(), bgens.end());
  Subgroup K = seed.empty() ? trivial_subgroup(G) : subgroup_closure(G, seed);
  // saturate under conjugation by <A,B> generators
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Index> extra;
    K.members.for_each([&](Index k) {
      for (Index h : conj_by) {
        Index kh = G.conj(k, h);
        if (!K.members.test(kh))
          extra.push_back(kh);
      }
    });
    if (!extra.empty()) {
      std::vector<Index> gens = K.generators;
      gens.insert(gens.end(), extra.begin(), extra.end());
      K = subgroup_closure(G, gens);
      grew = true;
    }
  }
  return K;
}

unsigned nilpotence_class(const FiniteGroup &G) {
  Subgroup full = full_subgroup(G);
  Subgroup gamma = full;
  unsigned cls = 0;
  while (gamma.order > 1) {
    Subgroup next = commutator_subgroup(G, full, gamma);
    if (next.order >= gamma.order)
      throw std::logic_error("lower central series does not descend");
    gamma = next;
    ++cls;
  }
  return cls;
}

bool exponent_is_p(const FiniteGroup &G, const Subgroup &S) {
  std::uint32_t p = G.prime();
  bool ok = true;
  S.members.for_each([&](Index g) {
    if (ok && G.pow(g, p) != G.identity())
      ok = false;
  });
  return ok && S.order > 1;
}

const char *group_class_name(GroupClass c) {
  switch (c) {
  case GroupClass::elementary_abelian:
    return "elementary_abelian";
  case GroupClass::extraspecial:
    return "extraspecial";
  case GroupClass::abelian_other:
    return "abelian_other";
  case GroupClass::other:
    return "other";
  }
  return "other";
}

namespace {

Subgroup subgroup_center(const FiniteGroup &G, const Subgroup &S) {
  const std::vector<Index> &gens =
      S.generators.empty() ? S.members.to_indices() : S.generators;
  Bitset members(G.size());
  S.members.for_each([&](Index g) {
    for (Index h : gens)
      if (G.mul(g, h) != G.mul(h, g))
        return;
    members.set(g);
  });
  return subgroup_from_members(G, members, {});
}

bool subgroup_abelian(const FiniteGroup &G, const Subgroup &S) {
  const std::vector<Index> &gens =
      S.generators.empty() ? S.members.to_indices() : S.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i]))
        return false;
  return true;
}

} // namespace

GroupClass classify(const FiniteGroup &G, const Subgroup &S) {
  std::uint32_t p = G.prime();
  bool abelian = subgroup_abelian(G, S);
  if (abelian) {
    if (S.order > 1 && exponent_is_p(G, S))
      return GroupClass::elementary_abelian;
    return GroupClass::abelian_other;
  }
  Subgroup zs = subgroup_center(G, S);
  if (zs.order != p)
    return GroupClass::other;
  // extraspecial iff S/Z(S) is elementary abelian: commutators of
  // generators and all p-th powers must land in Z(S)
  const std::vector<Index> &gens =
      S.generators.empty() ? S.members.to_indices() : S.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!zs.members.test(G.comm(gens[i], gens[j])))
        return GroupClass::other;
  bool powers_ok = true;
  S.members.for_each([&](Index g) {
    if (powers_ok && !zs.members.test(G.pow(g, p)))
      powers_ok = false;
  });
  return powers_ok ? GroupClass::extraspecial : GroupClass::other;
}

namespace {

class CayleyOps final : public GroupOps {
public:
  CayleyOps(std::uint64_t n, std::uint32_t p, std::vector<Index> table,
            std::string label)
      : n_(n), p_(p), table_(std::move(table)), label_(std::move(label)) {
    inv_.assign(n_, 0);
    for (Index a = 0; a < n_; ++a) {
      bool found = false;
      for (Index b = 0; b < n_; ++b)
        if (table_[static_cast<std::size_t>(a) * n_ + b] == 0) {
          inv_[a] = b;
          found = true;
          break;
        }
      if (!found)
        throw std::invalid_argument("cayley table: row " + std::to_string(a) +
                                    " has no inverse");
    }
    // generators: greedy sweep in index order
    std::vector<bool> seen(n_, false);
    seen[0] = true;
    std::size_t covered = 1;
    for (Index g = 1; g < n_ && covered < n_; ++g) {
      if (seen[g])
        continue;
      gens_.push_back(g);
      // closure of current generators
      std::fill(seen.begin(), seen.end(), false);
      seen[0] = true;
      std::vector<Index> queue{0};
      covered = 1;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (Index gg : gens_) {
          Index x = table_[static_cast<std::size_t>(queue[h]) * n_ + gg];
          if (!seen[x]) {
            seen[x] = true;
            ++covered;
            queue.push_back(x);
          }
        }
    }
  }

  std::uint64_t size() const override { return n_; }
  Index identity() const override { return 0; }
  Index mul(Index a, Index b) const override {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Index inv(Index a) const override { return inv_[a]; }
  std::vector<int> decode(Index a) const override {
    return {static_cast<int>(a)};
  }
  std::string label() const override { return label_; }
  std::vector<Index> generators() const override { return gens_; }
  std::uint32_t prime() const override { return p_; }

private:
  std::uint64_t n_;
  std::uint32_t p_;
  std::vector<Index> table_;
  std::string label_;
  std::vector<Index> inv_;
  std::vector<Index> gens_;
};

} // namespace

FiniteGroup from_cayley_table(std::uint64_t order, std::uint32_t p,
                              const std::vector<Index> &table,
                              const std::string &label) {
  if (order == 0)
    throw std::invalid_argument("cayley table: order must be positive");
  if (!is_odd_prime(p))
    throw std::invalid_argument("cayley table: p must be an odd prime");
  if (prime_power_base(order) != p && order != 1)
    throw std::invalid_argument("cayley table: order " + std::to_string(order) +
                                " is not a power of " + std::to_string(p));
  if (table.size() != order * order)
    throw std::invalid_argument("cayley table: expected " +
                                std::to_string(order * order) + " entries");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= order)
      throw std::invalid_argument("cayley table: entry " + std::to_string(i) +
                                  " out of range");
  // identity pinned at index 0
  for (Index j = 0; j < order; ++j) {
    if (table[j] != j)
      throw std::invalid_argument("cayley table: row 0 must fix column " +
                                  std::to_string(j));
    if (table[static_cast<std::size_t>(j) * order] != j)
      throw std::invalid_argument("cayley table: column 0 must fix row " +
                                  std::to_string(j));
  }
  // latin square: rows and columns are permutations
  std::vector<bool> seen(order);
  for (Index r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index c = 0; c < order; ++c) {
      Index v = table[static_cast<std::size_t>(r) * order + c];
      if (seen[v])
        throw std::invalid_argument("cayley table: row " + std::to_string(r) +
                                    " repeats entry " + std::to_string(v));
      seen[v] = true;
    }
  }
  for (Index c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index r = 0; r < order; ++r) {
      Index v = table[static_cast<std::size_t>(r) * order + c];
      if (seen[v])
        throw std::invalid_argument("cayley table: column " +
                                    std::to_string(c) + " repeats entry " +
                                    std::to_string(v));
      seen[v] = true;
    }
  }
  auto ops = std::make_shared<CayleyOps>(order, p, table, label);
  return FiniteGroup::create(ops);
}

} // namespace qk::groups
