#include "qk/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace qk::constructions {
namespace {

using groups::FiniteGroup;
using groups::GroupOps;

constexpr unsigned kMaxDigits = 40;

void require_odd_prime_arg(std::uint32_t p, const char *who) {
  if (p >= (1u << 16) || !is_odd_prime(p))
    throw std::invalid_argument(std::string(who) +
                                ": p must be an odd prime below 2^16");
}

// p^e, refusing orders beyond the 2^31 element-index space.
std::uint64_t checked_order(std::uint32_t p, unsigned e, const char *who) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (n > (std::uint64_t{1} << 31) / p)
      throw FeasibilityError(std::string(who) +
                             ": group order exceeds the 2^31 index space");
    n *= p;
  }
  return n;
}

// ---- digit codecs: base p, first digit most significant ----

void decode_digits(std::uint64_t idx, std::uint32_t p, unsigned nd, int *out) {
  for (unsigned i = nd; i-- > 0;) {
    out[i] = static_cast<int>(idx % p);
    idx /= p;
  }
}

std::uint64_t encode_digits(const int *d, std::uint32_t p, unsigned nd) {
  std::uint64_t idx = 0;
  for (unsigned i = 0; i < nd; ++i)
    idx = idx * p + static_cast<std::uint32_t>(d[i]);
  return idx;
}

// ---- extraspecial digit arithmetic, shared by several oracles ----
// digits: [a_1..a_m, b_1..b_m, c], multiplication
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')

Index esp_mul(std::uint32_t p, unsigned m, Index x, Index y) {
  const unsigned nd = 2 * m + 1;
  int dx[kMaxDigits], dy[kMaxDigits], dr[kMaxDigits];
  decode_digits(x, p, nd, dx);
  decode_digits(y, p, nd, dy);
  std::uint64_t dot = 0;
  for (unsigned i = 0; i < m; ++i)
    dot += static_cast<std::uint64_t>(dx[i]) * dy[m + i];
  for (unsigned i = 0; i < 2 * m; ++i)
    dr[i] = static_cast<int>((static_cast<std::uint32_t>(dx[i]) + dy[i]) % p);
  dr[2 * m] = static_cast<int>(
      (static_cast<std::uint64_t>(dx[2 * m]) + dy[2 * m] + dot) % p);
  return static_cast<Index>(encode_digits(dr, p, nd));
}

Index esp_inv(std::uint32_t p, unsigned m, Index x) {
  const unsigned nd = 2 * m + 1;
  int dx[kMaxDigits], dr[kMaxDigits];
  decode_digits(x, p, nd, dx);
  std::uint64_t dot = 0;
  for (unsigned i = 0; i < m; ++i)
    dot += static_cast<std::uint64_t>(dx[i]) * dx[m + i];
  for (unsigned i = 0; i < 2 * m; ++i)
    dr[i] = static_cast<int>((p - static_cast<std::uint32_t>(dx[i])) % p);
  dr[2 * m] = static_cast<int>(
      ((p - static_cast<std::uint64_t>(dx[2 * m]) % p) + dot) % p);
  return static_cast<Index>(encode_digits(dr, p, nd));
}

// ---- concrete oracles ----

class CyclicOps final : public GroupOps {
public:
  CyclicOps(std::uint32_t p, unsigned k)
      : p_(p), n_(checked_order(p, k, "cyclic")),
        label_("cyclic(" + std::to_string(p) + "," + std::to_string(k) + ")") {}

  std::uint64_t size() const override { return n_; }
  Index identity() const override { return 0; }
  Index mul(Index a, Index b) const override {
    return static_cast<Index>((static_cast<std::uint64_t>(a) + b) % n_);
  }
  Index inv(Index a) const override {
    return static_cast<Index>((n_ - a) % n_);
  }
  std::vector<int> decode(Index a) const override {
    return {static_cast<int>(a)};
  }
  std::string label() const override { return label_; }
  std::vector<Index> generators() const override { return {1}; }
  std::uint32_t prime() const override { return p_; }

private:
  std::uint32_t p_;
  std::uint64_t n_;
  std::string label_;
};

class ElementaryAbelianOps final : public GroupOps {
public:
  ElementaryAbelianOps(std::uint32_t p, unsigned k)
      : p_(p), k_(k), n_(checked_order(p, k, "elementary_abelian")),
        label_("elementary_abelian(" + std::to_string(p) + "," +
               std::to_string(k) + ")") {
    if (k == 0 || k >= kMaxDigits)
      throw std::invalid_argument("elementary_abelian: need 1 <= k < 40");
  }

  std::uint64_t size() const override { return n_; }
  Index identity() const override { return 0; }
  Index mul(Index a, Index b) const override {
    int da[kMaxDigits], db[kMaxDigits], dr[kMaxDigits];
    decode_digits(a, p_, k_, da);
    decode_digits(b, p_, k_, db);
    for (unsigned i = 0; i < k_; ++i)
      dr[i] = static_cast<int>((static_cast<std::uint32_t>(da[i]) + db[i]) % p_);
    return static_cast<Index>(encode_digits(dr, p_, k_));
  }
  Index inv(Index a) const override {
    int da[kMaxDigits], dr[kMaxDigits];
    decode_digits(a, p_, k_, da);
    for (unsigned i = 0; i < k_; ++i)
      dr[i] = static_cast<int>((p_ - static_cast<std::uint32_t>(da[i])) % p_);
    return static_cast<Index>(encode_digits(dr, p_, k_));
  }
  std::vector<int> decode(Index a) const override {
    std::vector<int> d(k_);
    decode_digits(a, p_, k_, d.data());
    return d;
  }
  std::string label() const override { return label_; }
  std::vector<Index> generators() const override {
    std::vector<Index> g(k_);
    std::uint64_t v = 1;
    for (unsigned i = k_; i-- > 0;) {
      g[i] = static_cast<Index>(v);
      v *= p_;
    }
    return g;
  }
  std::uint32_t prime() const override { return p_; }

private:
  std::uint32_t p_;
  unsigned k_;
  std::uint64_t n_;
  std::string label_;
};

class ExtraspecialOps final : public GroupOps {
public:
  ExtraspecialOps(std::uint32_t p, unsigned m)
      : p_(p), m_(m), n_(checked_order(p, 2 * m + 1, "extraspecial")),
        label_("extraspecial(" + std::to_string(p) + "," + std::to_string(m) +
               ")") {
    if (m == 0 || 2 * m + 1 >= kMaxDigits)
      throw std::invalid_argument("extraspecial: need 1 <= m < 19");
  }

  std::uint64_t size() const override { return n_; }
  Index identity() const override { return 0; }
  Index mul(Index a, Index b) const override { return esp_mul(p_, m_, a, b); }
  Index inv(Index a) const override { return esp_inv(p_, m_, a); }
  std::vector<int> decode(Index a) const override {
    std::vector<int> d(2 * m_ + 1);
    decode_digits(a, p_, 2 * m_ + 1, d.data());
    return d;
  }
  std::string label() const override { return label_; }
  std::vector<Index> generators() const override {
    // x_1..x_m, y_1..y_m; z = [x_1, y_1] is index 1
    std::vector<Index> g;
    const unsigned nd = 2 * m_ + 1;
    for (unsigned i = 0; i < 2 * m_; ++i) {
      int d[kMaxDigits] = {};
      d[i] = 1;
      g.push_back(static_cast<Index>(encode_digits(d, p_, nd)));
    }
    return g;
  }
  std::uint32_t prime() const override { return p_; }

private:
  std::uint32_t p_;
  unsigned m_;
  std::uint64_t n_;
  std::string label_;
};

// ---- central product ----

class CentralProductOps final : public GroupOps {
public:
  CentralProductOps(const FiniteGroup &A, const FiniteGroup &B) : a_(A), b_(B) {
    if (A.prime() != B.prime())
      throw std::invalid_argument("central_product: factors over different p");
    p_ = A.prime();
    if (A.size() % p_ != 0 || B.size() % p_ != 0 || A.size() == 1 ||
        B.size() == 1)
      throw std::invalid_argument("central_product: factors must be nontrivial");
    if (A.size() > (std::uint64_t{1} << 31) / (B.size() / p_))
      throw FeasibilityError(
          "central_product: product order exceeds the 2^31 index space");

    groups::Subgroup sa = groups::omega1(a_, groups::center(a_));
    groups::Subgroup sb = groups::omega1(b_, groups::center(b_));
    if (sa.order != p_ || sb.order != p_)
      throw std::invalid_argument(
          "central_product: Omega_1 of both centers must have order p");

    Index s_star = least_nonidentity(a_, sa);
    Index t_star = least_nonidentity(b_, sb);
    s_pow_.resize(p_);
    t_pow_.resize(p_);
    s_pow_[0] = a_.identity();
    t_pow_[0] = b_.identity();
    for (std::uint32_t j = 1; j < p_; ++j) {
      s_pow_[j] = a_.mul(s_pow_[j - 1], s_star);
      t_pow_[j] = b_.mul(t_pow_[j - 1], t_star);
    }

    // canonicalization tables: for each b, the least element of bT, the rank
    // of that coset representative, and the left fix-up (phi^-1 inverse).
    const std::uint64_t bn = b_.size();
    r_count_ = bn / p_;
    norm_right_.resize(bn);
    norm_left_mult_.resize(bn);
    std::vector<Index> coset_min(bn);
    r2_elem_.reserve(r_count_);
    std::vector<Index> rank_of(bn, 0);
    for (std::uint64_t g = 0; g < bn; ++g) {
      Index best = static_cast<Index>(g);
      std::uint32_t best_j = 0;
      for (std::uint32_t j = 1; j < p_; ++j) {
        Index cand = b_.mul(static_cast<Index>(g), t_pow_[j]);
        if (cand < best) {
          best = cand;
          best_j = j;
        }
      }
      coset_min[g] = best;
      norm_left_mult_[g] = s_pow_[(p_ - best_j) % p_];
      if (best == g) {
        rank_of[g] = static_cast<Index>(r2_elem_.size());
        r2_elem_.push_back(static_cast<Index>(g));
      }
      // coset_min[g] <= g, so its rank is already assigned
      norm_right_[g] = rank_of[coset_min[g]];
    }
    n_ = a_.size() * r_count_;
    label_ = "central_product(" + a_.label() + "," + b_.label() + ")";
  }

  Index canonical(Index a, Index braw) const {
    Index left = a_.mul(a, norm_left_mult_[braw]);
    return static_cast<Index>(static_cast<std::uint64_t>(left) * r_count_ +
                              norm_right_[braw]);
  }
  Index embed_left_elem(Index a) const {
    return static_cast<Index>(static_cast<std::uint64_t>(a) * r_count_);
  }
  Index embed_right_elem(Index b) const { return canonical(a_.identity(), b); }

  std::uint64_t size() const override { return n_; }
  Index identity() const override { return 0; }
  Index mul(Index u, Index v) const override {
    Index ua = static_cast<Index>(u / r_count_);
    Index ub = r2_elem_[u % r_count_];
    Index va = static_cast<Index>(v / r_count_);
    Index vb = r2_elem_[v % r_count_];
    return canonical(a_.mul(ua, va), b_.mul(ub, vb));
  }
  Index inv(Index u) const override {
    Index ua = static_cast<Index>(u / r_count_);
    Index ub = r2_elem_[u % r_count_];
    return canonical(a_.inv(ua), b_.inv(ub));
  }
  std::vector<int> decode(Index u) const override {
    std::vector<int> d = a_.decode(static_cast<Index>(u / r_count_));
    std::vector<int> e = b_.decode(r2_elem_[u % r_count_]);
    d.insert(d.end(), e.begin(), e.end());
    return d;
  }
  std::string label() const override { return label_; }
  std::vector<Index> generators() const override {
    std::vector<Index> g;
    for (Index x : a_.generators())
      g.push_back(embed_left_elem(x));
    for (Index x : b_.generators())
      g.push_back(embed_right_elem(x));
    return g;
  }
  std::uint32_t prime() const override { return p_; }

  const FiniteGroup &left() const { return a_; }
  const FiniteGroup &right() const { return b_; }

private:
  static Index least_nonidentity(const FiniteGroup &G,
                                 const groups::Subgroup &S) {
    for (Index g : S.members.to_indices())
      if (g != G.identity())
        return g;
    throw std::logic_error("central_product: trivial identified subgroup");
  }

  FiniteGroup a_, b_;
  std::uint32_t p_ = 0;
  std::uint64_t n_ = 0;
  std::uint64_t r_count_ = 0;
  std::vector<Index> s_pow_, t_pow_;
  std::vector<Index> norm_right_;     // rank of min(bT), indexed by b
  std::vector<Index> norm_left_mult_; // right-multiplier fixing the left slot
  std::vector<Index> r2_elem_;        // rank -> least coset representative
  std::string label_;
};

// ---- semidirect example ----

class SemidirectOps final : public GroupOps {
public:
  SemidirectOps(std::uint32_t p, unsigned m, FiniteGroup X,
                const LiftedAutomorphism &alpha)
      : p_(p), m_(m), x_(std::move(X)), xn_(x_.size()) {
    checked_order(p, 2 * m + 2, "semidirect_example");
    n_ = xn_ * p_;
    const std::uint64_t vn = xn_ / p_;
    // alpha^j action on the F_p^(2m) part, tabulated per j
    perm_.assign(p_, std::vector<Index>(vn));
    shift_.assign(p_, std::vector<int>(vn, 0));
    for (std::uint64_t v = 0; v < vn; ++v)
      perm_[0][v] = static_cast<Index>(v);
    for (std::uint32_t j = 1; j < p_; ++j)
      for (std::uint64_t v = 0; v < vn; ++v) {
        Index w = perm_[j - 1][v];
        perm_[j][v] = alpha.vperm[w];
        shift_[j][v] = (shift_[j - 1][v] + alpha.vshift[w]) % static_cast<int>(p_);
      }
    label_ = "semidirect_example(" + std::to_string(p) + "," +
             std::to_string(m) + ")";
  }

  Index act(std::uint32_t j, Index x) const { // alpha^j(x)
    Index v = x / p_;
    std::uint32_t c = x % p_;
    return perm_[j][v] * p_ +
           (c + static_cast<std::uint32_t>(shift_[j][v])) % p_;
  }

  std::uint64_t size() const override { return n_; }
  Index identity() const override { return 0; }
  Index mul(Index u, Index v) const override {
    // (g^j x)(g^j' x') = g^(j+j') alpha^j'(x) x'
    std::uint32_t j1 = static_cast<std::uint32_t>(u / xn_);
    Index x1 = static_cast<Index>(u % xn_);
    std::uint32_t j2 = static_cast<std::uint32_t>(v / xn_);
    Index x2 = static_cast<Index>(v % xn_);
    Index xr = esp_mul(p_, m_, act(j2, x1), x2);
    return static_cast<Index>(static_cast<std::uint64_t>((j1 + j2) % p_) * xn_ +
                              xr);
  }
  Index inv(Index u) const override {
    std::uint32_t j = static_cast<std::uint32_t>(u / xn_);
    Index x = static_cast<Index>(u % xn_);
    Index xr = act((p_ - j) % p_, esp_inv(p_, m_, x));
    return static_cast<Index>(static_cast<std::uint64_t>((p_ - j) % p_) * xn_ +
                              xr);
  }
  std::vector<int> decode(Index u) const override {
    std::vector<int> d{static_cast<int>(u / xn_)};
    std::vector<int> e = x_.decode(static_cast<Index>(u % xn_));
    d.insert(d.end(), e.begin(), e.end());
    return d;
  }
  std::string label() const override { return label_; }
  std::vector<Index> generators() const override {
    std::vector<Index> g{static_cast<Index>(xn_)}; // g = (1, e)
    for (Index x : x_.generators())
      g.push_back(x);
    return g;
  }
  std::uint32_t prime() const override { return p_; }

private:
  std::uint32_t p_;
  unsigned m_;
  FiniteGroup x_;
  std::uint64_t xn_, n_ = 0;
  std::vector<std::vector<Index>> perm_;
  std::vector<std::vector<int>> shift_;
  std::string label_;
};

} // namespace

FiniteGroup cyclic_group(std::uint32_t p, unsigned k) {
  require_odd_prime_arg(p, "cyclic");
  if (k == 0)
    throw std::invalid_argument("cyclic: need k >= 1");
  return FiniteGroup::create(std::make_shared<CyclicOps>(p, k));
}

FiniteGroup elementary_abelian_group(std::uint32_t p, unsigned k) {
  require_odd_prime_arg(p, "elementary_abelian");
  return FiniteGroup::create(std::make_shared<ElementaryAbelianOps>(p, k));
}

FiniteGroup extraspecial_exponent_p(std::uint32_t p, unsigned m) {
  require_odd_prime_arg(p, "extraspecial");
  return FiniteGroup::create(std::make_shared<ExtraspecialOps>(p, m));
}

Index extraspecial_index(std::uint32_t p, unsigned m, const std::vector<int> &a,
                         const std::vector<int> &b, int c) {
  if (a.size() != m || b.size() != m)
    throw std::invalid_argument("extraspecial_index: a and b must have length m");
  int d[kMaxDigits];
  auto red = [&](int v) {
    int r = v % static_cast<int>(p);
    return r < 0 ? r + static_cast<int>(p) : r;
  };
  for (unsigned i = 0; i < m; ++i) {
    d[i] = red(a[i]);
    d[m + i] = red(b[i]);
  }
  d[2 * m] = red(c);
  return static_cast<Index>(encode_digits(d, p, 2 * m + 1));
}

CentralProduct central_product(const FiniteGroup &A, const FiniteGroup &B) {
  auto ops = std::make_shared<CentralProductOps>(A, B);
  CentralProduct out;
  out.group = FiniteGroup::create(ops);
  out.embed_left.resize(A.size());
  for (std::uint64_t g = 0; g < A.size(); ++g)
    out.embed_left[g] = ops->embed_left_elem(static_cast<Index>(g));
  out.embed_right.resize(B.size());
  for (std::uint64_t g = 0; g < B.size(); ++g)
    out.embed_right[g] = ops->embed_right_elem(static_cast<Index>(g));
  return out;
}

LiftedAutomorphism lift_symplectic(std::uint32_t p, unsigned m,
                                   const fpalg::FpMatrix &M) {
  require_odd_prime_arg(p, "lift_symplectic");
  if (m == 0 || 2 * m + 1 >= kMaxDigits)
    throw std::invalid_argument("lift_symplectic: need 1 <= m < 19");
  if (M.rows() != 2 * m || M.cols() != 2 * m || M.modulus() != p)
    throw std::invalid_argument("lift_symplectic: matrix must be 2m x 2m over F_p");
  fpalg::SymplecticSpace space = fpalg::standard_symplectic_form(p, m);
  if (!fpalg::is_symplectic(M, space))
    throw std::invalid_argument("lift_symplectic: matrix is not symplectic");
  if (!M.pow(p).is_identity())
    throw std::invalid_argument("lift_symplectic: matrix must satisfy M^p = I");

  checked_order(p, 2 * m + 1, "lift_symplectic");
  const unsigned vd = 2 * m;
  std::uint64_t vn = 1;
  for (unsigned i = 0; i < vd; ++i)
    vn *= p;

  // B((a,b),(a',b')) = a.b'; q(v) = (1/2)(B(vM,vM) - B(v,v)) is the unique
  // quadratic correction making (v,c) |-> (vM, c + q(v)) a homomorphism.
  const std::uint32_t inv2 = (p + 1) / 2;
  auto bform = [&](const int *d) {
    std::uint64_t s = 0;
    for (unsigned i = 0; i < m; ++i)
      s += static_cast<std::uint64_t>(d[i]) * d[m + i];
    return static_cast<std::uint32_t>(s % p);
  };

  std::vector<Index> perm1(vn);
  std::vector<int> q(vn);
  std::vector<std::array<int, kMaxDigits>> wdig(vn);
  for (std::uint64_t v = 0; v < vn; ++v) {
    int d[kMaxDigits];
    decode_digits(v, p, vd, d);
    std::vector<std::uint32_t> row(vd), img;
    for (unsigned i = 0; i < vd; ++i)
      row[i] = static_cast<std::uint32_t>(d[i]);
    img = M.apply_row(row);
    int w[kMaxDigits];
    for (unsigned i = 0; i < vd; ++i) {
      w[i] = static_cast<int>(img[i]);
      wdig[v][i] = w[i];
    }
    perm1[v] = static_cast<Index>(encode_digits(w, p, vd));
    q[v] = static_cast<int>(
        (static_cast<std::uint64_t>(inv2) * ((bform(w) + p) - bform(d))) % p);
  }

  // Search the lexicographically least u with (v,c) |-> (vM, c+q(v)+<u,vM>)
  // of order dividing p; u = 0 is tried first.
  std::vector<int> shift1(vn);
  std::vector<int> udig(vd, 0);
  bool found = false;
  std::uint64_t chosen_u = 0;
  for (std::uint64_t uidx = 0; uidx < vn && !found; ++uidx) {
    int u[kMaxDigits];
    decode_digits(uidx, p, vd, u);
    for (std::uint64_t v = 0; v < vn; ++v) {
      std::uint64_t lin = 0;
      for (unsigned i = 0; i < vd; ++i)
        lin += static_cast<std::uint64_t>(u[i]) * wdig[v][i];
      shift1[v] = static_cast<int>((q[v] + lin) % p);
    }
    // compose to the p-th power; the permutation part returns to identity
    // because M^p = I, so only the accumulated shift needs checking
    std::vector<int> acc(vn, 0);
    std::vector<Index> pos(vn);
    for (std::uint64_t v = 0; v < vn; ++v)
      pos[v] = static_cast<Index>(v);
    for (std::uint32_t step = 0; step < p; ++step)
      for (std::uint64_t v = 0; v < vn; ++v) {
        acc[v] = (acc[v] + shift1[pos[v]]) % static_cast<int>(p);
        pos[v] = perm1[pos[v]];
      }
    bool ok = true;
    for (std::uint64_t v = 0; v < vn && ok; ++v)
      ok = pos[v] == v && acc[v] == 0;
    if (ok) {
      found = true;
      chosen_u = uidx;
      for (unsigned i = 0; i < vd; ++i)
        udig[i] = u[i];
    }
  }
  if (!found)
    throw std::logic_error("lift_symplectic: no correction gives order p");

  LiftedAutomorphism out;
  out.p = p;
  out.m = m;
  out.matrix = M;
  out.correction = udig;
  out.correction_is_zero = chosen_u == 0;
  out.vperm = std::move(perm1);
  out.vshift = std::move(shift1);
  bool ident = M.is_identity();
  for (std::uint64_t v = 0; v < vn && ident; ++v)
    ident = out.vshift[v] == 0;
  out.order = ident ? 1 : p;

  // machine check of the homomorphism property, exhaustive for small groups
  const std::uint64_t xn = vn * p;
  auto check_pair = [&](Index x, Index y) {
    Index lhs = out.apply(esp_mul(p, m, x, y));
    Index rhs = esp_mul(p, m, out.apply(x), out.apply(y));
    if (lhs != rhs)
      throw std::logic_error("lift_symplectic: lifted map is not a homomorphism");
  };
  if (xn <= 4096) {
    for (std::uint64_t x = 0; x < xn; ++x)
      for (std::uint64_t y = 0; y < xn; ++y)
        check_pair(static_cast<Index>(x), static_cast<Index>(y));
  } else {
    std::mt19937_64 rng = seeded_rng(0x11f7);
    std::uniform_int_distribution<std::uint64_t> dist(0, xn - 1);
    for (int i = 0; i < 4000; ++i)
      check_pair(static_cast<Index>(dist(rng)), static_cast<Index>(dist(rng)));
  }
  return out;
}

SemidirectExample semidirect_example(std::uint32_t p, unsigned m) {
  require_odd_prime_arg(p, "semidirect_example");
  if (m == 0)
    throw std::invalid_argument("semidirect_example: need m >= 1");
  checked_order(p, 2 * m + 2, "semidirect_example");

  SemidirectExample out;
  out.p = p;
  out.m = m;
  FiniteGroup X = extraspecial_exponent_p(p, m);
  out.alpha = lift_symplectic(p, m, fpalg::phi_matrix(p, m));
  auto ops = std::make_shared<SemidirectOps>(p, m, X, out.alpha);
  out.group = FiniteGroup::create(ops);

  const std::uint64_t xn = X.size();
  out.g = static_cast<Index>(xn);
  const std::vector<Index> &xg = X.generators();
  out.x_gens.assign(xg.begin(), xg.begin() + m);
  out.y_gens.assign(xg.begin() + m, xg.begin() + 2 * m);

  // conjugation by g must realize alpha on X
  for (Index x : xg)
    if (out.group.conj(x, out.g) != out.alpha.apply(x))
      throw std::logic_error("semidirect_example: conjugation by g is not alpha");
  if (groups::element_order(out.group, out.g) != p)
    throw std::logic_error("semidirect_example: g must have order p");

  // [g, y_1] = z^twist lands in the central digit, index < p
  Index c = out.group.comm(out.g, out.y_gens[0]);
  if (c >= p)
    throw std::logic_error("semidirect_example: [g, y_1] is not central");
  out.twist = static_cast<int>(c);

  // S = <g x_1^(1-twist), y_1> has [.,.] = z, an extraspecial p^3 witness
  Index s1 = out.group.mul(out.g, out.group.pow(out.x_gens[0], 1 - out.twist));
  out.s_gens = {s1, out.y_gens[0]};
  if (out.group.comm(s1, out.y_gens[0]) != 1)
    throw std::logic_error("semidirect_example: witness commutator is not z");
  return out;
}

FamilyGroup family_group(std::uint32_t p, unsigned t, unsigned k) {
  require_odd_prime_arg(p, "family_group");
  if (p <= 2 * k + 3)
    throw std::invalid_argument("family_group: requires p > 2k+3");
  FamilyGroup out;
  out.p = p;
  out.t = t;
  out.k = k;
  out.semi = semidirect_example(p, k + 1);
  if (t == 0) {
    out.group = out.semi.group;
    return out;
  }
  FiniteGroup e = extraspecial_exponent_p(p, t);
  CentralProduct cp = central_product(out.semi.group, e);
  out.group = cp.group;
  out.extraspecial_factor = e;
  out.embed_semi = std::move(cp.embed_left);
  out.embed_extraspecial = std::move(cp.embed_right);
  return out;
}

} // namespace qk::constructions
