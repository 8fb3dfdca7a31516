#include "qk/fpalg.hpp"

#include <sstream>

namespace qk::fpalg {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p >= (1u << 16) || !is_odd_prime(p))
    throw std::invalid_argument("modulus must be an odd prime below 2^16, got " +
                                std::to_string(p));
}

std::uint32_t norm(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0)
    r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0)
    throw std::domain_error("inverse of zero in F_p");
  // p is prime: a^(p-2)
  std::uint64_t base = a, acc = 1, e = p - 2;
  while (e) {
    if (e & 1)
      acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

} // namespace

FpScalar::FpScalar(std::int64_t v, std::uint32_t p) {
  require_odd_prime(p);
  modulus = p;
  value = norm(v, p);
}

FpScalar FpScalar::operator+(FpScalar o) const {
  return FpScalar(std::int64_t(value) + o.value, modulus);
}
FpScalar FpScalar::operator-(FpScalar o) const {
  return FpScalar(std::int64_t(value) - o.value, modulus);
}
FpScalar FpScalar::operator*(FpScalar o) const {
  return FpScalar(std::int64_t(value) * o.value, modulus);
}
FpScalar FpScalar::operator-() const {
  return FpScalar(-std::int64_t(value), modulus);
}
FpScalar FpScalar::inverse() const {
  return FpScalar(inv_mod(value, modulus), modulus);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  require_odd_prime(p);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  a_[r * cols_ + c] = norm(v, p_);
}

FpMatrix FpMatrix::mul(const FpMatrix &o) const {
  if (cols_ != o.rows_ || p_ != o.p_)
    throw std::invalid_argument("matrix product shape/modulus mismatch");
  FpMatrix out(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t aik = at(i, k);
      if (!aik)
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.a_[i * o.cols_ + j] = static_cast<std::uint32_t>(
            (out.a_[i * o.cols_ + j] + aik * o.at(k, j)) % p_);
    }
  return out;
}

FpMatrix FpMatrix::add(const FpMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix sum shape/modulus mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = (a_[i] + o.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::sub(const FpMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix difference shape/modulus mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.a_[j * rows_ + i] = at(i, j);
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_)
    throw std::invalid_argument("matrix power needs a square matrix");
  FpMatrix acc = identity(rows_, p_);
  FpMatrix base = *this;
  while (e) {
    if (e & 1)
      acc = acc.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return acc;
}

std::vector<std::uint32_t>
FpMatrix::apply_row(const std::vector<std::uint32_t> &v) const {
  if (v.size() != rows_)
    throw std::invalid_argument("row vector length mismatch");
  std::vector<std::uint32_t> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t vi = v[i];
    if (!vi)
      continue;
    for (std::size_t j = 0; j < cols_; ++j)
      out[j] = static_cast<std::uint32_t>((out[j] + vi * at(i, j)) % p_);
  }
  return out;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

bool FpMatrix::is_zero() const {
  for (std::uint32_t v : a_)
    if (v)
      return false;
  return true;
}

bool FpMatrix::operator==(const FpMatrix &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

std::string FpMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

SymplecticSpace standard_symplectic_form(std::uint32_t p, std::size_t m) {
  require_odd_prime(p);
  if (m == 0)
    throw std::invalid_argument("symplectic space needs m >= 1");
  SymplecticSpace s;
  s.p = p;
  s.m = m;
  s.gram = FpMatrix(2 * m, 2 * m, p);
  for (std::size_t i = 0; i < m; ++i) {
    s.gram.set(i, m + i, 1);
    s.gram.set(m + i, i, -1);
  }
  s.basis_labels.reserve(2 * m);
  for (std::size_t i = 1; i <= m; ++i)
    s.basis_labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i)
    s.basis_labels.push_back("y" + std::to_string(i));
  return s;
}

FpMatrix phi_matrix(std::uint32_t p, std::size_t m) {
  require_odd_prime(p);
  if (m == 0)
    throw std::invalid_argument("phi_matrix needs m >= 1");
  FpMatrix M(2 * m, 2 * m, p);
  // x_i |-> (-1)^(m+1-i) y_m + sum_{j=i..m} (-1)^(j-i) x_j
  for (std::size_t i = 1; i <= m; ++i) {
    M.set(i - 1, 2 * m - 1, ((m + 1 - i) % 2 == 0) ? 1 : -1);
    for (std::size_t j = i; j <= m; ++j)
      M.set(i - 1, j - 1, ((j - i) % 2 == 0) ? 1 : -1);
  }
  // y_1 |-> y_1 ; y_i |-> y_i + y_{i-1} for i >= 2
  M.set(m, m, 1);
  for (std::size_t i = 2; i <= m; ++i) {
    M.set(m + i - 1, m + i - 1, 1);
    M.set(m + i - 1, m + i - 2, 1);
  }
  return M;
}

bool is_symplectic(const FpMatrix &M, const SymplecticSpace &space) {
  if (M.rows() != 2 * space.m || M.cols() != 2 * space.m ||
      M.modulus() != space.p)
    throw std::invalid_argument("matrix does not live on the given space");
  // <vM, wM> = <v, w> for all v,w  <=>  M G M^T = G
  return M.mul(space.gram).mul(M.transpose()) == space.gram;
}

std::optional<std::uint64_t> matrix_order(const FpMatrix &M,
                                          std::uint64_t cap) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("matrix_order needs a square matrix");
  if (cap == 0)
    throw std::invalid_argument("matrix_order needs cap >= 1");
  if (row_reduce(M).rank != M.rows())
    throw std::invalid_argument("matrix_order needs an invertible matrix");
  FpMatrix acc = M;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (acc.is_identity())
      return k;
    acc = acc.mul(M);
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> fixed_space(const FpMatrix &M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("fixed_space needs a square matrix");
  std::size_t n = M.rows();
  std::uint32_t p = M.modulus();
  // v(M - I) = 0  <=>  (M - I)^T v^T = 0; reduce the transpose and read the
  // kernel off the free columns.
  FpMatrix A = M.sub(FpMatrix::identity(n, p)).transpose();
  RowReduceResult rr = row_reduce(A);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols)
    is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<std::uint32_t> v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
      std::uint32_t coeff = rr.reduced.at(r, f);
      v[rr.pivot_cols[r]] = (p - coeff) % p;
    }
    basis.push_back(v);
  }
  return basis;
}

RowReduceResult row_reduce(const FpMatrix &M) {
  RowReduceResult res;
  res.reduced = M;
  std::size_t n = M.rows(), cols = M.cols();
  std::uint32_t p = M.modulus();
  FpMatrix &A = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && A.at(piv, col) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint32_t tmp = A.at(row, j);
        A.set(row, j, A.at(piv, j));
        A.set(piv, j, tmp);
      }
    std::uint32_t inv = inv_mod(A.at(row, col), p);
    for (std::size_t j = 0; j < cols; ++j)
      A.set(row, j, std::int64_t(A.at(row, j)) * inv % p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row)
        continue;
      std::uint64_t f = A.at(r, col);
      if (!f)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        A.set(r, j, std::int64_t(A.at(r, j)) - std::int64_t(f * A.at(row, j) % p));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

} // namespace qk::fpalg
