#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qk/common.hpp"

namespace qk::fpalg {

// Canonical residue in F_p.  p is an odd prime below 2^16 so products fit
// comfortably in 64 bits.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t modulus = 3;

  FpScalar() = default;
  FpScalar(std::int64_t v, std::uint32_t p);

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator-() const;
  FpScalar inverse() const;
  bool operator==(FpScalar o) const {
    return value == o.value && modulus == o.modulus;
  }
};

// Dense matrix over F_p, row-major.  Vectors act on the left: v |-> v*M.
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t v);

  FpMatrix mul(const FpMatrix &o) const;
  FpMatrix add(const FpMatrix &o) const;
  FpMatrix sub(const FpMatrix &o) const;
  FpMatrix transpose() const;
  FpMatrix pow(std::uint64_t e) const;

  std::vector<std::uint32_t> apply_row(const std::vector<std::uint32_t> &v)
      const; // v*M

  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const FpMatrix &o) const;

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 3;
  std::vector<std::uint32_t> a_;
};

// Symplectic space (F_p^{2m}, Gram matrix) with basis ordered
// x_1..x_m, y_1..y_m; the form pairs <x_i, y_i> = 1.
struct SymplecticSpace {
  std::uint32_t p = 3;
  std::size_t m = 1;
  FpMatrix gram;
  std::vector<std::string> basis_labels;
};

SymplecticSpace standard_symplectic_form(std::uint32_t p, std::size_t m);

// The distinguished symplectic transvection-product used by the semidirect
// construction.  Rows are images of basis vectors.
FpMatrix phi_matrix(std::uint32_t p, std::size_t m);

bool is_symplectic(const FpMatrix &M, const SymplecticSpace &space);

// Multiplicative order of an invertible matrix; nullopt when it exceeds cap.
std::optional<std::uint64_t> matrix_order(const FpMatrix &M,
                                          std::uint64_t cap);

// Row-reduced basis of { v : v*M = v }.
std::vector<std::vector<std::uint32_t>> fixed_space(const FpMatrix &M);

struct RowReduceResult {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RowReduceResult row_reduce(const FpMatrix &M);

} // namespace qk::fpalg
