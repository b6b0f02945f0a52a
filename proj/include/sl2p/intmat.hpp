#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "sl2p/error.hpp"

namespace sl2p {

using bigint = boost::multiprecision::cpp_int;

/// Integer matrix with arbitrary-precision entries.
class IntMat {
 public:
  IntMat() = default;
  IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  static IntMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bigint& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const bigint& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<bigint> e_;
};

struct SnfResult {
  std::vector<bigint> invariant_factors;  // d_1 | d_2 | ..., nonzero entries only
  IntMat U, V;                            // unimodular, U*M*V = diag
  IntMat D;                               // the full diagonal matrix (rows x cols of M)
};

/// Smith normal form with transforms.  Deterministic.  Verifies U*M*V == D
/// and the divisibility chain on every call.
SnfResult smith_normal_form(const IntMat& M);

/// Does M x = b have an integer solution?  (b of length M.rows())
bool solvable_over_Z(const IntMat& M, const std::vector<bigint>& b);

/// Basis (as rows) of the saturated kernel lattice {x in Z^cols : M x = 0}.
IntMat kernel_basis_over_Z(const IntMat& M);

}  // namespace sl2p
