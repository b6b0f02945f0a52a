#pragma once

#include <cstdint>
#include <vector>

#include "sl2p/field.hpp"

namespace sl2p {

/// Dense row-major matrix over a finite field.  All entry arithmetic is
/// exact; results are identical regardless of thread count.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, size_t rows, size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static Mat identity(FieldPtr f, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Field::elt& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  Field::elt at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<Field::elt>& entries() const { return e_; }
  std::vector<Field::elt>& entries() { return e_; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  Mat operator*(const Mat& o) const { return mul(*this, o); }
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Field::elt c) const;
  Mat transpose() const;
  Field::elt trace() const;

  /// OpenMP-parallel product (row-partitioned); falls back to the serial
  /// kernel below the parallel threshold.
  static Mat mul(const Mat& a, const Mat& b);
  /// Reference product kept for testing and benchmarking.
  static Mat mul_serial(const Mat& a, const Mat& b);

  /// In-place reduced row echelon form.  Pivot choice is the first nonzero
  /// entry in column order.  Returns pivot column indices.
  std::vector<size_t> rref_in_place();
  std::vector<size_t> rref_in_place_serial();

  size_t rank() const;
  /// Basis of the right kernel {x : Mx = 0}, as rows of the result.
  Mat kernel_basis() const;
  Mat inverse() const;

  /// Rows of `rows_mat` stacked under *this (same col count).
  static Mat vstack(const Mat& top, const Mat& bottom);

 private:
  FieldPtr field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Field::elt> e_;
  std::vector<size_t> rref_impl(bool parallel);
};

/// X with C X = Y; C must have full column rank and the system must be
/// consistent (invalid-input otherwise).
Mat solve_many(const Mat& C, const Mat& Y);

/// Action matrices restricted to the row space of `basis_rows`, which must
/// be invariant under every generator.
std::vector<Mat> restrict_action(const std::vector<Mat>& gens, const Mat& basis_rows);

/// Action on the quotient by the (invariant) row space of `basis_rows`,
/// in the coordinates of the non-pivot columns of its RREF.
std::vector<Mat> quotient_action(const std::vector<Mat>& gens, const Mat& basis_rows);

}  // namespace sl2p
