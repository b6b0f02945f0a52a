#include "sl2p/mat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sl2p {

namespace {
constexpr size_t kParallelDim = 48;  // below this, serial wins
}

Mat Mat::identity(FieldPtr f, size_t n) {
  Mat m(std::move(f), n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, errc::invalid_input, "shape mismatch in add");
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_->add(e_[i], o.e_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, errc::invalid_input, "shape mismatch in sub");
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_->sub(e_[i], o.e_[i]);
  return r;
}

Mat Mat::scaled(Field::elt c) const {
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_->mul(e_[i], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Field::elt Mat::trace() const {
  Field::elt t = 0;
  for (size_t i = 0; i < rows_; ++i) t = field_->add(t, at(i, i));
  return t;
}

namespace {

inline void mul_row(const Field& F, const Mat& a, const Mat& b, Mat& r, size_t i) {
  const size_t n = a.cols(), m = b.cols();
  for (size_t k = 0; k < n; ++k) {
    Field::elt aik = a.at(i, k);
    if (aik == 0) continue;
    for (size_t j = 0; j < m; ++j) {
      Field::elt prod = F.mul(aik, b.at(k, j));
      r.at(i, j) = F.add(r.at(i, j), prod);
    }
  }
}

}  // namespace

Mat Mat::mul_serial(const Mat& a, const Mat& b) {
  require(a.cols_ == b.rows_, errc::invalid_input, "shape mismatch in mul");
  Mat r(a.field_, a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) mul_row(*a.field_, a, b, r, i);
  return r;
}

Mat Mat::mul(const Mat& a, const Mat& b) {
  require(a.cols_ == b.rows_, errc::invalid_input, "shape mismatch in mul");
  if (a.rows_ < kParallelDim) return mul_serial(a, b);
  Mat r(a.field_, a.rows_, b.cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (size_t i = 0; i < a.rows_; ++i) mul_row(*a.field_, a, b, r, i);
  return r;
}

std::vector<size_t> Mat::rref_impl(bool parallel) {
  const Field& F = *field_;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = rows_;
    for (size_t i = row; i < rows_; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(e_[piv * cols_ + j], e_[row * cols_ + j]);
    Field::elt ipv = F.inv(at(row, col));
    for (size_t j = col; j < cols_; ++j) at(row, j) = F.mul(at(row, j), ipv);
    auto eliminate = [&](size_t i) {
      if (i == row) return;
      Field::elt f = at(i, col);
      if (f == 0) return;
      for (size_t j = col; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(row, j)));
    };
    if (parallel && rows_ >= kParallelDim) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (size_t i = 0; i < rows_; ++i) eliminate(i);
    } else {
      for (size_t i = 0; i < rows_; ++i) eliminate(i);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<size_t> Mat::rref_in_place() { return rref_impl(true); }
std::vector<size_t> Mat::rref_in_place_serial() { return rref_impl(false); }

size_t Mat::rank() const {
  Mat c = *this;
  return c.rref_in_place().size();
}

Mat Mat::kernel_basis() const {
  Mat r = *this;
  auto pivots = r.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t dim = cols_ - pivots.size();
  Mat out(field_, dim, cols_);
  size_t k = 0;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi) out.at(k, pivots[pi]) = field_->neg(r.at(pi, free));
    ++k;
  }
  return out;
}

Mat Mat::inverse() const {
  require(rows_ == cols_, errc::invalid_input, "inverse of non-square");
  Mat aug(field_, rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto piv = aug.rref_in_place();
  require(piv.size() == rows_ && piv.back() == cols_ - 1, errc::invalid_input, "matrix not invertible");
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
  return r;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  require(top.cols_ == bottom.cols_, errc::invalid_input, "vstack col mismatch");
  Mat r(top.field_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.e_.begin(), top.e_.end(), r.e_.begin());
  std::copy(bottom.e_.begin(), bottom.e_.end(), r.e_.begin() + top.e_.size());
  return r;
}

Mat solve_many(const Mat& C, const Mat& Y) {
  require(C.rows() == Y.rows(), errc::invalid_input, "solve_many shape mismatch");
  const FieldPtr& F = C.field();
  Mat aug(F, C.rows(), C.cols() + Y.cols());
  for (size_t i = 0; i < C.rows(); ++i) {
    for (size_t j = 0; j < C.cols(); ++j) aug.at(i, j) = C.at(i, j);
    for (size_t j = 0; j < Y.cols(); ++j) aug.at(i, C.cols() + j) = Y.at(i, j);
  }
  auto piv = aug.rref_in_place();
  size_t r = 0;
  for (size_t c : piv) {
    require(c < C.cols(), errc::invalid_input, "inconsistent linear system");
    require(c == r, errc::invalid_input, "coefficient matrix not of full column rank");
    ++r;
  }
  require(r == C.cols(), errc::invalid_input, "coefficient matrix not of full column rank");
  Mat X(F, C.cols(), Y.cols());
  for (size_t i = 0; i < C.cols(); ++i)
    for (size_t j = 0; j < Y.cols(); ++j) X.at(i, j) = aug.at(i, C.cols() + j);
  return X;
}

std::vector<Mat> restrict_action(const std::vector<Mat>& gens, const Mat& basis_rows) {
  Mat C = basis_rows.transpose();  // n x k, columns are the basis vectors
  std::vector<Mat> out;
  for (const Mat& g : gens) out.push_back(solve_many(C, Mat::mul(g, C)));
  return out;
}

std::vector<Mat> quotient_action(const std::vector<Mat>& gens, const Mat& basis_rows) {
  const FieldPtr& F = basis_rows.field();
  const size_t n = basis_rows.cols();
  Mat R = basis_rows;
  auto piv = R.rref_in_place();
  require(piv.size() == basis_rows.rows(), errc::invalid_input, "basis rows dependent");
  std::vector<bool> is_pivot(n, false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  // reduce a column vector mod the row space, then read free coordinates
  auto project = [&](std::vector<Field::elt> v) {
    for (size_t i = 0; i < piv.size(); ++i) {
      Field::elt f = v[piv[i]];
      if (f == 0) continue;
      for (size_t c = 0; c < n; ++c) v[c] = F->sub(v[c], F->mul(f, R.at(i, c)));
    }
    std::vector<Field::elt> out(free_cols.size());
    for (size_t t = 0; t < free_cols.size(); ++t) out[t] = v[free_cols[t]];
    return out;
  };
  std::vector<Mat> res;
  for (const Mat& g : gens) {
    Mat m(F, free_cols.size(), free_cols.size());
    for (size_t t = 0; t < free_cols.size(); ++t) {
      std::vector<Field::elt> col(n, 0);
      for (size_t r = 0; r < n; ++r) col[r] = g.at(r, free_cols[t]);
      auto red = project(std::move(col));
      for (size_t s = 0; s < free_cols.size(); ++s) m.at(s, t) = red[s];
    }
    res.push_back(std::move(m));
  }
  return res;
}

}  // namespace sl2p
