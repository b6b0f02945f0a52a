#include "sl2p/intmat.hpp"

namespace sl2p {

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  require(cols_ == o.rows_, errc::invalid_input, "shape mismatch");
  IntMat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const bigint& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

namespace {

void row_op(IntMat& M, IntMat& U, size_t i, size_t j, const bigint& f) {
  // row_i -= f * row_j
  for (size_t c = 0; c < M.cols(); ++c) M.at(i, c) -= f * M.at(j, c);
  for (size_t c = 0; c < U.cols(); ++c) U.at(i, c) -= f * U.at(j, c);
}

void col_op(IntMat& M, IntMat& V, size_t i, size_t j, const bigint& f) {
  // col_i -= f * col_j
  for (size_t r = 0; r < M.rows(); ++r) M.at(r, i) -= f * M.at(r, j);
  for (size_t r = 0; r < V.rows(); ++r) V.at(r, i) -= f * V.at(r, j);
}

void swap_rows(IntMat& M, IntMat& U, size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < M.cols(); ++c) std::swap(M.at(i, c), M.at(j, c));
  for (size_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
}

void swap_cols(IntMat& M, IntMat& V, size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < M.rows(); ++r) std::swap(M.at(r, i), M.at(r, j));
  for (size_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
}

void negate_row(IntMat& M, IntMat& U, size_t i) {
  for (size_t c = 0; c < M.cols(); ++c) M.at(i, c) = -M.at(i, c);
  for (size_t c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& M0) {
  IntMat M = M0;
  const size_t n = M.rows(), m = M.cols();
  IntMat U = IntMat::identity(n), V = IntMat::identity(m);

  size_t t = 0;
  const size_t lim = std::min(n, m);
  while (t < lim) {
    // find smallest nonzero |entry| in M[t.., t..]
    size_t pr = n, pc = m;
    bigint best = 0;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j) {
        if (M.at(i, j) == 0) continue;
        bigint a = abs(M.at(i, j));
        if (pr == n || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr == n) break;  // all zero
    swap_rows(M, U, t, pr);
    swap_cols(M, V, t, pc);
    if (M.at(t, t) < 0) negate_row(M, U, t);

    bool clean = true;
    for (size_t i = t + 1; i < n; ++i) {
      bigint q = M.at(i, t) / M.at(t, t);
      if (q != 0) row_op(M, U, i, t, q);
      if (M.at(i, t) != 0) clean = false;
    }
    for (size_t j = t + 1; j < m; ++j) {
      bigint q = M.at(t, j) / M.at(t, t);
      if (q != 0) col_op(M, V, j, t, q);
      if (M.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repeat with new minimum

    // pivot divides everything in its row/col; enforce divisibility into the rest
    bool divides_all = true;
    for (size_t i = t + 1; i < n && divides_all; ++i)
      for (size_t j = t + 1; j < m; ++j)
        if (M.at(i, j) % M.at(t, t) != 0) {
          // add row i to row t, creating an entry not divisible by the pivot
          row_op(M, U, t, i, bigint(-1));
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    ++t;
  }

  SnfResult res;
  res.U = U;
  res.V = V;
  res.D = IntMat(n, m);
  for (size_t i = 0; i < lim; ++i) res.D.at(i, i) = M.at(i, i);
  for (size_t i = 0; i < lim && M.at(i, i) != 0; ++i) res.invariant_factors.push_back(M.at(i, i));

  // verify on every call: U*M0*V == D and the divisibility chain
  IntMat check = (U * M0) * V;
  require(check == res.D, errc::internal_error, "SNF transform verification failed");
  for (size_t i = 0; i + 1 < res.invariant_factors.size(); ++i)
    require(res.invariant_factors[i + 1] % res.invariant_factors[i] == 0, errc::internal_error,
            "SNF divisibility chain failed");
  return res;
}

IntMat kernel_basis_over_Z(const IntMat& M) {
  // M x = 0 <=> D y = 0 with x = V y: kernel spanned by the columns of V
  // beyond the rank; V unimodular makes the span saturated
  SnfResult s = smith_normal_form(M);
  size_t rank = s.invariant_factors.size();
  size_t dim = M.cols() - rank;
  IntMat out(dim, M.cols());
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < M.cols(); ++j) out.at(i, j) = s.V.at(j, rank + i);
  return out;
}

bool solvable_over_Z(const IntMat& M, const std::vector<bigint>& b) {
  require(b.size() == M.rows(), errc::invalid_input, "rhs size mismatch");
  SnfResult s = smith_normal_form(M);
  // M x = b  <=>  D y = U b with x = V y
  std::vector<bigint> ub(M.rows(), 0);
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.rows(); ++j) ub[i] += s.U.at(i, j) * b[j];
  size_t r = s.invariant_factors.size();
  for (size_t i = 0; i < M.rows(); ++i) {
    if (i < r) {
      if (ub[i] % s.invariant_factors[i] != 0) return false;
    } else {
      if (ub[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace sl2p
