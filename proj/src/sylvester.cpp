#include "sl2p/sylvester.hpp"

namespace sl2p {

std::vector<Mat> solve_sylvester(const std::vector<std::pair<Mat, Mat>>& pairs) {
  require(!pairs.empty(), errc::invalid_input, "no constraint pairs");
  const FieldPtr& F = pairs[0].first.field();
  const size_t n = pairs[0].first.rows();
  const size_t m = pairs[0].second.rows();
  for (const auto& [a, b] : pairs) {
    require(a.rows() == n && a.cols() == n && b.rows() == m && b.cols() == m, errc::invalid_input,
            "shape mismatch in sylvester system");
    require(*a.field() == *F && *b.field() == *F, errc::invalid_input, "field mismatch in sylvester system");
  }
  // unknowns x_{r,c} = X[r][c], row-major; constraint rows (A X - X B)_{r,c} = 0
  Mat sys(F, pairs.size() * n * m, n * m);
  size_t eq = 0;
  for (const auto& [a, b] : pairs) {
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < m; ++c) {
        for (size_t s = 0; s < n; ++s) sys.at(eq, s * m + c) = F->add(sys.at(eq, s * m + c), a.at(r, s));
        for (size_t t = 0; t < m; ++t) sys.at(eq, r * m + t) = F->sub(sys.at(eq, r * m + t), b.at(t, c));
        ++eq;
      }
  }
  Mat ker = sys.kernel_basis();
  std::vector<Mat> basis;
  for (size_t i = 0; i < ker.rows(); ++i) {
    Mat X(F, n, m);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < m; ++c) X.at(r, c) = ker.at(i, r * m + c);
    basis.push_back(std::move(X));
  }
  return basis;
}

}  // namespace sl2p
