#include "sl2p/whittaker.hpp"

#include <algorithm>

namespace sl2p {
namespace wh {

uint64_t nilpotent_orbit_count(uint32_t d) {
  require(d <= 20, errc::invalid_input, "d out of range");
  return 1 + (uint64_t(1) << d);
}

std::vector<std::vector<uint32_t>> linear_subspaces(uint32_t d, uint32_t k) {
  require(k <= d, errc::invalid_input, "k > d");
  std::vector<std::vector<uint32_t>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  // enumerate RREF matrices: choose pivot columns, then free entries
  std::vector<uint32_t> pivots(k);
  std::vector<bool> choose(d, false);
  std::fill(choose.begin(), choose.begin() + k, true);
  std::sort(choose.begin(), choose.end());
  // iterate over all pivot-column subsets via combinations
  std::vector<uint32_t> idx(k);
  for (uint32_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    // free positions: row i may have arbitrary entries in non-pivot columns
    // strictly right of pivot idx[i]
    std::vector<std::pair<uint32_t, uint32_t>> free_pos;  // (row, col)
    for (uint32_t i = 0; i < k; ++i)
      for (uint32_t c = idx[i] + 1; c < d; ++c)
        if (std::find(idx.begin(), idx.end(), c) == idx.end()) free_pos.push_back({i, c});
    for (uint64_t bits = 0; bits < (uint64_t(1) << free_pos.size()); ++bits) {
      std::vector<uint32_t> rows(k, 0);
      for (uint32_t i = 0; i < k; ++i) rows[i] |= uint32_t(1) << idx[i];
      for (size_t t = 0; t < free_pos.size(); ++t)
        if (bits & (uint64_t(1) << t)) rows[free_pos[t].first] |= uint32_t(1) << free_pos[t].second;
      out.push_back(rows);
    }
    // next combination
    int i = int(k) - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (uint32_t t = uint32_t(i) + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::vector<uint32_t> span_points(const std::vector<uint32_t>& basis) {
  std::vector<uint32_t> pts{0};
  for (uint32_t b : basis) {
    size_t s = pts.size();
    for (size_t i = 0; i < s; ++i) pts.push_back(pts[i] ^ b);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<AffinePartition> whittaker_partitions(uint32_t d, uint32_t codim) {
  require(codim <= 2, errc::invalid_input, "packet sizes cap the codimension at 2");
  require(codim <= d, errc::invalid_input, "codim > d");
  std::vector<AffinePartition> out;
  for (const auto& basis : linear_subspaces(d, d - codim)) {
    AffinePartition part;
    part.direction = basis;
    auto pts = span_points(basis);
    std::vector<bool> used(uint64_t(1) << d, false);
    for (uint32_t base = 0; base < (uint32_t(1) << d); ++base) {
      if (used[base]) continue;
      std::vector<uint32_t> coset;
      for (uint32_t v : pts) {
        used[base ^ v] = true;
        coset.push_back(base ^ v);
      }
      std::sort(coset.begin(), coset.end());
      part.cosets.push_back(std::move(coset));
    }
    out.push_back(std::move(part));
  }
  return out;
}

IntMat affine_lattice_generators(uint32_t d, uint32_t r) {
  require(d <= 5, errc::resource_limit, "d capped at 5");
  // columns: characteristic vectors of all r-dimensional affine subspaces
  std::vector<std::vector<uint32_t>> cols;
  for (const auto& basis : linear_subspaces(d, r)) {
    auto pts = span_points(basis);
    std::vector<bool> used(uint64_t(1) << d, false);
    for (uint32_t base = 0; base < (uint32_t(1) << d); ++base) {
      if (used[base]) continue;
      std::vector<uint32_t> coset;
      for (uint32_t v : pts) {
        used[base ^ v] = true;
        coset.push_back(base ^ v);
      }
      cols.push_back(std::move(coset));
    }
  }
  IntMat M(uint64_t(1) << d, cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (uint32_t pt : cols[c]) M.at(pt, c) = 1;
  return M;
}

uint64_t lattice_exponent(uint32_t d, uint32_t r) {
  require(r < d && d <= 5, errc::invalid_input, "need 0 <= r < d <= 5");
  IntMat M = affine_lattice_generators(d, r);
  SnfResult s = smith_normal_form(M);
  require(s.invariant_factors.size() == (uint64_t(1) << d), errc::internal_error,
          "affine lattice does not have full rank");
  const bigint& last = s.invariant_factors.back();
  return last.convert_to<uint64_t>();
}

bool doubling_inclusion_check(uint32_t d, uint32_t r) {
  require(0 < r && r < d, errc::invalid_input, "need 0 < r < d");
  IntMat M = affine_lattice_generators(d, r);
  SnfResult s = smith_normal_form(M);  // factor once, test all vectors
  const size_t n = uint64_t(1) << d;
  auto member = [&](const std::vector<bigint>& b) {
    std::vector<bigint> ub(n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) ub[i] += s.U.at(i, j) * b[j];
    for (size_t i = 0; i < n; ++i) {
      if (i < s.invariant_factors.size()) {
        if (ub[i] % s.invariant_factors[i] != 0) return false;
      } else if (ub[i] != 0) {
        return false;
      }
    }
    return true;
  };
  // every doubled (r-1)-subspace characteristic vector must lie in I_r
  for (const auto& basis : linear_subspaces(d, r - 1)) {
    auto pts = span_points(basis);
    std::vector<bool> used(n, false);
    for (uint32_t base = 0; base < (uint32_t(1) << d); ++base) {
      if (used[base]) continue;
      std::vector<bigint> b(n, 0);
      for (uint32_t v : pts) {
        used[base ^ v] = true;
        b[base ^ v] = 2;
      }
      if (!member(b)) return false;
    }
  }
  return true;
}

}  // namespace wh
}  // namespace sl2p
