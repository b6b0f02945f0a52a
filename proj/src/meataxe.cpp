#include "sl2p/meataxe.hpp"

#include <algorithm>
#include <random>

#include "sl2p/polyfactor.hpp"
#include "sl2p/sylvester.hpp"

namespace sl2p {

namespace {

using polyf::Poly;

/// Row-echelon spin-up of a seed vector under an action; returns basis rows.
Mat spin(const FieldPtr& F, const std::vector<Mat>& gens, const std::vector<Field::elt>& seed) {
  const size_t n = seed.size();
  // echelon rows with recorded pivot columns
  std::vector<std::vector<Field::elt>> rows;
  std::vector<size_t> pivots;
  auto reduce_insert = [&](std::vector<Field::elt> v) -> bool {
    for (size_t r = 0; r < rows.size(); ++r) {
      Field::elt c = v[pivots[r]];
      if (c == 0) continue;
      for (size_t j = 0; j < n; ++j) v[j] = F->sub(v[j], F->mul(c, rows[r][j]));
    }
    size_t p = n;
    for (size_t j = 0; j < n; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p == n) return false;
    Field::elt ip = F->inv(v[p]);
    for (size_t j = 0; j < n; ++j) v[j] = F->mul(v[j], ip);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };
  reduce_insert(seed);
  for (size_t cur = 0; cur < rows.size(); ++cur) {
    if (rows.size() == n) break;
    for (const Mat& g : gens) {
      std::vector<Field::elt> w(n, 0);
      for (size_t i = 0; i < n; ++i) {
        // w = g * rows[cur]^T (column-vector convention)
        Field::elt acc = 0;
        for (size_t j = 0; j < n; ++j) acc = F->add(acc, F->mul(g.at(i, j), rows[cur][j]));
        w[i] = acc;
      }
      reduce_insert(std::move(w));
      if (rows.size() == n) break;
    }
  }
  Mat out(F, rows.size(), n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t j = 0; j < n; ++j) out.at(r, j) = rows[r][j];
  return out;
}

/// Minimal polynomial of a square matrix (lcm of local minimal polynomials).
Poly min_poly(const FieldPtr& F, const Mat& c) {
  const size_t n = c.rows();
  Poly m{1};
  for (size_t start = 0; start < n; ++start) {
    // local minimal polynomial on e_start, with dependency tracking
    std::vector<std::vector<Field::elt>> rows;      // echelon rows
    std::vector<std::vector<Field::elt>> combos;    // expression in iterates
    std::vector<size_t> pivots;
    std::vector<Field::elt> v(n, 0);
    v[start] = 1;
    Poly local;
    for (size_t it = 0;; ++it) {
      std::vector<Field::elt> w = v;
      std::vector<Field::elt> combo(it + 1, 0);
      combo[it] = 1;
      for (size_t r = 0; r < rows.size(); ++r) {
        Field::elt cf = w[pivots[r]];
        if (cf == 0) continue;
        for (size_t j = 0; j < n; ++j) w[j] = F->sub(w[j], F->mul(cf, rows[r][j]));
        for (size_t j = 0; j < combos[r].size(); ++j) combo[j] = F->sub(combo[j], F->mul(cf, combos[r][j]));
      }
      size_t p = n;
      for (size_t j = 0; j < n; ++j)
        if (w[j] != 0) {
          p = j;
          break;
        }
      if (p == n) {
        local = combo;  // dependency: sum combo_i c^i e_start = 0
        break;
      }
      Field::elt ip = F->inv(w[p]);
      for (size_t j = 0; j < n; ++j) w[j] = F->mul(w[j], ip);
      for (auto& x : combo) x = F->mul(x, ip);
      combos.push_back(std::move(combo));
      rows.push_back(std::move(w));
      pivots.push_back(p);
      // v = c * v
      std::vector<Field::elt> nv(n, 0);
      for (size_t i = 0; i < n; ++i) {
        Field::elt acc = 0;
        for (size_t j = 0; j < n; ++j) acc = F->add(acc, F->mul(c.at(i, j), v[j]));
        nv[i] = acc;
      }
      v = std::move(nv);
    }
    // m = lcm(m, local)
    Poly g = polyf::gcd(*F, m, local);
    m = polyf::divmod(*F, polyf::mul(*F, m, local), g).first;
    if (polyf::degree(m) == n) break;
  }
  return polyf::make_monic(*F, m);
}

Mat eval_poly_at(const FieldPtr& F, const Poly& f, const Mat& c) {
  const size_t n = c.rows();
  Mat r(F, n, n);
  for (size_t i = polyf::trim(f).size(); i-- > 0;) {
    r = Mat::mul(r, c);
    for (size_t d = 0; d < n; ++d) r.at(d, d) = F->add(r.at(d, d), f[i]);
  }
  return r;
}

std::vector<Mat> transpose_all(const std::vector<Mat>& gens) {
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

struct SplitResult {
  bool split = false;
  Mat sub_basis;  // rows
};

/// One Norton-style attempt with the algebra element c.  Returns a proper
/// invariant subspace if found; sets *certified if irreducibility is proved.
SplitResult try_split(const FieldPtr& F, const std::vector<Mat>& gens, const Mat& c, bool* certified) {
  *certified = false;
  const size_t n = c.rows();
  Poly mp = min_poly(F, c);
  std::mt19937_64 dummy(0);
  auto factors = polyf::factor(*F, mp, dummy);
  // prefer low-degree factors
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return polyf::degree(a.first) < polyf::degree(b.first); });
  for (const auto& [f, mult] : factors) {
    (void)mult;
    Mat fc = eval_poly_at(F, f, c);
    Mat ker = fc.kernel_basis();
    if (ker.rows() == 0) continue;
    for (size_t r = 0; r < ker.rows(); ++r) {
      std::vector<Field::elt> seed(n);
      for (size_t j = 0; j < n; ++j) seed[j] = ker.at(r, j);
      Mat s = spin(F, gens, seed);
      if (s.rows() < n) return {true, s};
    }
    if (ker.rows() == polyf::degree(f)) {
      // Norton: all of ker f(c) spins full; test the transposed module
      Mat fct = fc.transpose();
      Mat kert = fct.kernel_basis();
      std::vector<Field::elt> seed(n);
      for (size_t j = 0; j < n; ++j) seed[j] = kert.at(0, j);
      Mat st = spin(F, transpose_all(gens), seed);
      if (st.rows() == n) {
        *certified = true;
        return {false, Mat()};
      }
      // annihilator of the transposed submodule is a proper submodule
      Mat ann = st.kernel_basis();
      require(ann.rows() > 0 && ann.rows() < n, errc::internal_error, "bad annihilator");
      return {true, ann};
    }
  }
  return {false, Mat()};
}

void series_rec(const FieldPtr& F, std::vector<Mat> gens, uint64_t& counter, std::mt19937_64& rng,
                std::vector<std::vector<Mat>>& out) {
  const size_t n = gens.empty() ? 0 : gens[0].rows();
  if (n == 0) return;
  if (n == 1) {
    out.push_back(std::move(gens));
    return;
  }
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<uint32_t> coeff(1, F->size() - 1);
  const int kMaxTries = 60;
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    // random small word-sum in the algebra
    Mat c(F, n, n);
    size_t terms = 1 + attempt % 3;
    for (size_t t = 0; t <= terms; ++t) {
      Mat w = Mat::identity(F, n);
      size_t len = 1 + (rng() % 3);
      for (size_t s = 0; s < len; ++s) w = Mat::mul(w, gens[pick(rng)]);
      c = c + w.scaled(coeff(rng));
    }
    ++counter;
    bool certified = false;
    SplitResult sr = try_split(F, gens, c, &certified);
    if (certified) {
      out.push_back(std::move(gens));
      return;
    }
    if (sr.split) {
      auto sub = restrict_action(gens, sr.sub_basis);
      auto quot = quotient_action(gens, sr.sub_basis);
      series_rec(F, std::move(sub), counter, rng, out);
      series_rec(F, std::move(quot), counter, rng, out);
      return;
    }
  }
  fail(errc::needs_larger_field, "meataxe did not split after max retries; extend the scalar field");
}

}  // namespace

std::vector<std::vector<Mat>> composition_series_gens(const std::vector<Mat>& gens, uint64_t seed) {
  require(!gens.empty(), errc::invalid_input, "no generators");
  const FieldPtr& F = gens[0].field();
  std::vector<std::vector<Mat>> out;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  uint64_t counter = 0;
  series_rec(F, gens, counter, rng, out);
  return out;
}

size_t hom_dim(const MatRep& a, const MatRep& b) {
  require(a.group() == b.group(), errc::invalid_input, "hom_dim needs a common group");
  require(*a.field() == *b.field(), errc::invalid_input, "hom_dim needs a common field");
  std::vector<std::pair<Mat, Mat>> pairs;
  auto ga = a.generator_matrices();
  auto gb = b.generator_matrices();
  for (size_t i = 0; i < ga.size(); ++i) pairs.push_back({ga[i], gb[i]});
  return solve_sylvester(pairs).size();
}

DecompositionReport decompose(const MatRep& rep, uint64_t seed) {
  require(rep.dim() <= kDecomposeDimCap, errc::resource_limit, "dimension exceeds decompose cap");
  DecompositionReport out;
  auto series = composition_series_gens(rep.generator_matrices(), seed);
  for (auto& gens : series) out.series.push_back(rep_from_generator_matrices(rep.group(), rep.field(), gens));
  out.length = uint32_t(out.series.size());
  for (const auto& s : out.series) {
    bool found = false;
    for (auto& [cons, mult] : out.constituents)
      if (cons.dim() == s.dim() && hom_dim(cons, s) > 0) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.constituents.push_back({s, 1});
  }
  // semisimplicity: dim Hom(rep, S) = mult(S) * dim End(S) for every S
  out.semisimple = true;
  for (const auto& [cons, mult] : out.constituents) {
    size_t endo = hom_dim(cons, cons);
    if (hom_dim(rep, cons) != mult * endo) {
      out.semisimple = false;
      break;
    }
  }
  size_t total = 0;
  for (const auto& [cons, mult] : out.constituents) total += cons.dim() * mult;
  require(total == rep.dim(), errc::internal_error, "constituent dimensions do not add up");
  return out;
}

uint32_t restriction_length(const IrrepLabel& label, uint32_t char_r) {
  const uint32_t q = label.q;
  const uint32_t m = q - 1, m2 = q * q - 1;
  require(label_valid(label, char_r), errc::invalid_input, "label not valid over this characteristic");
  if (char_r == 2) {
    // all irreducibles restrict irreducibly except the twists of sigma_0
    return label.kind == IrrepLabel::Kind::Cusp0Twist ? 2 : 1;
  }
  switch (label.kind) {
    case IrrepLabel::Kind::Char:
    case IrrepLabel::Kind::StTwist:
    case IrrepLabel::Kind::Cusp0Twist:
      return 1;
    case IrrepLabel::Kind::Princ: {
      uint32_t d = (label.chi2 + m - label.chi1) % m;
      return (2 * d) % m == 0 ? 2 : 1;
    }
    case IrrepLabel::Kind::Cusp: {
      uint64_t e = uint64_t(label.theta) * (q - 1) % m2;
      return (2 * e) % m2 == 0 ? 2 : 1;
    }
  }
  return 1;
}

}  // namespace sl2p
