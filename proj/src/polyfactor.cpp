#include "sl2p/polyfactor.hpp"

#include <algorithm>

namespace sl2p {
namespace polyf {

Poly trim(Poly f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

size_t degree(const Poly& f) { return f.size() - 1; }

bool is_zero(const Poly& f) { return f.size() == 1 && f[0] == 0; }

Poly make_monic(const Field& F, Poly f) {
  f = trim(std::move(f));
  Field::elt l = f.back();
  if (l == 0 || l == 1) return f;
  Field::elt li = F.inv(l);
  for (auto& c : f) c = F.mul(c, li);
  return f;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return trim(std::move(c));
}

std::pair<Poly, Poly> divmod(const Field& F, Poly a, const Poly& b0) {
  Poly b = trim(b0);
  require(!is_zero(b), errc::invalid_input, "division by zero polynomial");
  a = trim(std::move(a));
  if (a.size() < b.size()) return {Poly{0}, a};
  Field::elt li = F.inv(b.back());
  Poly q(a.size() - b.size() + 1, 0);
  for (size_t sh = a.size() - b.size() + 1; sh-- > 0;) {
    Field::elt c = F.mul(a[sh + b.size() - 1], li);
    if (c == 0) continue;
    q[sh] = c;
    for (size_t i = 0; i < b.size(); ++i) a[sh + i] = F.sub(a[sh + i], F.mul(c, b[i]));
  }
  return {trim(std::move(q)), trim(std::move(a))};
}

Poly mod(const Field& F, Poly a, const Poly& b) { return divmod(F, std::move(a), b).second; }

Poly gcd(const Field& F, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!is_zero(b)) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

Poly powmod(const Field& F, Poly base, uint64_t e, const Poly& m) {
  Poly r{1};
  base = mod(F, std::move(base), m);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

Poly derivative(const Field& F, const Poly& f) {
  if (f.size() == 1) return {0};
  Poly d(f.size() - 1, 0);
  for (size_t i = 1; i < f.size(); ++i) {
    uint32_t c = uint32_t(i % F.characteristic());
    d[i - 1] = F.mul(f[i], F.from_int(c));
  }
  return trim(std::move(d));
}

namespace {

// f must be squarefree with all irreducible factors of degree d.
void equal_degree_split(const Field& F, const Poly& f, size_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  size_t n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  const uint64_t q = F.size();
  std::uniform_int_distribution<uint32_t> coeff(0, F.size() - 1);
  for (;;) {
    Poly a(n, 0);
    for (auto& c : a) c = coeff(rng);
    a = trim(std::move(a));
    Poly g = gcd(F, f, a);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree_split(F, g, d, rng, out);
      equal_degree_split(F, divmod(F, f, g).first, d, rng, out);
      return;
    }
    Poly b;
    if (F.characteristic() != 2) {
      // a^((q^d-1)/2) = N^((q-1)/2) with N = a^(1+q+...+q^(d-1)); avoids
      // overflowing the exponent for large d
      Poly t = a, N = a;
      for (size_t i = 1; i < d; ++i) {
        t = powmod(F, t, q, f);
        N = mod(F, mul(F, N, t), f);
      }
      b = powmod(F, N, (q - 1) / 2, f);
      b[0] = F.sub(b[0], 1);
    } else {
      // trace map sum a^(2^i), i < d*deg(F/F_2)
      size_t steps = d * F.degree();
      Poly t = a, acc = a;
      for (size_t i = 1; i < steps; ++i) {
        t = mod(F, mul(F, t, t), f);
        Poly s(std::max(acc.size(), t.size()), 0);
        for (size_t j = 0; j < s.size(); ++j) {
          Field::elt x = j < acc.size() ? acc[j] : 0;
          Field::elt y = j < t.size() ? t[j] : 0;
          s[j] = F.add(x, y);
        }
        acc = trim(std::move(s));
      }
      b = acc;
    }
    Poly g2 = gcd(F, f, b);
    if (degree(g2) > 0 && degree(g2) < n) {
      equal_degree_split(F, g2, d, rng, out);
      equal_degree_split(F, divmod(F, f, g2).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, uint32_t>> factor(const Field& F, Poly f, std::mt19937_64& rng) {
  std::vector<std::pair<Poly, uint32_t>> out;
  f = make_monic(F, trim(std::move(f)));
  require(!is_zero(f), errc::invalid_input, "factor of zero polynomial");
  uint32_t mult_scale = 1;  // grows when f = g(x^p) and we pass to the p-th root

  auto extract = [&](const Poly& irr) {
    uint32_t m = 0;
    for (;;) {
      auto [quot, r] = divmod(F, f, irr);
      if (!is_zero(r)) break;
      f = quot;
      ++m;
    }
    require(m > 0, errc::internal_error, "claimed factor does not divide");
    out.push_back({irr, m * mult_scale});
  };

  while (degree(f) >= 1) {
    Poly df = derivative(F, f);
    if (is_zero(df)) {
      // f = g(x^p): coefficientwise p-th root (inverse Frobenius is x^(p^(k-1)))
      uint32_t p = F.characteristic();
      Poly g(degree(f) / p + 1, 0);
      uint64_t inv_frob = 1;
      for (uint32_t i = 0; i + 1 < F.degree(); ++i) inv_frob *= p;
      for (size_t i = 0; i < g.size(); ++i) {
        Field::elt c = f[i * p];
        g[i] = c == 0 ? 0 : F.pow(c, int64_t(inv_frob));
      }
      f = trim(std::move(g));
      mult_scale *= p;
      continue;
    }
    // squarefree part carries every factor of f whose multiplicity is not
    // divisible by p; repeated passes (plus the p-th-root branch) get them all
    Poly sf = divmod(F, f, gcd(F, f, df)).first;
    Poly x{0, 1};
    Poly h = x;
    Poly rem = sf;
    size_t d = 0;
    while (degree(rem) >= 1) {
      ++d;
      if (2 * d > degree(rem)) {
        extract(rem);
        break;
      }
      h = powmod(F, h, F.size(), rem);
      Poly hmx = h;
      hmx.resize(std::max<size_t>(hmx.size(), 2), 0);
      hmx[1] = F.sub(hmx[1], 1);
      hmx = trim(std::move(hmx));
      Poly g = gcd(F, rem, hmx);
      if (degree(g) >= 1) {
        std::vector<Poly> eq;
        equal_degree_split(F, g, d, rng, eq);
        for (auto& irr : eq) extract(irr);
        rem = divmod(F, rem, g).first;
        h = mod(F, h, rem);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyf
}  // namespace sl2p
