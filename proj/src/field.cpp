#include "sl2p/field.hpp"

#include <algorithm>
#include <numeric>

namespace sl2p {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomial helpers over F_p with packed-integer coefficients, used only
// during field construction (modulus search).
using Poly = std::vector<uint32_t>;  // low-to-high, no trailing zeros except [0]

Poly trim(Poly f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  a = trim(std::move(a));
  while (a.size() >= m.size() && !(a.size() == 1 && a[0] == 0)) {
    uint32_t lead = a.back();  // m is monic
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t v = a[i + shift] + uint64_t(p) * p - uint64_t(lead) * m[i] % p;
      a[i + shift] = uint32_t(v % p);
    }
    a = trim(std::move(a));
    if (a.size() < m.size()) break;
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  auto inv_mod = [&](uint32_t x) {
    uint32_t r = 1, e = p - 2;
    uint64_t bb = x;
    while (e) {
      if (e & 1) r = uint32_t(r * bb % p);
      bb = bb * bb % p;
      e >>= 1;
    }
    return r;
  };
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!(b.size() == 1 && b[0] == 0)) {
    // a mod b with b made monic
    uint32_t li = inv_mod(b.back());
    Poly bm = b;
    for (auto& c : bm) c = uint32_t(uint64_t(c) * li % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, uint32_t p) {
  uint32_t k = uint32_t(f.size() - 1);
  // x^(p^k) == x mod f, and gcd(f, x^(p^i) - x) == 1 for 0 < i < k.
  Poly x{0, 1};
  Poly xp = x;
  for (uint32_t i = 1; i < k; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly d = xp;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    d = trim(std::move(d));
    Poly g = poly_gcd(f, d, p);
    if (!(g.size() == 1 && g[0] != 0)) return false;
  }
  xp = poly_powmod(xp, p, f, p);
  xp.resize(2, 0);
  return trim(xp) == x;
}

}  // namespace

Field::Field(uint32_t characteristic, uint32_t degree) : p_(characteristic), k_(degree) {
  require(is_prime(p_), errc::invalid_input, "characteristic must be prime");
  require(k_ >= 1, errc::invalid_input, "degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_; ++i) q *= p_;
  require(q <= (1u << 22), errc::resource_limit, "field too large");
  q_ = uint32_t(q);
  qm1_ = q_ - 1;
  if (k_ == 1) {
    modulus_ = {0, 1};  // x (unused)
  } else {
    // smallest packed monic irreducible of degree k
    uint64_t count = q;  // p^k choices of lower coefficients
    bool found = false;
    for (uint64_t packed = 0; packed < count; ++packed) {
      Poly f(k_ + 1, 0);
      uint64_t v = packed;
      for (uint32_t i = 0; i < k_; ++i) {
        f[i] = uint32_t(v % p_);
        v /= p_;
      }
      f[k_] = 1;
      if (f[0] == 0) continue;  // reducible: x | f
      if (is_irreducible(f, p_)) {
        modulus_ = f;
        found = true;
        break;
      }
    }
    require(found, errc::internal_error, "no irreducible modulus found");
  }
  build_tables();
}

Field::elt Field::add(elt a, elt b) const {
  if (k_ == 1) return (a + b) % p_;
  elt r = 0, m = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

Field::elt Field::sub(elt a, elt b) const { return add(a, neg(b)); }

Field::elt Field::neg(elt a) const {
  if (k_ == 1) return (p_ - a) % p_;
  elt r = 0, m = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * m;
    a /= p_;
    m *= p_;
  }
  return r;
}

Field::elt Field::pow(elt a, int64_t e) const {
  if (a == 0) {
    require(e > 0, errc::invalid_input, "0^e with e <= 0");
    return 0;
  }
  int64_t le = int64_t(log_[a]) * (e % qm1_) % qm1_;
  if (le < 0) le += qm1_;
  return exp_[le];
}

uint32_t Field::order(elt a) const {
  require(a != 0, errc::invalid_input, "order of zero");
  uint32_t d = std::gcd(log_[a], qm1_);
  return qm1_ / d;
}

Field::elt Field::root_of_unity(uint32_t n) const {
  require(n != 0 && qm1_ % n == 0, errc::invalid_field, "field lacks roots of unity of requested order");
  return exp_[qm1_ / n];
}

uint32_t Field::abs_trace(elt a) const {
  elt t = 0, x = a;
  for (uint32_t i = 0; i < k_; ++i) {
    t = add(t, x);
    x = frobenius(x);
  }
  // t lies in the prime subfield: packed value equals its integer lift
  return t;
}

Field::elt Field::eval_poly(const std::vector<elt>& coeffs, elt x) const {
  elt r = 0;
  for (size_t i = coeffs.size(); i-- > 0;) r = add(mul(r, x), coeffs[i]);
  return r;
}

void Field::build_tables() {
  // raw multiply by coefficient arithmetic, used to bootstrap the tables
  auto raw_mul = [&](elt a, elt b) -> elt {
    if (k_ == 1) return uint32_t(uint64_t(a) * b % p_);
    std::vector<uint32_t> ca(k_), cb(k_), prod(2 * k_ - 1, 0);
    elt x = a;
    for (uint32_t i = 0; i < k_; ++i) {
      ca[i] = x % p_;
      x /= p_;
    }
    x = b;
    for (uint32_t i = 0; i < k_; ++i) {
      cb[i] = x % p_;
      x /= p_;
    }
    for (uint32_t i = 0; i < k_; ++i)
      for (uint32_t j = 0; j < k_; ++j) prod[i + j] = uint32_t((prod[i + j] + uint64_t(ca[i]) * cb[j]) % p_);
    // reduce by modulus
    for (size_t d = prod.size(); d-- > k_;) {
      uint32_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (uint32_t i = 0; i < k_; ++i) {
        uint64_t v = prod[d - k_ + i] + uint64_t(p_) * p_ - uint64_t(c) * modulus_[i] % p_;
        prod[d - k_ + i] = uint32_t(v % p_);
      }
    }
    elt r = 0, m = 1;
    for (uint32_t i = 0; i < k_; ++i) {
      r += prod[i] * m;
      m *= p_;
    }
    return r;
  };

  // factor q-1 to test element orders
  uint32_t m = qm1_;
  std::vector<uint32_t> primes;
  for (uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);

  auto raw_pow = [&](elt a, uint32_t e) {
    elt r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  gen_ = 0;
  for (elt a = (k_ == 1 ? 2u : p_); a < q_; ++a) {  // skip 0,1 and (for ext fields) prime-subfield start
    if (a == 0 || a == 1) continue;
    bool prim = true;
    for (uint32_t pr : primes)
      if (raw_pow(a, qm1_ / pr) == 1) {
        prim = false;
        break;
      }
    if (prim) {
      gen_ = a;
      break;
    }
  }
  if (gen_ == 0) {
    // tiny fields (q=2,3): scan everything
    for (elt a = 1; a < q_ && gen_ == 0; ++a) {
      bool prim = a != 1 || qm1_ == 1;
      for (uint32_t pr : primes)
        if (raw_pow(a, qm1_ / pr) == 1) prim = false;
      if (prim || qm1_ == 1) gen_ = a;
    }
  }
  require(gen_ != 0, errc::internal_error, "no primitive element");

  exp_.assign(2 * qm1_, 0);
  log_.assign(q_, 0);
  elt cur = 1;
  for (uint32_t i = 0; i < qm1_; ++i) {
    exp_[i] = cur;
    exp_[i + qm1_] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, gen_);
  }
  require(cur == 1, errc::internal_error, "generator order mismatch");
}

FieldPtr make_field(uint32_t characteristic, uint32_t degree) {
  return std::make_shared<Field>(characteristic, degree);
}

FieldPtr field_with_roots(uint32_t characteristic, const std::set<uint32_t>& required_orders) {
  require(is_prime(characteristic), errc::invalid_input, "characteristic must be prime");
  uint64_t l = 1;
  for (uint32_t n : required_orders) {
    require(n > 0 && n % characteristic != 0, errc::invalid_input, "required order divisible by characteristic");
    l = std::lcm<uint64_t>(l, n);
  }
  uint64_t qk = 1;
  for (uint32_t k = 1; k <= 22; ++k) {
    qk *= characteristic;
    if (qk > (1u << 22)) break;
    if ((qk - 1) % l == 0) return make_field(characteristic, k);
  }
  fail(errc::resource_limit, "no small field with required roots of unity");
}

std::vector<Field::elt> subfield_embedding(const Field& small, const Field& big) {
  require(small.characteristic() == big.characteristic() && big.degree() % small.degree() == 0,
          errc::invalid_input, "not a subfield situation");
  std::vector<Field::elt> map(small.size(), 0);
  if (small.degree() == 1) {
    for (uint32_t c = 0; c < small.size(); ++c) map[c] = big.from_int(c);
    return map;
  }
  // image of x = smallest root of small's modulus in big
  std::vector<Field::elt> mod_in_big;
  for (uint32_t c : small.modulus()) mod_in_big.push_back(big.from_int(c));
  Field::elt root = 0;
  bool found = false;
  for (Field::elt y = 0; y < big.size(); ++y)
    if (big.eval_poly(mod_in_big, y) == 0) {
      root = y;
      found = true;
      break;
    }
  require(found, errc::internal_error, "modulus has no root in extension");
  for (uint32_t a = 0; a < small.size(); ++a) {
    Field::elt img = 0, xp = 1;
    uint32_t v = a;
    for (uint32_t i = 0; i < small.degree(); ++i) {
      img = big.add(img, big.mul(big.from_int(v % small.characteristic()), xp));
      v /= small.characteristic();
      xp = big.mul(xp, root);
    }
    map[a] = img;
  }
  return map;
}

}  // namespace sl2p
