#include "sl2p/localfield.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "sl2p/field.hpp"
#include "sl2p/ring.hpp"

namespace sl2p {

QZ QZ::make(int64_t n, uint64_t d) {
  require(d != 0, errc::invalid_input, "zero denominator");
  int64_t m = n % int64_t(d);
  if (m < 0) m += int64_t(d);
  uint64_t g = std::gcd(uint64_t(m), d);
  return {int64_t(uint64_t(m) / g), d / g};
}

QZ QZ::operator+(const QZ& o) const {
  uint64_t d = std::lcm(den, o.den);
  return make(num * int64_t(d / den) + o.num * int64_t(d / o.den), d);
}

QZ QZ::operator-(const QZ& o) const {
  uint64_t d = std::lcm(den, o.den);
  return make(num * int64_t(d / den) - o.num * int64_t(d / o.den), d);
}

QZ QZ::scaled(int64_t k) const { return make(num * k, den); }

namespace {

uint64_t upow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

uint32_t smallest_nonresidue(uint32_t p) {
  for (uint32_t u = 2; u < p; ++u) {
    uint64_t r = 1, base = u, e = (p - 1) / 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    if (r == p - 1) return u;
  }
  fail(errc::internal_error, "no quadratic non-residue");
}

}  // namespace

QuadExt::QuadExt(uint32_t p, bool ram, bool nonres, uint32_t level)
    : p_(p), level_(level), ramified_(ram), nonres_(nonres) {
  require(is_prime(p), errc::invalid_input, "p must be prime");
  require(level >= 1 && level <= 8, errc::invalid_input, "level out of range");
  if (ram) {
    require(p != 2, errc::unsupported, "ramified quadratic extensions of Q_2 are not modelled");
    // a + b*varpi mod P^level: a mod p^ceil(level/2), b mod p^floor(level/2)
    ma_ = upow(p, (level + 1) / 2);
    mb_ = std::max<uint64_t>(upow(p, level / 2), 1);
    f_mod_ = ma_;
    ram_u_ = nonres ? smallest_nonresidue(p) : 1;
  } else {
    ma_ = mb_ = upow(p, level);
    f_mod_ = ma_;
    Field fp2(p, 2);  // canonical irreducible quadratic over F_p, lifted
    modc0_ = fp2.modulus()[0];
    modc1_ = fp2.modulus()[1];
  }
  require(ma_ * mb_ <= (1ull << 24), errc::resource_limit, "level model too large");
  build_units();
}

std::shared_ptr<const QuadExt> QuadExt::unramified(uint32_t p, uint32_t level) {
  return std::shared_ptr<const QuadExt>(new QuadExt(p, false, false, level));
}

std::shared_ptr<const QuadExt> QuadExt::ramified(uint32_t p, bool nonresidue_unit, uint32_t level) {
  return std::shared_ptr<const QuadExt>(new QuadExt(p, true, nonresidue_unit, level));
}

QuadExt::Elt QuadExt::add(const Elt& x, const Elt& y) const {
  return {(x.a + y.a) % ma_, (x.b + y.b) % mb_};
}

QuadExt::Elt QuadExt::neg(const Elt& x) const { return {(ma_ - x.a) % ma_, (mb_ - x.b) % mb_}; }

QuadExt::Elt QuadExt::mul(const Elt& x, const Elt& y) const {
  if (!ramified_) {
    // (a + b w)(c + d w), w^2 = -c1 w - c0
    uint64_t ac = x.a * y.a % ma_, bd = x.b * y.b % ma_;
    uint64_t ad_bc = (x.a * y.b + x.b * y.a) % ma_;
    uint64_t a = (ac + ma_ - bd * modc0_ % ma_) % ma_;
    uint64_t b = (ad_bc + ma_ - bd * modc1_ % ma_) % ma_;
    return {a, b};
  }
  // (a + b varpi)(c + d varpi), varpi^2 = p u
  uint64_t a = (x.a * y.a % ma_ + x.b * y.b % ma_ * (p_ * ram_u_ % ma_)) % ma_;
  uint64_t b = (x.a * y.b + x.b * y.a) % mb_;
  return {a, b};
}

QuadExt::Elt QuadExt::pow(const Elt& x, uint64_t e) const {
  Elt r = one(), base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool QuadExt::is_unit(const Elt& x) const {
  if (!ramified_) return x.a % p_ != 0 || (mb_ > 1 && x.b % p_ != 0);
  return x.a % p_ != 0;
}

QuadExt::Elt QuadExt::unit_inverse(const Elt& x) const {
  require(is_unit(x), errc::invalid_input, "not a unit");
  return pow(x, units_.size() - 1);
}

QuadExt::Elt QuadExt::tau(const Elt& x) const {
  if (ramified_) return {x.a, (mb_ - x.b) % mb_};
  // omega -> -c1 - omega (the other root of the quadratic)
  uint64_t a = (x.a + x.b % ma_ * ((ma_ - modc1_ % ma_) % ma_)) % ma_;
  uint64_t b = (ma_ - x.b) % ma_ % mb_;
  return {a, b};
}

uint64_t QuadExt::norm(const Elt& x) const {
  Elt n = mul(x, tau(x));
  return n.a % f_mod_;
}

void QuadExt::build_units() {
  for (uint64_t a = 0; a < ma_; ++a)
    for (uint64_t b = 0; b < mb_; ++b) {
      Elt x{a, b};
      if (is_unit(x)) units_.push_back(x);
    }
  uint64_t n = units_.size();
  std::vector<uint32_t> primes;
  {
    uint64_t m = n;
    for (uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(uint32_t(d));
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(uint32_t(m));
  }
  for (uint32_t s : primes) {
    uint64_t cof = n;
    while (cof % s == 0) cof /= s;
    std::vector<Elt> syl;
    std::unordered_set<uint64_t> seen;
    for (const Elt& u : units_) {
      Elt v = pow(u, cof);
      if (seen.insert(code(v)).second) syl.push_back(v);
    }
    std::sort(syl.begin(), syl.end(), [&](const Elt& x, const Elt& y) { return code(x) < code(y); });
    std::vector<Elt> sub{one()};
    std::unordered_set<uint64_t> subset{code(one())};
    while (sub.size() < syl.size()) {
      // element of maximal order in the quotient by <basis so far>
      uint32_t best_ord = 0;
      Elt best{};
      for (const Elt& h : syl) {
        if (subset.count(code(h))) continue;
        uint32_t d = 1;
        Elt x = h;
        while (!subset.count(code(x))) {
          x = mul(x, h);
          ++d;
        }
        if (d > best_ord) {
          best_ord = d;
          best = h;
        }
      }
      // adjust so that best^d = 1: find c in the subgroup with c^d = (best^d)^-1
      Elt target = unit_inverse(pow(best, best_ord));
      bool fixed = false;
      for (const Elt& c : sub)
        if (code(pow(c, best_ord)) == code(target)) {
          best = mul(best, c);
          fixed = true;
          break;
        }
      require(fixed, errc::internal_error, "unit basis correction failed");
      basis_.gens.push_back(best);
      basis_.orders.push_back(best_ord);
      std::vector<Elt> ns;
      ns.reserve(sub.size() * best_ord);
      Elt bp = one();
      for (uint32_t e = 0; e < best_ord; ++e) {
        for (const Elt& x : sub) ns.push_back(mul(x, bp));
        bp = mul(bp, best);
      }
      sub = std::move(ns);
      subset.clear();
      for (const Elt& x : sub) subset.insert(code(x));
    }
  }
  // dlog table over the full unit group
  std::vector<uint32_t> exps(basis_.gens.size(), 0);
  Elt cur = one();
  size_t total = 1;
  for (uint32_t o : basis_.orders) total *= o;
  require(total == units_.size(), errc::internal_error, "unit basis does not span");
  std::vector<Elt> gen_inv;
  for (size_t i = 0; i < basis_.gens.size(); ++i)
    gen_inv.push_back(pow(basis_.gens[i], basis_.orders[i] - 1));
  for (size_t cnt = 0;; ++cnt) {
    dlog_[code(cur)] = exps;
    if (cnt + 1 == total) break;
    size_t i = 0;
    while (true) {
      exps[i] = (exps[i] + 1) % basis_.orders[i];
      cur = mul(cur, basis_.gens[i]);
      if (exps[i] != 0) break;
      ++i;  // carried: exps[i] wrapped to 0, cur already includes the wrap
    }
  }
  require(dlog_.size() == units_.size(), errc::internal_error, "dlog table incomplete");
}

const std::vector<uint32_t>& QuadExt::unit_dlog(const Elt& u) const {
  auto it = dlog_.find(code(u));
  require(it != dlog_.end(), errc::invalid_input, "not a unit");
  return it->second;
}

std::vector<QuadExt::Elt> QuadExt::one_plus_p() const {
  std::vector<Elt> out;
  for (const Elt& u : units_) {
    if (!ramified_) {
      if (u.a % p_ == 1 && u.b % p_ == 0) out.push_back(u);
    } else {
      if (u.a % p_ == 1) out.push_back(u);  // 1 + P_E: b part has positive valuation anyway
    }
  }
  return out;
}

QuadExt::Elt QuadExt::unit_of_order(uint32_t n) const {
  for (const Elt& u : units_) {
    const auto& e = unit_dlog(u);
    uint64_t o = 1;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) o = std::lcm<uint64_t>(o, basis_.orders[i] / std::gcd<uint64_t>(e[i], basis_.orders[i]));
    if (o == n) return u;
  }
  fail(errc::invalid_input, "no unit of requested order");
}

std::string QuadExt::describe() const {
  if (!ramified_) return "Q_" + std::to_string(p_) + "(unram)";
  return "Q_" + std::to_string(p_) + "(sqrt(" + (nonres_ ? std::to_string(ram_u_) + "p" : "p") + "))";
}

LocalCharacter::LocalCharacter(QuadExtPtr ext, QZ unif_value, std::vector<QZ> gen_values)
    : ext_(std::move(ext)), unif_(unif_value), gen_(std::move(gen_values)) {
  const auto& basis = ext_->unit_basis();
  require(gen_.size() == basis.gens.size(), errc::invalid_input, "one value per unit-basis generator");
  for (size_t i = 0; i < gen_.size(); ++i)
    require(basis.orders[i] % gen_[i].order() == 0, errc::invalid_input,
            "character value order incompatible with the generator order");
}

QZ LocalCharacter::value_on_unit(const QuadExt::Elt& u) const {
  const auto& e = ext_->unit_dlog(u);
  QZ v{};
  for (size_t i = 0; i < e.size(); ++i) v = v + gen_[i].scaled(int64_t(e[i]));
  return v;
}

LocalCharacter LocalCharacter::galois_conjugate() const {
  const auto& basis = ext_->unit_basis();
  std::vector<QZ> vals;
  for (const auto& g : basis.gens) vals.push_back(value_on_unit(ext_->tau(g)));
  QZ uv = unif_;
  if (ext_->ramified()) uv = uv + value_on_unit(ext_->neg(ext_->one()));  // tau(varpi) = varpi * (-1)
  return LocalCharacter(ext_, uv, std::move(vals));
}

LocalCharacter LocalCharacter::ratio(const LocalCharacter& o) const {
  require(ext_ == o.ext_, errc::invalid_input, "characters on different extensions");
  std::vector<QZ> vals;
  for (size_t i = 0; i < gen_.size(); ++i) vals.push_back(gen_[i] - o.gen_[i]);
  return LocalCharacter(ext_, unif_ - o.unif_, std::move(vals));
}

LocalCharacter LocalCharacter::times(const LocalCharacter& o) const {
  require(ext_ == o.ext_, errc::invalid_input, "characters on different extensions");
  std::vector<QZ> vals;
  for (size_t i = 0; i < gen_.size(); ++i) vals.push_back(gen_[i] + o.gen_[i]);
  return LocalCharacter(ext_, unif_ + o.unif_, std::move(vals));
}

uint32_t LocalCharacter::order() const {
  uint64_t o = unif_.order();
  for (const auto& v : gen_) o = std::lcm(o, v.order());
  return uint32_t(o);
}

bool LocalCharacter::is_trivial() const {
  if (!unif_.is_zero()) return false;
  for (const auto& v : gen_)
    if (!v.is_zero()) return false;
  return true;
}

uint32_t LocalCharacter::order_on_one_plus_p() const {
  uint64_t o = 1;
  for (const auto& u : ext_->one_plus_p()) o = std::lcm(o, value_on_unit(u).order());
  return uint32_t(o);
}

bool LocalCharacter::operator==(const LocalCharacter& o) const {
  return ext_ == o.ext_ && unif_ == o.unif_ && gen_ == o.gen_;
}

namespace {

struct FUnitData {
  Ring ring;
  std::vector<uint32_t> gens;
  std::vector<uint32_t> orders;
  std::unordered_map<uint64_t, std::vector<uint32_t>> dlog;
  explicit FUnitData(uint32_t p, uint32_t a) : ring(Ring::int_mod(p, a)) {
    gens = ring.unit_group_generators();
    for (uint32_t g : gens) {
      uint32_t o = 1;
      uint64_t x = g % ring.size();
      while (x != 1) {
        x = x * g % ring.size();
        ++o;
      }
      orders.push_back(o);
    }
    std::vector<uint32_t> exps(gens.size(), 0);
    uint64_t cur = 1;
    size_t total = 1;
    for (uint32_t o : orders) total *= o;
    for (size_t cnt = 0;; ++cnt) {
      dlog[cur] = exps;
      if (cnt + 1 == total) break;
      size_t i = 0;
      while (true) {
        exps[i] = (exps[i] + 1) % orders[i];
        cur = cur * gens[i] % ring.size();
        if (exps[i] != 0) break;
        ++i;
      }
    }
    require(dlog.size() == ring.unit_group_order(), errc::internal_error, "F-unit dlog incomplete");
  }
};

const FUnitData& f_units(uint32_t p, uint32_t a) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FUnitData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, a);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<FUnitData>(p, a)).first;
  return *it->second;
}

QZ eta_on_unit(const FCharacter& eta, uint64_t x) {
  const FUnitData& U = f_units(eta.p, eta.a);
  auto it = U.dlog.find(x % U.ring.size());
  require(it != U.dlog.end(), errc::invalid_input, "element not a unit mod p^a");
  QZ out{};
  for (size_t i = 0; i < U.gens.size(); ++i) out = out + eta.gen_values[i].scaled(it->second[i]);
  return out;
}

}  // namespace

std::vector<FCharacter> quadratic_f_characters(uint32_t p, uint32_t a) {
  const FUnitData& U = f_units(p, a);
  std::vector<FCharacter> out;
  size_t combos = size_t(1) << (U.gens.size() + 1);
  for (size_t mask = 1; mask < combos; ++mask) {
    FCharacter eta;
    eta.p = p;
    eta.a = a;
    eta.p_value = (mask & 1) ? QZ::make(1, 2) : QZ{};
    bool ok = true;
    for (size_t i = 0; i < U.gens.size(); ++i) {
      if (mask & (size_t(2) << i)) {
        if (U.orders[i] % 2 != 0) {
          ok = false;
          break;
        }
        eta.gen_values.push_back(QZ::make(1, 2));
      } else {
        eta.gen_values.push_back(QZ{});
      }
    }
    if (ok) out.push_back(std::move(eta));
  }
  return out;
}

LocalCharacter compose_with_norm(const QuadExtPtr& E, const FCharacter& eta) {
  require(eta.p == E->p(), errc::invalid_input, "eta lives over a different p");
  std::vector<QZ> vals;
  for (const auto& g : E->unit_basis().gens) vals.push_back(eta_on_unit(eta, E->norm(g)));
  QZ uv;
  if (!E->ramified()) {
    uv = eta.p_value.scaled(2);  // N(p) = p^2
  } else {
    // N(varpi) = -p u with u known exactly
    uint64_t fm = upow(E->p(), eta.a);
    uint64_t u = E->nonresidue_unit() ? smallest_nonresidue(E->p()) : 1;
    uv = eta.p_value + eta_on_unit(eta, (fm - u % fm) % fm);
  }
  return LocalCharacter(E, uv, std::move(vals));
}

XSigmaReport x_sigma(const LocalCharacter& xi) {
  LocalCharacter r = xi.galois_conjugate().ratio(xi);  // xi^tau / xi
  require(!r.is_trivial(), errc::not_regular, "xi = xi^tau: sigma(E, xi) is not irreducible");
  XSigmaReport rep;
  const auto& E = xi.ext();
  if (r.order() != 2) {
    rep.size = 2;
    rep.characters = {"1", "eta[" + E->describe() + "]"};
    return rep;
  }
  rep.size = 4;
  uint32_t a = E->ramified() ? (E->level() + 1) / 2 : E->level();
  for (const auto& eta : quadratic_f_characters(E->p(), a)) {
    LocalCharacter en = compose_with_norm(E, eta);
    if (en == r) {
      std::string ep = "eta'(p)=" + eta.p_value.str() + ", eta'(units)=";
      for (const auto& v : eta.gen_values) ep += v.str() + " ";
      rep.characters = {"1", "eta[" + E->describe() + "]", "eta'", "eta*eta'"};
      rep.biquadratic = "compositum of " + E->describe() + " and ker(" + ep + ")";
      return rep;
    }
  }
  fail(errc::internal_error, "order-2 ratio is not a norm-composed quadratic character");
}

uint32_t mod_ell_sc_length(const LocalCharacter& xi, uint32_t ell) {
  const auto& E = xi.ext();
  uint32_t p = E->p();
  require(is_prime(ell), errc::invalid_input, "ell must be prime");
  require(ell != p, errc::invalid_input, "ell must differ from p");
  LocalCharacter r = xi.galois_conjugate().ratio(xi);
  require(!r.is_trivial(), errc::not_regular, "xi must be regular");
  uint32_t q = E->residue_q();
  if (p != 2 || E->ramified() || (q + 1) % ell != 0) return 1;
  if (r.order_on_one_plus_p() != 2) return 1;
  QuadExt::Elt b = E->unit_of_order(q + 1);
  QZ xb = xi.value_on_unit(b);
  if (xb.is_zero()) return 1;
  uint64_t o = xb.order();
  while (o % ell == 0) o /= ell;
  return o == 1 ? 2 : 1;  // xi(b) != 1 of ell-power order
}

NormGroupReport norm_group_index(const QuadExt& E) {
  NormGroupReport rep;
  uint32_t p = E.p();
  require(!(p == 2 && E.ramified()), errc::unsupported, "ramified p=2 not modelled");
  uint64_t fm = E.f_modulus();
  // norm classes of units, saturated by unit squares
  std::unordered_set<uint64_t> ns;
  {
    std::unordered_set<uint64_t> norm_units;
    for (const auto& u : E.units()) norm_units.insert(E.norm(u) % fm);
    std::vector<uint64_t> squares;
    for (uint64_t x = 1; x < fm; ++x)
      if (x % p != 0) squares.push_back(x * x % fm);
    for (uint64_t nu : norm_units)
      for (uint64_t s : squares) ns.insert(nu * s % fm);
  }
  uint64_t u_ns = (p == 2) ? 5 % fm : smallest_nonresidue(p);
  if (!E.ramified()) {
    rep.cls[0] = ns.count(1) > 0;
    rep.cls[1] = ns.count(u_ns) > 0;
    rep.cls[2] = rep.cls[3] = false;  // N(p) = p^2: only even valuations
    rep.describe = "units x p^(2Z)";
  } else {
    // x = p^v w in N(E*) iff w * (-u)^(-v) is a unit-norm class
    uint64_t u = E.nonresidue_unit() ? smallest_nonresidue(p) : 1;
    uint64_t minus_u = (fm - u % fm) % fm;
    rep.cls[0] = ns.count(1) > 0;
    rep.cls[1] = ns.count(u_ns) > 0;
    rep.cls[2] = ns.count(minus_u) > 0;                // class of p
    rep.cls[3] = ns.count(minus_u * u_ns % fm) > 0;    // class of u*p
    rep.describe = "index-2 subgroup containing -u*p";
  }
  uint32_t cnt = 0;
  for (bool c : rep.cls) cnt += c;
  require(cnt == 2, errc::internal_error, "norm group is not of index 2 among the four square classes");
  rep.index = 2;
  return rep;
}

}  // namespace sl2p
