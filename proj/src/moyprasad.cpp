#include "sl2p/moyprasad.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "sl2p/meataxe.hpp"

namespace sl2p {

namespace {

uint64_t upow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// 2x2 arithmetic over Z/p^n.
struct Zpn {
  uint32_t p;
  uint32_t n;
  uint64_t pn;
  using M2 = std::array<uint64_t, 4>;

  Zpn(uint32_t p_, uint32_t n_) : p(p_), n(n_), pn(upow(p_, n_)) {
    require(pn <= (1u << 24), errc::resource_limit, "finite quotient too large");
  }
  M2 mul(const M2& x, const M2& y) const {
    return {(x[0] * y[0] + x[1] * y[2]) % pn, (x[0] * y[1] + x[1] * y[3]) % pn,
            (x[2] * y[0] + x[3] * y[2]) % pn, (x[2] * y[1] + x[3] * y[3]) % pn};
  }
  bool is_unit(uint64_t x) const { return x % p != 0; }
  uint64_t inv_unit(uint64_t x) const {
    uint64_t phi = pn / p * (p - 1);
    uint64_t r = 1, b = x % pn, e = phi - 1;
    while (e) {
      if (e & 1) r = r * b % pn;
      b = b * b % pn;
      e >>= 1;
    }
    return r;
  }
  std::vector<uint64_t> unit_gens() const {
    if (pn <= 2) return {};
    if (p == 2) {
      if (n == 2) return {3};
      return {pn - 1, 5};
    }
    uint32_t g = 2;
    for (;; ++g) {
      uint64_t x = g % p, o = 1;
      while (x != 1) {
        x = x * g % p;
        ++o;
      }
      if (o == p - 1) break;
    }
    if (n >= 2) {
      uint64_t pp = uint64_t(p) * p;
      uint64_t x = g % pp, o = 1;
      while (x != 1) {
        x = x * g % pp;
        ++o;
      }
      if (o != uint64_t(p) * (p - 1)) g += p;
    }
    return {g};
  }
  std::vector<uint64_t> one_mod_gens(uint32_t a) const {
    if (a >= n) return {};
    if (p == 2 && a == 1) return unit_gens();
    return {(1 + upow(p, a)) % pn};
  }
};

/// Generators of the image of the pattern subgroup in SL2/GL2(Z/p^n),
/// through the factorization g = E21(c) diag E12(b).
std::vector<Zpn::M2> pattern_generators(const Zpn& R, const MPPattern& pat, bool det_one) {
  std::vector<Zpn::M2> gens;
  if (pat.upper < R.n) gens.push_back({1, upow(R.p, pat.upper) % R.pn, 0, 1});
  if (pat.lower < R.n) gens.push_back({1, 0, upow(R.p, pat.lower) % R.pn, 1});
  std::vector<uint64_t> dg = pat.diag == 0 ? R.unit_gens() : R.one_mod_gens(pat.diag);
  for (uint64_t u : dg) {
    if (det_one)
      gens.push_back({u, 0, 0, R.inv_unit(u)});
    else {
      gens.push_back({u, 0, 0, 1});
      gens.push_back({1, 0, 0, u});
    }
  }
  return gens;
}

/// Projective line over Z/p^n: canonical unimodular rows (c, d) up to unit
/// scaling; (1, x) when c is a unit, (c, 1) with p | c otherwise.
struct ProjLine {
  const Zpn& R;
  std::vector<std::pair<uint64_t, uint64_t>> pts;
  std::unordered_map<uint64_t, uint32_t> index;

  explicit ProjLine(const Zpn& r) : R(r) {
    for (uint64_t x = 0; x < R.pn; ++x) pts.push_back({1, x});
    for (uint64_t c = 0; c < R.pn; c += R.p) pts.push_back({c, 1});
    for (uint32_t i = 0; i < pts.size(); ++i) index[key(pts[i])] = i;
  }
  static uint64_t key(const std::pair<uint64_t, uint64_t>& pt) { return (pt.first << 32) | pt.second; }
  uint32_t act(uint32_t pt, const Zpn::M2& g) const {
    auto [c, d] = pts[pt];
    uint64_t nc = (c * g[0] + d * g[2]) % R.pn;
    uint64_t nd = (c * g[1] + d * g[3]) % R.pn;
    std::pair<uint64_t, uint64_t> cn;
    if (R.is_unit(nc))
      cn = {1, nd * R.inv_unit(nc) % R.pn};
    else {
      require(R.is_unit(nd), errc::internal_error, "row not unimodular");
      cn = {nc * R.inv_unit(nd) % R.pn, 1};
    }
    auto it = index.find(key(cn));
    require(it != index.end(), errc::internal_error, "projective point fell off the line");
    return it->second;
  }
};

uint64_t orbit_count(const ProjLine& pl, const std::vector<Zpn::M2>& gens) {
  std::vector<bool> seen(pl.pts.size(), false);
  uint64_t orbits = 0;
  std::vector<uint32_t> stack;
  for (uint32_t s = 0; s < pl.pts.size(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    seen[s] = true;
    stack.assign(1, s);
    while (!stack.empty()) {
      uint32_t cur = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        uint32_t nx = pl.act(cur, g);
        if (!seen[nx]) {
          seen[nx] = true;
          stack.push_back(nx);
        }
      }
    }
  }
  return orbits;
}

/// [A : Q] where Q = {g in A : lower-left valuation >= m}, A = SL2(O)-image
/// (amb_iwahori = false) or the Iwahori (amb_iwahori = true), counted as
/// bottom-row classes mod p^m up to unit scaling.  m = 0 gives 1.
uint64_t cosets_lower_floor(uint32_t p, bool amb_iwahori, uint32_t m) {
  if (m == 0) return 1;
  Zpn R(p, m);
  std::unordered_set<uint64_t> classes;
  for (uint64_t c = 0; c < R.pn; ++c)
    for (uint64_t d = 0; d < R.pn; ++d) {
      if (!R.is_unit(c) && !R.is_unit(d)) continue;
      if (amb_iwahori && c % p != 0) continue;  // Iwahori bottom rows have p | c
      uint64_t cc, dd;
      if (R.is_unit(c)) {
        cc = 1;
        dd = d * R.inv_unit(c) % R.pn;
      } else {
        cc = c * R.inv_unit(d) % R.pn;
        dd = 1;
      }
      classes.insert((cc << 32) | dd);
    }
  return classes.size();
}

/// Mirror image: Q = {g in A : upper-right valuation >= m}, counted as
/// top-row classes.  Iwahori top rows have a unit in the corner.
uint64_t cosets_upper_floor(uint32_t p, bool amb_iwahori, uint32_t m) {
  if (m == 0) return 1;
  Zpn R(p, m);
  std::unordered_set<uint64_t> classes;
  for (uint64_t a = 0; a < R.pn; ++a)
    for (uint64_t b = 0; b < R.pn; ++b) {
      if (!R.is_unit(a) && !R.is_unit(b)) continue;
      if (amb_iwahori && !R.is_unit(a)) continue;
      uint64_t aa, bb;
      if (R.is_unit(a)) {
        aa = 1;
        bb = b * R.inv_unit(a) % R.pn;
      } else {
        aa = a * R.inv_unit(b) % R.pn;
        bb = 1;
      }
      classes.insert((aa << 32) | bb);
    }
  return classes.size();
}

MPPattern conj_t_pow(const MPPattern& pat, uint32_t i) {
  // t^i (.) t^{-i}, t = diag(p, p^{-1})
  return {pat.diag, pat.upper + 2 * i, pat.lower >= 2 * i ? pat.lower - 2 * i : 0};
}

MPPattern conj_di_pow(const MPPattern& pat, uint32_t i) {
  // diag(p^i, 1) (.) diag(p^{-i}, 1)
  return {pat.diag, pat.upper + i, pat.lower >= i ? pat.lower - i : 0};
}

MPPattern flip(const MPPattern& pat) { return {pat.diag, pat.lower, pat.upper}; }

/// Local fixed dimension of the inducing module under the mod-p image of a
/// conjugated pattern: explicit generators, explicit kernel computation.
uint64_t local_dim(const GLContext& ctx, const MatRep& module, const MPPattern& pat) {
  std::vector<GElt> gens;
  const Ring& R = module.group()->ring();
  if (pat.upper == 0) gens.push_back({R.one(), R.one(), 0, R.one()});
  if (pat.lower == 0) gens.push_back({R.one(), 0, R.one(), R.one()});
  if (pat.diag == 0) {
    bool det_one = module.group()->kind() == GroupSpec::Kind::SL2;
    for (uint32_t u : R.unit_group_generators()) {
      if (det_one)
        gens.push_back({u, 0, 0, R.inv(u)});
      else {
        gens.push_back({u, 0, 0, R.one()});
        gens.push_back({R.one(), 0, 0, u});
      }
    }
  }
  (void)ctx;
  return fixed_vectors_of(module, gens);
}

const MatRep& sigma_module(uint32_t q, const IrrepLabel& sigma) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, IrrepLabel>, MatRep> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, sigma);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const GLContext& ctx = GLContext::get(q);
    it = cache.emplace(key, construct(ctx, ctx.coefficient_field(0), sigma)).first;
  }
  return it->second;
}

/// Literal-subscript subgroup patterns for the invariant engines:
/// K at j = K'_j (j >= 1); I at j = I'_j; Ihalf at j = I'_{1/2+j}.
MPPattern invariant_pattern(MPFamily f, uint32_t j) {
  switch (f) {
    case MPFamily::K:
      require(j >= 1, errc::invalid_input, "K'_j needs j >= 1");
      return {j, j, j};
    case MPFamily::I: return {j, j, j + 1};
    case MPFamily::Ihalf: return {j + 1, j, j + 1};
    case MPFamily::Kd: break;
  }
  fail(errc::invalid_input, "unsupported family for invariant dimensions");
}

}  // namespace

std::string family_name(MPFamily f) {
  switch (f) {
    case MPFamily::K: return "K";
    case MPFamily::Kd: return "Kd";
    case MPFamily::I: return "I";
    case MPFamily::Ihalf: return "Ihalf";
  }
  return "?";
}

MPPattern family_pattern(MPFamily f, uint32_t j) {
  switch (f) {
    case MPFamily::K: return {j + 1, j + 1, j + 1};   // K'_{1+j}
    case MPFamily::Kd: return {j + 1, j, j + 2};      // d K'_{1+j} d^{-1}
    case MPFamily::I: return {j, j, j + 1};           // I'_j
    case MPFamily::Ihalf: return {j + 1, j, j + 1};   // I'_{1/2+j}
  }
  return {};
}

CensusResult coset_census(uint32_t p, MPFamily family, uint32_t j, uint32_t level) {
  require(is_prime(p), errc::invalid_input, "p must be prime");
  MPPattern pat = family_pattern(family, j);
  uint32_t n = pat.min_level();
  if (level != 0) {
    require(level >= n, errc::invalid_input, "quotient level too shallow for this subgroup");
    n = level;
  }
  Zpn R(p, n);
  ProjLine pl(R);
  CensusResult res;
  res.level = n;
  res.count_sl2 = orbit_count(pl, pattern_generators(R, pat, true));
  res.count_gl2 = orbit_count(pl, pattern_generators(R, pat, false));
  uint64_t qj = upow(p, j);
  res.formula = (family == MPFamily::K || family == MPFamily::Kd) ? (p + 1) * qj : 2 * qj;
  return res;
}

bool bijection_check(uint32_t p, MPFamily family, uint32_t j) { return coset_census(p, family, j).bijective(); }

const std::vector<MatRep>& sl2_cuspidal_constituents(uint32_t q, const IrrepLabel& sigma) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, IrrepLabel>, std::vector<MatRep>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, sigma);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const GLContext& ctx = GLContext::get(q);
    MatRep res = restrict_to_sl2(ctx, sigma_module(q, sigma));
    DecompositionReport rep = decompose(res, 1);
    std::vector<MatRep> cons;
    for (const auto& [c, mult] : rep.constituents) {
      require(mult == 1, errc::internal_error, "restriction to SL2 must be multiplicity-free");
      cons.push_back(c);
    }
    it = cache.emplace(key, std::move(cons)).first;
  }
  return it->second;
}

IrrepLabel size4_sigma_label(uint32_t q) {
  require(q % 2 == 1, errc::invalid_input, "size-4 depth-zero packets need p odd");
  // theta(b) of order 2 for b of order q+1: exponent (q+1)/2
  return IrrepLabel::make_cusp(q, (q + 1) / 2);
}

MackeySum invariant_dim(const DepthZeroDatum& datum, MPFamily family, uint32_t j) {
  const uint32_t q = datum.q;
  require(is_prime(q), errc::invalid_input, "residue field size must be prime here");
  const GLContext& ctx = GLContext::get(q);

  const MatRep* module = nullptr;
  if (datum.constituent < 0) {
    module = &sigma_module(q, datum.sigma);
  } else {
    const auto& cons = sl2_cuspidal_constituents(q, datum.sigma);
    require(size_t(datum.constituent) < cons.size(), errc::invalid_input, "no such constituent");
    module = &cons[size_t(datum.constituent)];
  }
  // cuspidality of the inducing datum, verified on the module itself
  {
    const Ring& R = module->group()->ring();
    std::vector<GElt> ugens{{R.one(), R.one(), 0, R.one()}};
    if (ctx.deg > 1)
      for (uint32_t i = 1; i < ctx.deg; ++i) {
        uint32_t b = 1;
        for (uint32_t t = 0; t < i; ++t) b *= ctx.p;
        ugens.push_back({R.one(), b, 0, R.one()});
      }
    require(fixed_vectors_of(*module, ugens) == 0, errc::invalid_input,
            "inducing datum must be cuspidal (no U-fixed vectors)");
  }

  MackeySum sum;
  if (datum.constituent < 0) {
    // ZK0 engine: Pi = ind_{ZK0}^G sigma-tilde; cells ZK0 diag(p^i,1) K'_0;
    // vertex 1 keeps even i (Pi+), vertex 2 odd i (Pi-); subgroup K'_j.
    require(family == MPFamily::K, errc::invalid_input, "the ZK0 engine runs on the K family");
    MPPattern Kj = invariant_pattern(MPFamily::K, j);
    for (uint32_t i = 0; i <= j + 1; ++i) {
      uint64_t ld = local_dim(ctx, *module, conj_di_pow(Kj, i));
      if (i > j) {
        require(ld == 0, errc::internal_error, "cell vanishing assertion failed");
        continue;
      }
      bool in_vertex = (datum.vertex == 1) ? (i % 2 == 0) : (i % 2 == 1);
      if (!in_vertex) continue;
      MackeyCell cell;
      cell.i = i;
      cell.coset_count = i == 0 ? 1 : cosets_upper_floor(q, false, std::min(i, j));
      cell.local_dim = ld;
      sum.cells.push_back(cell);
      sum.total += cell.coset_count * cell.local_dim;
    }
    return sum;
  }

  MPPattern Q = invariant_pattern(family, j);
  if (datum.vertex == 2) {
    // beta = antidiag(1, p) normalizes I'_j and I'_{1/2+j} (the patterns are
    // stable under its conjugation, which sends floors (u, l) to (l-1, u+1))
    // and swaps the two vertex classes; so vertex-2 members have the same
    // Iwahori-family invariants as vertex-1 members.  K-family dimensions
    // are not beta-stable and go through the ZK0 parity engine instead.
    require(family != MPFamily::K, errc::unsupported,
            "vertex-2 K-family dimensions are reached through the ZK0 parity engine");
    MPPattern beta_conj{Q.diag, Q.lower >= 1 ? Q.lower - 1 : 0, Q.upper + 1};
    require(beta_conj.diag == Q.diag && beta_conj.upper == Q.upper && beta_conj.lower == Q.lower,
            errc::internal_error, "subgroup is not normalized by the Iwahori normalizer");
  }

  if (family == MPFamily::K) {
    // vertex-1 member: cells K'_0 t^i K'_0, M'_i = {lower >= 2i}
    for (uint32_t i = 0; i <= j + 1; ++i) {
      uint64_t ld = local_dim(ctx, *module, conj_t_pow(Q, i));
      if (2 * i > j) {
        require(ld == 0, errc::internal_error, "cell vanishing assertion failed");
        if (i > j) break;
        continue;
      }
      MackeyCell cell;
      cell.i = i;
      cell.coset_count = i == 0 ? 1 : cosets_lower_floor(q, false, std::min(2 * i, Q.lower));
      cell.local_dim = ld;
      sum.cells.push_back(cell);
      sum.total += cell.coset_count * cell.local_dim;
    }
    return sum;
  }

  // Iwahori engine: coarse cells K'_0 t^i u I'_0 (u = 1 and, for i >= 1, w),
  // refined cell count [I'_0 : P_{i,u} Q]; Q is normal in I'_0.
  for (uint32_t i = 0; i <= j + 2; ++i) {
    uint64_t ld1 = local_dim(ctx, *module, conj_t_pow(Q, i));
    uint64_t ldw = i >= 1 ? local_dim(ctx, *module, conj_t_pow(flip(Q), i)) : 0;
    if (i > j + 1) {
      require(ld1 == 0 && ldw == 0, errc::internal_error, "cell vanishing assertion failed");
      break;
    }
    if (ld1 > 0) {
      MackeyCell cell;
      cell.i = i;
      cell.coset_count = cosets_lower_floor(q, true, std::min(std::max(2 * i, 1u), Q.lower));
      cell.local_dim = ld1;
      sum.cells.push_back(cell);
      sum.total += cell.coset_count * cell.local_dim;
    }
    if (i >= 1 && ldw > 0) {
      MackeyCell cell;
      cell.i = i;
      cell.coset_count = cosets_upper_floor(q, true, std::min(2 * i, Q.upper));
      cell.local_dim = ldw;
      sum.cells.push_back(cell);
      sum.total += cell.coset_count * cell.local_dim;
    }
  }
  return sum;
}

namespace {

/// dim (ind_{B'}^{G'} 1)^{H'} for the literal subgroup of the invariant
/// engines, via the census (K'_j is the K-census at index j-1).
uint64_t ind_b1_dim(uint32_t q, MPFamily family, uint32_t j) {
  switch (family) {
    case MPFamily::K:
      require(j >= 1, errc::invalid_input, "K'_j needs j >= 1");
      return coset_census(q, MPFamily::K, j - 1).count_sl2;
    case MPFamily::I:
    case MPFamily::Ihalf:
      return coset_census(q, family, j).count_sl2;
    case MPFamily::Kd: break;
  }
  fail(errc::invalid_input, "unsupported family");
}

}  // namespace

GermCheckReport germ_identity_check(uint32_t q, MPFamily family, uint32_t j_lo, uint32_t j_hi,
                                    GermTarget target) {
  require(q % 2 == 1, errc::invalid_input, "the size-4 depth-zero packet needs p odd");
  require(j_lo >= 1 && j_hi >= j_lo, errc::invalid_input, "bad j range");
  require(family == MPFamily::I || family == MPFamily::Ihalf || target == GermTarget::IndB1,
          errc::unsupported, "per-member targets run on the Iwahori families");
  IrrepLabel sigma = size4_sigma_label(q);
  const auto& cons = sl2_cuspidal_constituents(q, sigma);
  require(cons.size() == 2, errc::internal_error, "size-4 datum must restrict with length 2");

  GermCheckReport rep;
  for (uint32_t j = j_lo; j <= j_hi; ++j) {
    auto member = [&](int c, int vertex) {
      return int64_t(invariant_dim({q, sigma, c, vertex}, family, j).total);
    };
    int64_t packet_sum = 0;
    std::vector<int64_t> members;
    if (family == MPFamily::K) {
      members = {member(0, 1), member(1, 1)};
      // vertex-2 total through the ZK0 parity engine, scaled to constituents
      int64_t pim = int64_t(invariant_dim({q, sigma, -1, 2}, family, j).total);
      packet_sum = members[0] + members[1] + pim;
    } else {
      members = {member(0, 1), member(1, 1), member(0, 2), member(1, 2)};
      packet_sum = members[0] + members[1] + members[2] + members[3];
    }
    int64_t target_dim = 0;
    switch (target) {
      case GermTarget::IndB1:
        target_dim = int64_t(ind_b1_dim(q, family, j));
        break;
      case GermTarget::MemberPair:
        target_dim = members[0];
        packet_sum = members[2];  // same value predicted across the packet
        break;
      case GermTarget::DropOneMember:
        target_dim = int64_t(ind_b1_dim(q, family, j));
        packet_sum -= members[3];
        break;
    }
    rep.js.push_back(j);
    rep.diffs.push_back(target_dim - packet_sum);
  }
  rep.stabilized = false;
  for (size_t s = 0; s + 1 < rep.diffs.size(); ++s) {
    bool flat = true;
    for (size_t t = s + 1; t < rep.diffs.size(); ++t)
      if (rep.diffs[t] != rep.diffs[s]) {
        flat = false;
        break;
      }
    if (flat) {
      rep.stabilized = true;
      rep.constant = rep.diffs[s];
      rep.threshold = rep.js[s];
      break;
    }
  }
  return rep;
}

}  // namespace sl2p
