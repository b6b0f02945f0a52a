#include "sl2p/reps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "sl2p/meataxe.hpp"
#include "sl2p/sylvester.hpp"

namespace sl2p {

IrrepLabel IrrepLabel::make_char(uint32_t q, uint32_t chi) {
  return {Kind::Char, q, chi % (q - 1 ? q - 1 : 1), 0, 0};
}
IrrepLabel IrrepLabel::make_st_twist(uint32_t q, uint32_t chi) {
  return {Kind::StTwist, q, chi % (q - 1 ? q - 1 : 1), 0, 0};
}
IrrepLabel IrrepLabel::make_princ(uint32_t q, uint32_t c1, uint32_t c2) {
  uint32_t m = q - 1;
  c1 %= m;
  c2 %= m;
  require(c1 != c2, errc::invalid_input, "Princ needs distinct characters");
  if (c1 > c2) std::swap(c1, c2);
  return {Kind::Princ, q, c1, c2, 0};
}
IrrepLabel IrrepLabel::make_cusp(uint32_t q, uint32_t theta) {
  uint32_t m2 = q * q - 1;
  theta %= m2;
  uint32_t conj = uint32_t(uint64_t(theta) * q % m2);
  require(conj != theta, errc::invalid_input, "Cusp needs theta != theta^q");
  return {Kind::Cusp, q, 0, 0, std::min(theta, conj)};
}
IrrepLabel IrrepLabel::make_cusp0_twist(uint32_t q, uint32_t chi) {
  return {Kind::Cusp0Twist, q, chi % (q - 1 ? q - 1 : 1), 0, 0};
}

uint32_t IrrepLabel::dim() const {
  switch (kind) {
    case Kind::Char: return 1;
    case Kind::StTwist: return q;
    case Kind::Princ: return q + 1;
    case Kind::Cusp:
    case Kind::Cusp0Twist: return q - 1;
  }
  return 0;
}

bool IrrepLabel::operator<(const IrrepLabel& o) const {
  return std::tie(kind, chi1, chi2, theta) < std::tie(o.kind, o.chi1, o.chi2, o.theta);
}

std::string IrrepLabel::describe() const {
  switch (kind) {
    case Kind::Char: return "Char(" + std::to_string(chi1) + ")";
    case Kind::StTwist: return "St(" + std::to_string(chi1) + ")";
    case Kind::Princ: return "Princ(" + std::to_string(chi1) + "," + std::to_string(chi2) + ")";
    case Kind::Cusp: return "Cusp(" + std::to_string(theta) + ")";
    case Kind::Cusp0Twist: return "Cusp0(" + std::to_string(chi1) + ")";
  }
  return "?";
}

IrrepLabel IrrepLabel::twisted(uint32_t chi) const {
  uint32_t m = q - 1;
  switch (kind) {
    case Kind::Char: return make_char(q, chi1 + chi);
    case Kind::StTwist: return make_st_twist(q, chi1 + chi);
    case Kind::Cusp0Twist: return make_cusp0_twist(q, chi1 + chi);
    case Kind::Princ: return make_princ(q, chi1 + chi, chi2 + chi);
    case Kind::Cusp: {
      // twisting sends theta to theta * (chi o N); (chi o N)(w2) = chi(w2^(q+1)) = zeta_(q-1)^(chi(q+1)... )
      // exponentwise: chi o N has exponent chi * (q+1) against w2 when chi is read mod q-1
      (void)m;
      return make_cusp(q, theta + chi * (q + 1));
    }
  }
  return *this;
}

bool label_valid(const IrrepLabel& l, uint32_t char_r) {
  uint32_t q = l.q;
  uint32_t m = q - 1, m2 = q * q - 1;
  if (char_r != 0 && q % char_r == 0) return false;  // char_R != p always
  switch (l.kind) {
    case IrrepLabel::Kind::Char: return char_valid(l.chi1, m, char_r);
    case IrrepLabel::Kind::StTwist:
      return char_valid(l.chi1, m, char_r) && (char_r == 0 || (q + 1) % char_r != 0);
    case IrrepLabel::Kind::Cusp0Twist:
      return char_valid(l.chi1, m, char_r) && char_r != 0 && (q + 1) % char_r == 0;
    case IrrepLabel::Kind::Princ:
      return l.chi1 != l.chi2 && char_valid(l.chi1, m, char_r) && char_valid(l.chi2, m, char_r);
    case IrrepLabel::Kind::Cusp: {
      if (!char_valid(l.theta, m2, char_r)) return false;
      return uint32_t(uint64_t(l.theta) * q % m2) != l.theta;
    }
  }
  return false;
}

std::vector<IrrepLabel> valid_labels(uint32_t q, uint32_t char_r) {
  std::vector<IrrepLabel> out;
  uint32_t m = q - 1, m2 = q * q - 1;
  for (uint32_t j = 0; j < std::max(1u, m); ++j) {
    IrrepLabel c = IrrepLabel::make_char(q, j);
    if (label_valid(c, char_r)) out.push_back(c);
    IrrepLabel s = IrrepLabel::make_st_twist(q, j);
    if (label_valid(s, char_r)) out.push_back(s);
    IrrepLabel c0 = IrrepLabel::make_cusp0_twist(q, j);
    if (label_valid(c0, char_r)) out.push_back(c0);
  }
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = a + 1; b < m; ++b) {
      IrrepLabel l = IrrepLabel::make_princ(q, a, b);
      if (label_valid(l, char_r)) out.push_back(l);
    }
  for (uint32_t t = 1; t < m2; ++t) {
    uint32_t conj = uint32_t(uint64_t(t) * q % m2);
    if (conj == t || conj < t) continue;  // canonical representative only
    IrrepLabel l = IrrepLabel::make_cusp(q, t);
    if (label_valid(l, char_r)) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GLContext::GLContext(uint32_t q_) : q(q_) {
  require(q >= 2 && q <= 64, errc::invalid_input, "q out of supported range");
  uint32_t pp = 2;
  while (!is_prime(pp) || q % pp != 0) ++pp;
  // q must be a prime power
  p = 2;
  for (uint32_t cand = 2; cand <= q; ++cand) {
    if (!is_prime(cand)) continue;
    uint32_t v = cand;
    uint32_t d = 1;
    while (v < q) {
      v *= cand;
      ++d;
    }
    if (v == q) {
      p = cand;
      deg = d;
      break;
    }
  }
  require(p >= 2, errc::invalid_input, "q is not a prime power");
  k = make_field(p, deg);
  k2 = make_field(p, 2 * deg);
  embed_k_in_k2 = subfield_embedding(*k, *k2);
  gl2 = GroupSpec::make(Ring::ext_field(k), GroupSpec::Kind::GL2);
  sl2 = GroupSpec::make(Ring::ext_field(k), GroupSpec::Kind::SL2);

  // matrix of multiplication by the canonical generator w2 of k2* on a
  // k-basis {1, z} of k2 (z = any element outside the embedded k)
  std::map<Field::elt, std::pair<Field::elt, Field::elt>> coords;
  Field::elt z = 0;
  {
    std::vector<bool> in_k(k2->size(), false);
    for (auto v : embed_k_in_k2) in_k[v] = true;
    for (Field::elt cand = 0; cand < k2->size(); ++cand)
      if (!in_k[cand]) {
        z = cand;
        break;
      }
    for (uint32_t a = 0; a < k->size(); ++a)
      for (uint32_t b = 0; b < k->size(); ++b) {
        Field::elt v = k2->add(embed_k_in_k2[a], k2->mul(embed_k_in_k2[b], z));
        coords[v] = {a, b};
      }
  }
  Field::elt w2 = k2->generator();
  auto c1 = coords.at(k2->mul(w2, k2->one()));
  auto cz = coords.at(k2->mul(w2, z));
  torus_gen = {c1.first, cz.first, c1.second, cz.second};
  require(gl2->contains(torus_gen), errc::internal_error, "torus generator not invertible");
}

uint32_t GLContext::exponent() const { return std::lcm(p * (q - 1), q * q - 1); }

FieldPtr GLContext::coefficient_field(uint32_t char_r) const {
  if (char_r == 0) {
    uint32_t e = exponent();
    for (uint32_t l = 2;; ++l)
      if (is_prime(l) && l % e == 1 % e && (l - 1) % e == 0) return make_field(l, 1);
  }
  require(is_prime(char_r) && char_r != p, errc::invalid_input, "coefficient characteristic must be a prime != p");
  return field_with_roots(char_r, {p, regular_part(q * q - 1, char_r)});
}

const GLContext& GLContext::get(uint32_t q) {
  static std::mutex mu;
  static std::map<uint32_t, std::unique_ptr<GLContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::make_unique<GLContext>(q)).first;
  return *it->second;
}

std::vector<Mat> MatRep::generator_matrices() const {
  std::vector<Mat> out;
  for (const auto& g : group_->generators()) out.push_back(at(g));
  return out;
}

MatRep MatRep::twisted_by_det(const MultCharacter& chi) const {
  MatRep r(group_, field_, dim_);
  r.matrices().reserve(mats_.size());
  const auto& elems = group_->enumerate();
  for (size_t i = 0; i < elems.size(); ++i) {
    GElt g = group_->unkey(elems[i]);
    r.matrices().push_back(mats_[i].scaled(chi(group_->det(g))));
  }
  return r;
}

bool MatRep::check_multiplicative(size_t samples, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const auto& elems = group_->enumerate();
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  for (size_t s = 0; s < samples; ++s) {
    GElt x = group_->unkey(elems[pick(rng)]);
    GElt y = group_->unkey(elems[pick(rng)]);
    if (!(Mat::mul(at(x), at(y)) == at(group_->mul(x, y)))) return false;
  }
  return true;
}

namespace {

/// Right-coset structure of H in G: for every element index, the coset id
/// and the H-element index h with x = h * rep(coset).
struct CosetTable {
  std::vector<GElt> reps;
  std::vector<uint32_t> coset_of;
  std::vector<uint32_t> factor_of;  // index into the H element list
};

CosetTable right_cosets(const GroupPtr& G, const std::vector<GElt>& H) {
  const auto& elems = G->enumerate();
  CosetTable t;
  t.coset_of.assign(elems.size(), UINT32_MAX);
  t.factor_of.assign(elems.size(), 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (t.coset_of[i] != UINT32_MAX) continue;
    GElt r = G->unkey(elems[i]);
    uint32_t cid = uint32_t(t.reps.size());
    t.reps.push_back(r);
    for (uint32_t hi = 0; hi < H.size(); ++hi) {
      size_t j = G->index_of(G->mul(H[hi], r));
      t.coset_of[j] = cid;
      t.factor_of[j] = hi;
    }
  }
  return t;
}

/// ind_H^G(chi) for a character chi of H, on delta functions over H\G.
MatRep induce_character(const GroupPtr& G, FieldPtr F, const std::vector<GElt>& H,
                        const std::function<Field::elt(const GElt&)>& chi) {
  CosetTable ct = right_cosets(G, H);
  const size_t dim = ct.reps.size();
  const auto& elems = G->enumerate();
  MatRep rep(G, F, dim);
  rep.matrices().reserve(elems.size());
  for (size_t gi = 0; gi < elems.size(); ++gi) {
    GElt g = G->unkey(elems[gi]);
    Mat m(F, dim, dim);
    for (size_t j = 0; j < dim; ++j) {
      size_t idx = G->index_of(G->mul(ct.reps[j], g));
      uint32_t i = ct.coset_of[idx];
      m.at(j, i) = chi(H[ct.factor_of[idx]]);
    }
    rep.matrices().push_back(std::move(m));
  }
  return rep;
}

std::vector<GElt> subgroup_elements(const GroupPtr& G, SubgroupHandle::Name name) {
  return SubgroupHandle(G, name).elements();
}

/// The (chi o det)-isotypic line of `rep` (stacked kernel over generators).
Mat isotypic_line(const MatRep& rep, const MultCharacter& chi) {
  const FieldPtr& F = rep.field();
  auto gens = rep.group()->generators();
  Mat stacked(F, 0, rep.dim());
  bool first = true;
  for (const auto& g : gens) {
    Mat d = rep.at(g) - Mat::identity(F, rep.dim()).scaled(chi(rep.group()->det(g)));
    stacked = first ? d : Mat::vstack(stacked, d);
    first = false;
  }
  return stacked.kernel_basis();
}

}  // namespace

MatRep rep_from_generator_matrices(const GroupPtr& G, FieldPtr F, const std::vector<Mat>& gen_mats) {
  // build the full element table by BFS over the Cayley graph
  const auto& elems = G->enumerate();
  auto gens = G->generators();
  require(gens.size() == gen_mats.size(), errc::invalid_input, "one matrix per generator required");
  size_t dim = gen_mats.empty() ? 0 : gen_mats[0].rows();
  MatRep rep(G, F, dim);
  rep.matrices().assign(elems.size(), Mat());
  std::vector<bool> have(elems.size(), false);
  size_t id_idx = G->index_of(G->id());
  rep.matrices()[id_idx] = Mat::identity(F, dim);
  have[id_idx] = true;
  std::vector<size_t> frontier{id_idx};
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t cur : frontier) {
      GElt x = G->unkey(elems[cur]);
      for (size_t t = 0; t < gens.size(); ++t) {
        size_t j = G->index_of(G->mul(x, gens[t]));
        if (have[j]) continue;
        rep.matrices()[j] = Mat::mul(rep.matrices()[cur], gen_mats[t]);
        have[j] = true;
        next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  for (bool h : have) require(h, errc::internal_error, "generators do not reach the whole group");
  return rep;
}

MatRep principal_series(const GLContext& ctx, FieldPtr F, uint32_t chi1, uint32_t chi2) {
  MultCharacter c1(ctx.k, F, chi1), c2(ctx.k, F, chi2);
  auto B = subgroup_elements(ctx.gl2, SubgroupHandle::Name::B);
  auto chiB = [&, c1, c2](const GElt& b) { return F->mul(c1(b[0]), c2(b[3])); };
  MatRep rep = induce_character(ctx.gl2, F, B, chiB);
  require(rep.dim() == ctx.q + 1, errc::internal_error, "principal series dimension");
  return rep;
}

MatRep gelfand_graev(const GLContext& ctx, FieldPtr F) {
  AdditiveCharacter psi(ctx.k, F);
  auto U = subgroup_elements(ctx.gl2, SubgroupHandle::Name::U);
  auto chiU = [&psi](const GElt& u) { return psi(u[1]); };
  MatRep rep = induce_character(ctx.gl2, F, U, chiU);
  require(rep.dim() == ctx.gl2->order() / ctx.q, errc::internal_error, "Gelfand-Graev dimension");
  return rep;
}

size_t fixed_vectors_of(const MatRep& rep, const std::vector<GElt>& gens) {
  const FieldPtr& F = rep.field();
  if (gens.empty()) return rep.dim();
  Mat stacked(F, 0, rep.dim());
  bool first = true;
  for (const auto& g : gens) {
    Mat d = rep.at(g) - Mat::identity(F, rep.dim());
    stacked = first ? d : Mat::vstack(stacked, d);
    first = false;
  }
  return rep.dim() - stacked.rank();
}

size_t fixed_vectors(const MatRep& rep, const SubgroupHandle& H) {
  return fixed_vectors_of(rep, H.generators());
}

size_t fixed_vectors_checked(const MatRep& rep, const SubgroupHandle& H) {
  size_t dim = fixed_vectors(rep, H);
  auto els = H.elements();
  const FieldPtr& F = rep.field();
  uint32_t p = F->characteristic();
  require(els.size() % p != 0, errc::invalid_input, "|H| not invertible in the coefficient field");
  Field::elt sum = 0;
  for (const auto& h : els) sum = F->add(sum, rep.at(h).trace());
  Field::elt avg = F->div(sum, F->from_int(uint32_t(els.size() % p)));
  require(avg == F->from_int(uint32_t(dim % p)), errc::internal_error,
          "fixed-space dimension disagrees with trace average");
  return dim;
}

MatRep restrict_to_sl2(const GLContext& ctx, const MatRep& rep) {
  require(rep.group() == ctx.gl2, errc::invalid_input, "rep is not on GL2");
  const auto& elems = ctx.sl2->enumerate();
  MatRep r(ctx.sl2, rep.field(), rep.dim());
  r.matrices().reserve(elems.size());
  for (uint64_t k : elems) r.matrices().push_back(rep.at(ctx.sl2->unkey(k)));
  r.label = rep.label;
  return r;
}

namespace {

/// Cuspidal constituents of the Gelfand-Graev module, labelled, cached per
/// (q, coefficient field).
const std::vector<MatRep>& cuspidal_constituents(const GLContext& ctx, const FieldPtr& F, uint32_t char_r) {
  static std::mutex mu;
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::vector<MatRep>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(ctx.q, F->characteristic(), F->degree());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MatRep gg = gelfand_graev(ctx, F);
  DecompositionReport rep = decompose(gg, 1);
  std::vector<MatRep> cusp;
  SubgroupHandle U(ctx.gl2, SubgroupHandle::Name::U);
  for (const auto& [cons, mult] : rep.constituents) {
    (void)mult;
    if (cons.dim() != ctx.q - 1) continue;
    if (fixed_vectors(cons, U) != 0) continue;
    MatRep labelled = cons;
    labelled.label = identify_cuspidal(ctx, char_r, cons);
    cusp.push_back(std::move(labelled));
  }
  return cache.emplace(key, std::move(cusp)).first->second;
}

}  // namespace

IrrepLabel identify_cuspidal(const GLContext& ctx, uint32_t char_r, const MatRep& V) {
  const FieldPtr& F = V.field();
  uint32_t q = ctx.q, m2 = q * q - 1;
  uint32_t la = m2 / regular_part(m2, F->characteristic());

  // measured fingerprint
  GElt t2 = ctx.torus_gen;
  GElt tprime = ctx.gl2->id();
  for (uint32_t i = 0; i < la; ++i) tprime = ctx.gl2->mul(tprime, t2);
  GElt zc = ctx.gl2->id();
  for (uint32_t i = 0; i < q + 1; ++i) zc = ctx.gl2->mul(zc, t2);
  const Mat& Z = V.at(zc);
  Field::elt central = Z.at(0, 0);
  for (size_t i = 0; i < V.dim(); ++i)
    for (size_t j = 0; j < V.dim(); ++j)
      require(Z.at(i, j) == (i == j ? central : 0), errc::internal_error, "central element not scalar");
  Field::elt tau = V.at(tprime).trace();

  Field::elt w2c = ctx.k2->pow(ctx.k2->generator(), q + 1);
  Field::elt xprime = ctx.k2->pow(ctx.k2->generator(), la);
  Field::elt xprime_q = ctx.k2->pow(xprime, q);

  std::vector<IrrepLabel> matches;
  auto try_theta = [&](uint32_t t, const IrrepLabel& label) {
    MultCharacter theta(ctx.k2, F, t);
    if (theta(w2c) != central) return;
    Field::elt expect = F->neg(F->add(theta(xprime), theta(xprime_q)));
    if (expect != tau) return;
    if (std::find(matches.begin(), matches.end(), label) == matches.end()) matches.push_back(label);
  };
  for (uint32_t t = 0; t < m2; ++t) {
    if (!char_valid(t, m2, char_r)) continue;
    uint32_t conj = uint32_t(uint64_t(t) * q % m2);
    if (conj != t)
      try_theta(t, IrrepLabel::make_cusp(q, t));
    else if (char_r != 0 && (q + 1) % char_r == 0 && t % (q + 1) == 0)
      try_theta(t, IrrepLabel::make_cusp0_twist(q, t / (q + 1)));
  }
  require(matches.size() == 1, errc::internal_error,
          "cuspidal fingerprint matched " + std::to_string(matches.size()) + " labels");
  return matches[0];
}

std::vector<IrrepLabel> reduce_label_mod_ell(const IrrepLabel& label, uint32_t ell) {
  require(label_valid(label, 0), errc::invalid_input, "reduction starts from a characteristic-zero label");
  require(is_prime(ell) && label.q % ell != 0, errc::invalid_input, "ell must be a prime != p");
  const uint32_t q = label.q, m = q - 1, m2 = q * q - 1;
  const bool ell_qp1 = (q + 1) % ell == 0;
  switch (label.kind) {
    case IrrepLabel::Kind::Char:
      return {IrrepLabel::make_char(q, reduce_char_exponent(label.chi1, m, ell))};
    case IrrepLabel::Kind::StTwist: {
      uint32_t c = reduce_char_exponent(label.chi1, m, ell);
      if (!ell_qp1) return {IrrepLabel::make_st_twist(q, c)};
      return {IrrepLabel::make_cusp0_twist(q, c), IrrepLabel::make_char(q, c)};  // sub, then quotient
    }
    case IrrepLabel::Kind::Princ: {
      uint32_t c1 = reduce_char_exponent(label.chi1, m, ell);
      uint32_t c2 = reduce_char_exponent(label.chi2, m, ell);
      if (c1 != c2) return {IrrepLabel::make_princ(q, c1, c2)};
      if (!ell_qp1) return {IrrepLabel::make_char(q, c1), IrrepLabel::make_st_twist(q, c1)};
      return {IrrepLabel::make_char(q, c1), IrrepLabel::make_cusp0_twist(q, c1), IrrepLabel::make_char(q, c1)};
    }
    case IrrepLabel::Kind::Cusp: {
      uint32_t t = reduce_char_exponent(label.theta, m2, ell);
      if (uint32_t(uint64_t(t) * q % m2) != t) return {IrrepLabel::make_cusp(q, t)};
      // theta-bar factors through the norm: sigma_0 twisted by eta, eta o N = theta-bar
      require(t % (q + 1) == 0, errc::internal_error, "norm-factoring reduction has non-divisible exponent");
      return {IrrepLabel::make_cusp0_twist(q, t / (q + 1))};
    }
    case IrrepLabel::Kind::Cusp0Twist:
      break;
  }
  fail(errc::invalid_input, "not a characteristic-zero label");
}

MatRep construct(const GLContext& ctx, FieldPtr F, const IrrepLabel& label) {
  require(label.q == ctx.q, errc::invalid_input, "label/context q mismatch");
  uint32_t char_r = F->characteristic();
  // the coefficient field's own characteristic decides which labels exist,
  // except that a splitting prime coprime to |G| emulates characteristic 0
  uint32_t eff_char = (ctx.gl2->order() % char_r == 0) ? char_r : 0;
  require(label_valid(label, eff_char), errc::invalid_field, "label not valid over this field");
  switch (label.kind) {
    case IrrepLabel::Kind::Char: {
      MultCharacter chi(ctx.k, F, label.chi1);
      const auto& elems = ctx.gl2->enumerate();
      MatRep rep(ctx.gl2, F, 1);
      rep.matrices().reserve(elems.size());
      for (uint64_t k : elems) {
        Mat m(F, 1, 1);
        m.at(0, 0) = chi(ctx.gl2->det(ctx.gl2->unkey(k)));
        rep.matrices().push_back(std::move(m));
      }
      rep.label = label;
      return rep;
    }
    case IrrepLabel::Kind::Princ: {
      MatRep rep = principal_series(ctx, F, label.chi1, label.chi2);
      rep.label = label;
      return rep;
    }
    case IrrepLabel::Kind::StTwist: {
      MultCharacter chi(ctx.k, F, label.chi1);
      MatRep ps = principal_series(ctx, F, label.chi1, label.chi1);
      Mat line = isotypic_line(ps, chi);
      require(line.rows() == 1, errc::internal_error, "StTwist: isotypic line dimension != 1");
      auto qact = quotient_action(ps.generator_matrices(), line);
      MatRep rep = rep_from_generator_matrices(ctx.gl2, F, qact);
      rep.label = label;
      return rep;
    }
    case IrrepLabel::Kind::Cusp0Twist: {
      // ker(sum functional)/constants inside ind_B^G(1), then twist
      MatRep ps = principal_series(ctx, F, 0, 0);
      Mat ones(F, 1, ps.dim());
      for (size_t c = 0; c < ps.dim(); ++c) ones.at(0, c) = 1;
      Mat W = ones.kernel_basis();  // q-dim submodule
      auto sub = restrict_action(ps.generator_matrices(), W);
      // constants line inside W-coordinates
      Mat stacked(F, 0, W.rows());
      bool first = true;
      for (const auto& s : sub) {
        Mat d = s - Mat::identity(F, W.rows());
        stacked = first ? d : Mat::vstack(stacked, d);
        first = false;
      }
      Mat line = stacked.kernel_basis();
      require(line.rows() == 1, errc::internal_error, "Cusp0: trivial line dimension != 1");
      auto qact = quotient_action(sub, line);
      MatRep sigma0 = rep_from_generator_matrices(ctx.gl2, F, qact);
      MultCharacter chi(ctx.k, F, label.chi1);
      MatRep rep = sigma0.twisted_by_det(chi);
      rep.label = label;
      return rep;
    }
    case IrrepLabel::Kind::Cusp: {
      for (const auto& c : cuspidal_constituents(ctx, F, eff_char))
        if (c.label == label) return c;
      fail(errc::internal_error, "cuspidal label not found in Gelfand-Graev decomposition");
    }
  }
  fail(errc::invalid_input, "unknown label kind");
}

}  // namespace sl2p
