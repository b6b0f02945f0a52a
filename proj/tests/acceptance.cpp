// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "sl2p/meataxe.hpp"
#include "sl2p/moyprasad.hpp"
#include "sl2p/packets.hpp"
#include "sl2p/whittaker.hpp"

using namespace sl2p;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t_start;

void begin() { t_start = std::chrono::steady_clock::now(); }

void report(int idx, const char* name, bool ok, const std::string& detail) {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  std::printf("criterion %d [%s]: %s (%s; %.1fs)\n", idx, name, ok ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

uint64_t upow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// ----- 1: classification of irreducibles --------------------------------

void criterion1() {
  begin();
  bool ok = true;
  std::string detail;
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    const GLContext& ctx = GLContext::get(q);
    FieldPtr F = ctx.coefficient_field(0);
    auto labels = valid_labels(q, 0);
    ok &= labels.size() == q * q - 1;
    uint64_t sumsq = 0;
    std::vector<MatRep> reps;
    for (const auto& l : labels) {
      MatRep r = construct(ctx, F, l);
      ok &= r.dim() == l.dim();
      ok &= decompose(r, 1).length == 1;  // irreducible
      sumsq += uint64_t(r.dim()) * r.dim();
      reps.push_back(std::move(r));
    }
    ok &= sumsq == ctx.gl2->order();
    for (size_t i = 0; i < reps.size() && ok; ++i)
      for (size_t j = i + 1; j < reps.size(); ++j)
        if (hom_dim(reps[i], reps[j]) != 0) {
          ok = false;
          break;
        }
    detail += "q=" + std::to_string(q) + ": " + std::to_string(labels.size()) + " irreps, sum dim^2 = " +
              std::to_string(sumsq) + "; ";
  }
  report(1, "classification of irreducibles", ok, detail);
}

// ----- 2: restriction lengths ------------------------------------------

void criterion2() {
  begin();
  bool ok = true;
  uint32_t checked = 0;
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    const GLContext& ctx = GLContext::get(q);
    for (uint32_t c : {0u, 2u, 3u, 5u, 7u}) {
      if (c != 0 && q % c == 0) continue;
      FieldPtr F = ctx.coefficient_field(c);
      for (const auto& l : valid_labels(q, c)) {
        MatRep r = construct(ctx, F, l);
        auto rep = decompose(restrict_to_sl2(ctx, r), 1);
        if (rep.length != restriction_length(l, c)) ok = false;
        for (const auto& [cons, mult] : rep.constituents)
          if (mult != 1) ok = false;
        ++checked;
      }
    }
  }
  report(2, "restriction lengths, closed form vs meataxe", ok,
         std::to_string(checked) + " (label, characteristic) pairs");
}

// ----- 3: mod-l reduction via integral lattices -------------------------

void criterion3() {
  begin();
  bool ok = true;
  std::string detail;

  {  // q = 3, l = 2: Steinberg lattice -> cuspidal sub + trivial quotient
    const GLContext& ctx = GLContext::get(3);
    FieldPtr F2 = ctx.coefficient_field(2);
    // the permutation model of ind_B^G(1) is integral; the natural Steinberg
    // lattice is the image of Z^(B\G) in the quotient St = ind/1, whose mod-2
    // reduction is the quotient of the reduced module by the constants line
    MatRep ps = principal_series(ctx, F2, 0, 0);
    Mat ones(F2, 1, 4);
    for (size_t c = 0; c < 4; ++c) ones.at(0, c) = 1;
    auto sub = quotient_action(ps.generator_matrices(), ones);
    MatRep st_red = rep_from_generator_matrices(ctx.gl2, F2, sub);
    auto rep = decompose(st_red, 1);
    auto predicted = reduce_label_mod_ell(IrrepLabel::make_st_twist(3, 0), 2);
    ok &= rep.length == 2 && predicted.size() == 2;
    ok &= rep.series[0].dim() == 2 && rep.series[1].dim() == 1;
    ok &= fixed_vectors_of(rep.series[0], {{1, 1, 0, 1}}) == 0;  // the sub is cuspidal
    MatRep sigma0 = construct(ctx, F2, IrrepLabel::make_cusp0_twist(3, 0));
    ok &= hom_dim(rep.series[0], sigma0) == 1;
    ok &= predicted[0] == IrrepLabel::make_cusp0_twist(3, 0) && predicted[1] == IrrepLabel::make_char(3, 0);
    detail += "St(q=3) mod 2 -> cuspidal sub + trivial quotient; ";
  }

  {  // q = 2, l = 3: sigma(theta) with theta-bar = theta-bar^q -> sigma_0 twist
    const GLContext& ctx = GLContext::get(2);
    FieldPtr F7 = ctx.coefficient_field(0);  // Gelfand-Graev entries lift to {0, +-1}
    MatRep gg = gelfand_graev(ctx, F7);
    MatRep cusp = construct(ctx, F7, IrrepLabel::make_cusp(2, 1));
    auto lift = [&](Field::elt x) -> int64_t {
      if (x == 0) return 0;
      if (x == 1) return 1;
      if (x == 6) return -1;
      std::fprintf(stderr, "unexpected entry %u in the integral model\n", x);
      return 99;
    };
    auto gens = ctx.gl2->generators();
    IntMat stacked(3 * gens.size(), 3);
    for (size_t t = 0; t < gens.size(); ++t) {
      const Mat& G = gg.at(gens[t]);
      int64_t s = lift(cusp.at(gens[t]).at(0, 0));
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
          stacked.at(3 * t + i, j) = lift(G.at(i, j)) - int64_t(i == j ? s : 0);
    }
    IntMat ker = kernel_basis_over_Z(stacked);
    ok &= ker.rows() == 1;
    FieldPtr F3 = ctx.coefficient_field(3);
    auto predicted = reduce_label_mod_ell(IrrepLabel::make_cusp(2, 1), 3);
    ok &= predicted.size() == 1 && predicted[0] == IrrepLabel::make_cusp0_twist(2, 0);
    MatRep sigma0 = construct(ctx, F3, predicted[0]);
    for (const auto& g : gens) {
      int64_t s = lift(cusp.at(g).at(0, 0));
      uint32_t red = uint32_t(((s % 3) + 3) % 3);
      ok &= sigma0.at(g).at(0, 0) == red;
    }
    detail += "sigma(theta)(q=2) mod 3 = sigma_0 twist";
  }
  report(3, "mod-l reduction of integral lattices", ok, detail);
}

// ----- 4: coset census ---------------------------------------------------

void criterion4() {
  begin();
  bool ok = true;
  uint32_t cells = 0;
  for (uint32_t p : {2u, 3u, 5u})
    for (uint32_t j = 0; j <= 3; ++j)
      for (auto f : {MPFamily::K, MPFamily::Kd, MPFamily::I, MPFamily::Ihalf}) {
        CensusResult r = coset_census(p, f, j);
        ok &= r.count_sl2 == r.formula && r.count_gl2 == r.formula && r.bijective();
        ++cells;
      }
  report(4, "Moy-Prasad coset census + SL2/GL2 bijectivity", ok,
         std::to_string(cells) + " (p, family, j) cells; formulas (q+1)q^j and 2q^j");
}

// ----- 5: invariant dimensions -------------------------------------------

void criterion5() {
  begin();
  bool ok = true;
  for (uint32_t q : {3u, 5u}) {
    IrrepLabel sigma = size4_sigma_label(q);
    DepthZeroDatum plus{q, sigma, -1, 1}, minus{q, sigma, -1, 2};
    for (uint32_t j = 1; j <= 5; ++j) {
      uint64_t dp = invariant_dim(plus, MPFamily::K, j).total;
      uint64_t dm = invariant_dim(minus, MPFamily::K, j).total;
      uint32_t mp = (j - 1) / 2;  // j = 2m+1, 2m+2
      uint64_t expect_p = upow(q, 2 * mp + 1) - 1;
      uint64_t expect_m = j == 1 ? 0 : upow(q, 2 * (j / 2)) - 1;  // j = 2m, 2m+1
      ok &= dp == expect_p && dm == expect_m;
      if (j >= 2) ok &= dp + dm == uint64_t((q + 1) * upow(q, j - 1) - 2);  // sum rule
    }
  }
  {  // Iwahori-family formula (a_Pi + 2 q^j)/|L| for the depth-zero size-2 packet at q = 3
    DepthZeroDatum tau{3, IrrepLabel::make_cusp(3, 1), 0, 1};
    for (uint32_t j = 1; j <= 4; ++j) {
      uint64_t expect = (2 * upow(3, j) - 2) / 2;  // (a_Pi + 2 q^j)/|L|, a_Pi = -2
      ok &= invariant_dim(tau, MPFamily::I, j).total == expect;
      ok &= invariant_dim(tau, MPFamily::Ihalf, j).total == expect;
    }
  }
  report(5, "Mackey-sum invariant dimensions (Pi+/Pi- table, Iwahori formula)", ok,
         "q in {3,5}, j <= 5 congruence family; q = 3 Iwahori j <= 4");
}

// ----- 6: packet size trichotomy ------------------------------------------

std::vector<GL2ReplDescriptor> grammar(uint32_t q, uint32_t char_r) {
  std::vector<GL2ReplDescriptor> out;
  GL2ReplDescriptor base;
  base.q = q;
  base.char_r = char_r;
  {
    GL2ReplDescriptor d = base;
    d.variant = GL2ReplDescriptor::Variant::FiniteDimChar;
    out.push_back(d);
  }
  for (auto kind : {EtaParam::Kind::Trivial, EtaParam::Kind::Generic, EtaParam::Kind::Quadratic}) {
    if (kind == EtaParam::Kind::Quadratic && char_r == 2) continue;
    // parameters equal to q^(+-val) in R are not irreducible principal series
    if (kind == EtaParam::Kind::Trivial && char_r != 0 && (q - 1) % char_r == 0) continue;
    for (int ram = 0; ram <= (kind == EtaParam::Kind::Quadratic ? 1 : 0); ++ram) {
      if (kind == EtaParam::Kind::Quadratic && ram == 0 && char_r != 0 && (q + 1) % char_r == 0) continue;
      GL2ReplDescriptor d = base;
      d.variant = GL2ReplDescriptor::Variant::PrincipalSeries;
      d.eta.kind = kind;
      d.eta.quad_ramified = ram;
      out.push_back(d);
    }
  }
  if (char_r == 0 || (q + 1) % char_r != 0) {
    GL2ReplDescriptor d = base;
    d.variant = GL2ReplDescriptor::Variant::SteinbergTwist;
    out.push_back(d);
  }
  if (char_r != 0 && (q + 1) % char_r == 0) {
    GL2ReplDescriptor d = base;
    d.variant = GL2ReplDescriptor::Variant::Cusp0Twist;
    out.push_back(d);
  }
  for (const auto& l : valid_labels(q, char_r))
    if (l.kind == IrrepLabel::Kind::Cusp) {
      GL2ReplDescriptor d = base;
      d.variant = GL2ReplDescriptor::Variant::DepthZeroSC;
      d.sigma = l;
      out.push_back(d);
    }
  if (q != 2) {
    for (int ram = 0; ram <= 1; ++ram)
      for (int nr = 0; nr <= ram; ++nr) {
        GL2ReplDescriptor d = base;
        d.variant = GL2ReplDescriptor::Variant::PositiveLevelSC;
        d.ext_ramified = ram;
        d.ext_nonres = nr;
        d.twice_depth = ram ? 1 : 2;
        out.push_back(d);
      }
  } else if (char_r != 2) {
    auto E = QuadExt::unramified(2, 3);
    const auto& basis = E->unit_basis();
    std::vector<uint32_t> idx(basis.gens.size(), 0);
    for (;;) {
      std::vector<QZ> vals;
      for (size_t i = 0; i < idx.size(); ++i) vals.push_back(QZ::make(idx[i], basis.orders[i]));
      LocalCharacter xi(E, QZ{}, vals);
      bool regular = !xi.galois_conjugate().ratio(xi).is_trivial();
      bool valid_order = char_r == 0 || xi.order() % char_r != 0;
      if (regular && valid_order && xi.order_on_one_plus_p() > 1) {
        GL2ReplDescriptor d = base;
        d.variant = GL2ReplDescriptor::Variant::PositiveLevelSC;
        d.xi = xi;
        d.twice_depth = 2;
        out.push_back(d);
      }
      size_t i = 0;
      while (i < idx.size()) {
        idx[i] = (idx[i] + 1) % basis.orders[i];
        if (idx[i] != 0) break;
        ++i;
      }
      if (i == idx.size()) break;
    }
  }
  return out;
}

void criterion6() {
  begin();
  bool ok = true;
  uint32_t described = 0;
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    for (uint32_t c : {0u, 2u, 3u, 5u, 7u}) {
      if (c != 0 && q % c == 0) continue;
      for (const auto& d : grammar(q, c)) {
        PacketReport rep = packet_report(d);
        ++described;
        ok &= rep.size == 1 || rep.size == 2 || rep.size == 4;
        if (rep.size == 4) ok &= rep.cuspidal_class != "non-cuspidal";
        if (c != 2) {
          uint32_t member = rep.component_group == "1" ? 1 : rep.component_group == "Z/2" ? 2 : 4;
          ok &= member == rep.size;
        } else {
          ok &= rep.component_group == "1";
        }
      }
      if (q % 2 == 1 && c != 2) {
        // exactly one size-4 supercuspidal class (up to twist), depth zero
        std::set<IrrepLabel> seen;
        uint32_t classes = 0;
        for (const auto& l : valid_labels(q, c)) {
          if (l.kind != IrrepLabel::Kind::Cusp || seen.count(l)) continue;
          if (restriction_length(l, c) != 2) continue;
          ++classes;
          for (uint32_t t = 0; t < q - 1; ++t) seen.insert(l.twisted(t));
        }
        ok &= classes == 1;
      }
    }
  }
  report(6, "packet-size trichotomy over the descriptor grammar", ok,
         std::to_string(described) + " descriptors");
}

// ----- 7: Langlands-side oracle --------------------------------------------

void criterion7() {
  begin();
  bool ok = true;
  uint32_t size4 = 0, tame_checked = 0;
  {  // exhaustive tame characters of order <= 8 at p = 3
    auto E = QuadExt::unramified(3, 2);
    const auto& basis = E->unit_basis();
    std::vector<uint32_t> idx(basis.gens.size(), 0);
    for (;;) {
      std::vector<QZ> vals;
      for (size_t i = 0; i < idx.size(); ++i) vals.push_back(QZ::make(idx[i], basis.orders[i]));
      LocalCharacter chi(E, QZ{}, vals);
      if (chi.order_on_one_plus_p() == 1 && chi.order() <= 8) {
        LocalCharacter r = chi.galois_conjugate().ratio(chi);
        if (!r.is_trivial()) {
          ++tame_checked;
          XSigmaReport xs = x_sigma(chi);
          ok &= (xs.size == 4) == (r.order() == 2);
          if (xs.size == 4) ++size4;
        } else {
          bool threw = false;
          try {
            x_sigma(chi);
          } catch (const error& e) {
            threw = e.kind == errc::not_regular;
          }
          ok &= threw;
        }
      }
      size_t i = 0;
      while (i < idx.size()) {
        idx[i] = (idx[i] + 1) % basis.orders[i];
        if (idx[i] != 0) break;
        ++i;
      }
      if (i == idx.size()) break;
    }
    ok &= size4 > 0;
  }
  uint32_t crit_hits = 0, reg_total = 0;
  {  // mod_ell_sc_length criterion set at (p, q, ell) = (2, 2, 3), level 4
    auto E = QuadExt::unramified(2, 4);
    QuadExt::Elt b = E->unit_of_order(3);
    const auto& basis = E->unit_basis();
    std::vector<uint32_t> idx(basis.gens.size(), 0);
    for (;;) {
      std::vector<QZ> vals;
      for (size_t i = 0; i < idx.size(); ++i) vals.push_back(QZ::make(idx[i], basis.orders[i]));
      LocalCharacter chi(E, QZ{}, vals);
      LocalCharacter r = chi.galois_conjugate().ratio(chi);
      if (!r.is_trivial()) {
        ++reg_total;
        uint32_t len = mod_ell_sc_length(chi, 3);
        QZ xb = chi.value_on_unit(b);
        bool crit = r.order_on_one_plus_p() == 2 && !xb.is_zero() && xb.order() == 3;
        ok &= len == (crit ? 2u : 1u);
        if (len == 2) ++crit_hits;
      }
      size_t i = 0;
      while (i < idx.size()) {
        idx[i] = (idx[i] + 1) % basis.orders[i];
        if (idx[i] != 0) break;
        ++i;
      }
      if (i == idx.size()) break;
    }
    ok &= crit_hits > 0;
  }
  report(7, "x_sigma + mod-l supercuspidal length oracles", ok,
         std::to_string(tame_checked) + " tame chars (" + std::to_string(size4) + " of size 4); " +
             std::to_string(reg_total) + " level-4 chars (" + std::to_string(crit_hits) +
             " on the criterion set)");
}

// ----- 8: lattice lemmas -----------------------------------------------------

void criterion8() {
  begin();
  bool ok = true;
  for (uint32_t d = 1; d <= 5; ++d)
    for (uint32_t r = 0; r < d; ++r) {
      ok &= wh::lattice_exponent(d, r) == (uint64_t(1) << r);
      if (r > 0) ok &= wh::doubling_inclusion_check(d, r);
    }
  report(8, "germ-lattice exponents 2^r and doubling inclusions", ok, "all 0 <= r < d <= 5");
}

// ----- 9: germ identity ------------------------------------------------------

void criterion9() {
  begin();
  auto rep = germ_identity_check(3, MPFamily::I, 1, 4, GermTarget::IndB1);
  auto neg = germ_identity_check(3, MPFamily::I, 1, 4, GermTarget::DropOneMember);
  auto pair = germ_identity_check(3, MPFamily::I, 1, 4, GermTarget::MemberPair);
  // golden value recorded after the first derivation: b_0 = 2 from j = 1 on
  bool ok = rep.stabilized && rep.constant == 2 && rep.threshold == 1;
  ok &= !neg.stabilized;
  ok &= pair.stabilized && pair.constant == 0;
  std::string detail = "D(j) =";
  for (size_t i = 0; i < rep.diffs.size(); ++i) detail += " " + std::to_string(rep.diffs[i]);
  detail += " (golden b0 = 2); negative control non-constant";
  report(9, "germ identity stabilization + negative control", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) {
    std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 9 criteria PASS\n");
  return 0;
}
