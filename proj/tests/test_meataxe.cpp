#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "sl2p/meataxe.hpp"
#include "sl2p/polyfactor.hpp"
#include "sl2p/reps.hpp"

using namespace sl2p;

namespace {

std::vector<uint32_t> sorted_dims(const DecompositionReport& rep) {
  std::vector<uint32_t> dims;
  for (const auto& s : rep.series) dims.push_back(uint32_t(s.dim()));
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

TEST_CASE("decompose ind_B^G(1) at q=3") {
  const GLContext& ctx = GLContext::get(3);
  SUBCASE("over a char-0 prime: length 2, dims {1,3}") {
    MatRep ps = principal_series(ctx, ctx.coefficient_field(0), 0, 0);
    auto rep = decompose(ps, 1);
    CHECK(rep.length == 2);
    CHECK(sorted_dims(rep) == std::vector<uint32_t>{1, 3});
    CHECK(rep.semisimple);  // Maschke: 73 does not divide |GL2(F_3)|
  }
  SUBCASE("in characteristic 2: length 3, dims {1,1,2}") {
    MatRep ps = principal_series(ctx, ctx.coefficient_field(2), 0, 0);
    auto rep = decompose(ps, 1);
    CHECK(rep.length == 3);
    CHECK(sorted_dims(rep) == std::vector<uint32_t>{1, 1, 2});
    CHECK_FALSE(rep.semisimple);  // 1 -- sigma_0 -- 1, indecomposable
  }
}

TEST_CASE("restriction of cuspidals to SL2 at q=3") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  SUBCASE("theta of order 4 splits with dims {1,1}") {
    // theta(b) has order 2 exactly when theta has order 4 on F_9*
    MatRep c = construct(ctx, F, IrrepLabel::make_cusp(3, 2));
    auto rep = decompose(restrict_to_sl2(ctx, c), 1);
    CHECK(rep.length == 2);
    CHECK(sorted_dims(rep) == std::vector<uint32_t>{1, 1});
  }
  SUBCASE("theta of order 8 restricts irreducibly") {
    MatRep c = construct(ctx, F, IrrepLabel::make_cusp(3, 1));
    auto rep = decompose(restrict_to_sl2(ctx, c), 1);
    CHECK(rep.length == 1);
  }
}

TEST_CASE("hom_dim") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  SUBCASE("Schur: End of an irreducible over a splitting field is 1") {
    for (const auto& l : valid_labels(3, 0)) {
      MatRep r = construct(ctx, F, l);
      CHECK(hom_dim(r, r) == 1);
    }
  }
  SUBCASE("distinct irreducibles are disjoint") {
    MatRep a = construct(ctx, F, IrrepLabel::make_char(3, 0));
    MatRep b = construct(ctx, F, IrrepLabel::make_st_twist(3, 0));
    CHECK(hom_dim(a, b) == 0);
  }
  SUBCASE("Gelfand-Graev contains each cuspidal exactly once") {
    MatRep gg = gelfand_graev(ctx, F);
    for (const auto& l : valid_labels(3, 0))
      if (l.kind == IrrepLabel::Kind::Cusp) CHECK(hom_dim(gg, construct(ctx, F, l)) == 1);
  }
}

TEST_CASE("restriction_length closed forms") {
  SUBCASE("spec examples") {
    // Princ with (chi1/chi2)^2 = 1, p odd, char 0
    CHECK(restriction_length(IrrepLabel::make_princ(5, 0, 2), 0) == 2);
    CHECK(restriction_length(IrrepLabel::make_princ(5, 0, 1), 0) == 1);
    // char 2: everything restricts irreducibly except sigma_0 twists
    CHECK(restriction_length(IrrepLabel::make_char(3, 0), 2) == 1);
    CHECK(restriction_length(IrrepLabel::make_cusp0_twist(3, 0), 2) == 2);
    // Cusp with theta^2(b) = 1
    CHECK(restriction_length(IrrepLabel::make_cusp(3, 2), 0) == 2);
    CHECK(restriction_length(IrrepLabel::make_cusp(3, 1), 0) == 1);
    // at p = 2 everything is irreducible on restriction
    for (const auto& l : valid_labels(2, 0)) CHECK(restriction_length(l, 0) == 1);
    for (const auto& l : valid_labels(4, 0)) CHECK(restriction_length(l, 0) == 1);
  }
}

TEST_CASE("closed form equals measured length: q = 2 and 3, all characteristics") {
  for (uint32_t q : {2u, 3u}) {
    const GLContext& ctx = GLContext::get(q);
    for (uint32_t c : {0u, 2u, 3u, 5u, 7u}) {
      if (c != 0 && q % c == 0) continue;
      FieldPtr F = ctx.coefficient_field(c);
      for (const auto& l : valid_labels(q, c)) {
        MatRep r = construct(ctx, F, l);
        auto rep = decompose(restrict_to_sl2(ctx, r), 1);
        INFO(l.describe(), " char ", c);
        CHECK(rep.length == restriction_length(l, c));
        for (const auto& [cons, mult] : rep.constituents) CHECK(mult == 1);  // multiplicity-free
        CHECK(rep.semisimple);
      }
    }
  }
}

TEST_CASE("decompose is idempotent on its constituents") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(2);
  MatRep ps = principal_series(ctx, F, 0, 0);
  auto rep = decompose(ps, 1);
  for (const auto& [cons, mult] : rep.constituents) {
    (void)mult;
    auto again = decompose(cons, 2);
    CHECK(again.length == 1);
  }
}

TEST_CASE("decompose dimension cap raises resource-limit") {
  const GLContext& ctx = GLContext::get(2);
  MatRep fake(ctx.gl2, ctx.coefficient_field(0), kDecomposeDimCap + 1);
  CHECK_THROWS_AS(decompose(fake, 1), error);
}

TEST_CASE("restrictions isomorphic iff labels twist-related (q = 3)") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  auto labels = valid_labels(3, 0);
  std::vector<MatRep> res;
  for (const auto& l : labels) res.push_back(restrict_to_sl2(ctx, construct(ctx, F, l)));
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i; j < labels.size(); ++j) {
      bool twist_related = false;
      for (uint32_t t = 0; t < 2; ++t)
        if (labels[i].twisted(t) == labels[j]) twist_related = true;
      bool isomorphic_allowed = hom_dim(res[i], res[j]) > 0;
      INFO(labels[i].describe(), " vs ", labels[j].describe());
      CHECK(twist_related == isomorphic_allowed);
    }
}

TEST_CASE("gelfand-graev decomposition at q=3, char 0: all generic irreducibles once") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  auto rep = decompose(gelfand_graev(ctx, F), 3);
  CHECK(rep.length == 6);  // q(q-1) St-twists + PS + cuspidals: 2 + 1 + 3
  uint64_t total = 0;
  for (const auto& [cons, mult] : rep.constituents) {
    CHECK(mult == 1);
    total += cons.dim();
  }
  CHECK(total == 16);
}

TEST_CASE("polynomial factorization multiplies back") {
  std::mt19937_64 rng(23);
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 2}, {3, 2}, {7, 1}, {2, 4}}) {
    FieldPtr F = make_field(p, k);
    std::uniform_int_distribution<uint32_t> coeff(0, F->size() - 1);
    for (int t = 0; t < 25; ++t) {
      polyf::Poly f(2 + t % 9, 0);
      for (auto& c : f) c = coeff(rng);
      f.push_back(1);  // monic
      std::mt19937_64 seed(5);
      auto factors = polyf::factor(*F, f, seed);
      polyf::Poly prod{1};
      size_t degsum = 0;
      for (const auto& [irr, mult] : factors) {
        CHECK(irr.back() == 1);
        for (uint32_t m = 0; m < mult; ++m) prod = polyf::mul(*F, prod, irr);
        degsum += polyf::degree(irr) * mult;
        // irreducibility: no root splits off a smaller gcd structure for deg 2+
        if (polyf::degree(irr) >= 2)
          for (uint32_t x = 0; x < F->size(); ++x) CHECK(F->eval_poly(irr, x) != 0);
      }
      CHECK(degsum == polyf::degree(f));
      CHECK(prod == polyf::trim(f));
    }
  }
}

TEST_CASE("length-2 restrictions split into equal halves") {
  // the two components are conjugate, so they share a dimension
  for (uint32_t q : {3u, 5u}) {
    const GLContext& ctx = GLContext::get(q);
    FieldPtr F = ctx.coefficient_field(0);
    for (const auto& l : valid_labels(q, 0)) {
      if (restriction_length(l, 0) != 2) continue;
      auto rep = decompose(restrict_to_sl2(ctx, construct(ctx, F, l)), 1);
      REQUIRE(rep.length == 2);
      INFO(l.describe());
      CHECK(rep.series[0].dim() == rep.series[1].dim());
      CHECK(rep.series[0].dim() == l.dim() / 2);
    }
  }
}

TEST_CASE("decompose results are seed-independent up to isomorphism") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(2);
  MatRep gg = gelfand_graev(ctx, F);
  auto a = decompose(gg, 1);
  auto b = decompose(gg, 99);
  CHECK(a.length == b.length);
  REQUIRE(a.constituents.size() == b.constituents.size());
  for (const auto& [ca, ma] : a.constituents) {
    bool matched = false;
    for (const auto& [cb, mb] : b.constituents)
      if (ca.dim() == cb.dim() && ma == mb && hom_dim(ca, cb) > 0) matched = true;
    CHECK(matched);
  }
}
