#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sl2p/meataxe.hpp"
#include "sl2p/reps.hpp"
#include "sl2p/sylvester.hpp"

using namespace sl2p;

TEST_CASE("labels") {
  CHECK(valid_labels(3, 0).size() == 8);  // q^2 - 1
  CHECK(valid_labels(5, 0).size() == 24);
  CHECK(IrrepLabel::make_princ(3, 1, 0) == IrrepLabel::make_princ(3, 0, 1));  // sorted
  CHECK(IrrepLabel::make_cusp(3, 6) == IrrepLabel::make_cusp(3, 2));          // theta vs theta^q
  CHECK_THROWS_AS(IrrepLabel::make_princ(3, 1, 1), error);
  CHECK_THROWS_AS(IrrepLabel::make_cusp(3, 4), error);  // theta = theta^q (4*3 = 12 = 4 mod 8)
  CHECK(IrrepLabel::make_char(5, 0).dim() == 1);
  CHECK(IrrepLabel::make_st_twist(5, 1).dim() == 5);
  CHECK(IrrepLabel::make_princ(5, 0, 1).dim() == 6);
  CHECK(IrrepLabel::make_cusp(5, 1).dim() == 4);
}

TEST_CASE("labels over positive characteristic") {
  // char 2, q = 3: only the trivial character survives; St is gone (2 | q+1),
  // Cusp0 twists appear, no Cusp labels (odd-order theta on F_9* is trivial)
  auto l2 = valid_labels(3, 2);
  REQUIRE(l2.size() == 2);
  CHECK(l2[0].kind == IrrepLabel::Kind::Char);
  CHECK(l2[1].kind == IrrepLabel::Kind::Cusp0Twist);
  for (const auto& l : valid_labels(5, 3)) {
    if (l.kind == IrrepLabel::Kind::Princ) {
      CHECK(char_order(l.chi1, 4) % 3 != 0);
      CHECK(char_order(l.chi2, 4) % 3 != 0);
    }
  }
}

TEST_CASE("principal series") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  SUBCASE("PS(1,1) at q=3 is 4-dimensional and contains the trivial sub") {
    MatRep ps = principal_series(ctx, F, 0, 0);
    CHECK(ps.dim() == 4);
    CHECK(ps.check_multiplicative(200, 9));
    Mat stacked(F, 0, 4);
    bool first = true;
    for (const auto& g : ctx.gl2->generators()) {
      Mat d = ps.at(g) - Mat::identity(F, 4);
      stacked = first ? d : Mat::vstack(stacked, d);
      first = false;
    }
    Mat fix = stacked.kernel_basis();
    REQUIRE(fix.rows() == 1);
    for (size_t j = 1; j < 4; ++j) CHECK(fix.at(0, j) == fix.at(0, 0));
  }
  SUBCASE("U-fixed vectors of PS(1,1) at q=3: two U-orbits on B\\G") {
    MatRep ps = principal_series(ctx, F, 0, 0);
    SubgroupHandle U(ctx.gl2, SubgroupHandle::Name::U);
    CHECK(fixed_vectors_checked(ps, U) == 2);
  }
}

TEST_CASE("gelfand-graev dimensions") {
  {
    const GLContext& c2 = GLContext::get(2);
    MatRep gg = gelfand_graev(c2, c2.coefficient_field(0));  // psi takes values -1, +1
    CHECK(gg.dim() == 3);                                    // |GL2(F_2)| / 2
  }
  {
    const GLContext& c3 = GLContext::get(3);
    FieldPtr F7 = make_field(7, 1);  // 7 = 1 mod 3: cube roots of unity
    MatRep gg = gelfand_graev(c3, F7);
    CHECK(gg.dim() == 16);
    CHECK(gg.check_multiplicative(200, 5));
    SubgroupHandle U(c3.gl2, SubgroupHandle::Name::U);
    CHECK(fixed_vectors_checked(gg, U) == 4);  // (q-1)^2, by the projector oracle
  }
  {
    const GLContext& c3 = GLContext::get(3);
    CHECK_THROWS_AS(gelfand_graev(c3, make_field(2, 1)), error);  // no cube roots in F_2
  }
}

TEST_CASE("construct") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);  // F_73
  SUBCASE("trivial character") {
    MatRep r = construct(ctx, F, IrrepLabel::make_char(3, 0));
    CHECK(r.dim() == 1);
    for (uint64_t k : ctx.gl2->enumerate()) CHECK(r.at(ctx.gl2->unkey(k)).at(0, 0) == 1);
  }
  SUBCASE("Steinberg at q=3 is 3-dimensional, no invariants") {
    MatRep st = construct(ctx, F, IrrepLabel::make_st_twist(3, 0));
    CHECK(st.dim() == 3);
    CHECK(st.check_multiplicative(200, 4));
    SubgroupHandle sl2(ctx.gl2, SubgroupHandle::Name::SL2);
    CHECK(fixed_vectors(st, sl2) == 0);
  }
  SUBCASE("Cusp(theta) of order 8 at q=3 is 2-dimensional, cuspidal") {
    MatRep c = construct(ctx, F, IrrepLabel::make_cusp(3, 1));
    CHECK(c.dim() == 2);
    SubgroupHandle U(ctx.gl2, SubgroupHandle::Name::U);
    CHECK(fixed_vectors(c, U) == 0);
    CHECK(c.label == IrrepLabel::make_cusp(3, 1));
  }
  SUBCASE("dimensions match the classification table") {
    for (const auto& l : valid_labels(3, 0)) CHECK(construct(ctx, F, l).dim() == l.dim());
  }
}

TEST_CASE("restrict_to_sl2") {
  const GLContext& ctx = GLContext::get(2);
  FieldPtr F = ctx.coefficient_field(0);
  MatRep ps = principal_series(ctx, F, 0, 0);
  MatRep res = restrict_to_sl2(ctx, ps);
  CHECK(res.dim() == 3);
  CHECK(res.group()->enumerate().size() == 6);
  CHECK(res.check_multiplicative(100, 2));
}

TEST_CASE("fixed vectors of the trivial representation") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  MatRep r = construct(ctx, F, IrrepLabel::make_char(3, 0));
  SubgroupHandle U(ctx.gl2, SubgroupHandle::Name::U);
  CHECK(fixed_vectors_checked(r, U) == 1);
}

TEST_CASE("twist compatibility: construct(twisted label) = twist of construct") {
  const GLContext& ctx = GLContext::get(3);
  FieldPtr F = ctx.coefficient_field(0);
  MultCharacter chi(ctx.k, F, 1);
  for (const auto& l : valid_labels(3, 0)) {
    MatRep a = construct(ctx, F, l.twisted(1));
    MatRep b = construct(ctx, F, l).twisted_by_det(chi);
    CHECK(hom_dim(a, b) >= 1);
  }
}

TEST_CASE("extension-field context q = 4: cuspidality across the label table") {
  const GLContext& ctx = GLContext::get(4);
  CHECK(ctx.p == 2);
  CHECK(ctx.deg == 2);
  CHECK(ctx.gl2->conjugacy_classes().size() == 15);  // q^2 - 1
  FieldPtr F = ctx.coefficient_field(0);             // F_31
  SubgroupHandle U(ctx.gl2, SubgroupHandle::Name::U);
  for (const auto& l : valid_labels(4, 0)) {
    MatRep r = construct(ctx, F, l);
    size_t fixed = fixed_vectors(r, U);
    INFO(l.describe());
    if (l.kind == IrrepLabel::Kind::Cusp)
      CHECK(fixed == 0);  // cuspidal: no U-fixed vectors
    else
      CHECK(fixed > 0);
  }
}
