#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sl2p/groups.hpp"
#include "sl2p/reps.hpp"

using namespace sl2p;

TEST_CASE("enumeration matches closed-form orders") {
  auto sl2_f3 = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::SL2);
  CHECK(sl2_f3->enumerate().size() == 24);
  auto gl2_f2 = GroupSpec::make(Ring::prime_field(2), GroupSpec::Kind::GL2);
  CHECK(gl2_f2->enumerate().size() == 6);
  auto sl2_z9 = GroupSpec::make(Ring::int_mod(3, 2), GroupSpec::Kind::SL2);
  CHECK(sl2_z9->enumerate().size() == 648);  // 3^3 * 24
  auto gl2_f4 = GroupSpec::make(Ring::ext_field(make_field(2, 2)), GroupSpec::Kind::GL2);
  CHECK(gl2_f4->enumerate().size() == 180);
  auto sl2_z8 = GroupSpec::make(Ring::int_mod(2, 3), GroupSpec::Kind::SL2);
  CHECK(sl2_z8->enumerate().size() == (8 * 8 * 8 / 4) * 3);  // 2^(3n-2)(p^2-1) = 2^7*3
}

TEST_CASE("parallel enumeration equals the serial reference") {
  for (auto g : {GroupSpec::make(Ring::int_mod(3, 3), GroupSpec::Kind::SL2),
                 GroupSpec::make(Ring::prime_field(5), GroupSpec::Kind::GL2),
                 GroupSpec::make(Ring::ext_field(make_field(2, 2)), GroupSpec::Kind::SL2)}) {
    CHECK(g->enumerate() == g->enumerate_serial_reference());
  }
}

TEST_CASE("enumeration is sorted and duplicate-free; group ops close") {
  auto g = GroupSpec::make(Ring::int_mod(3, 2), GroupSpec::Kind::SL2);
  const auto& v = g->enumerate();
  for (size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i] < v[i + 1]);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<size_t> pick(0, v.size() - 1);
  for (int t = 0; t < 200; ++t) {
    GElt x = g->unkey(v[pick(rng)]), y = g->unkey(v[pick(rng)]);
    GElt z = g->mul(x, y);
    CHECK(g->contains(z));
    CHECK(g->mul(z, g->inverse(y)) == x);
  }
}

TEST_CASE("generators reach the whole group") {
  for (auto g : {GroupSpec::make(Ring::prime_field(5), GroupSpec::Kind::SL2),
                 GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::GL2),
                 GroupSpec::make(Ring::int_mod(2, 3), GroupSpec::Kind::SL2),
                 GroupSpec::make(Ring::ext_field(make_field(2, 2)), GroupSpec::Kind::GL2)}) {
    std::vector<bool> seen(g->enumerate().size(), false);
    std::vector<size_t> stack{g->index_of(g->id())};
    seen[stack[0]] = true;
    size_t count = 0;
    auto gens = g->generators();
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      ++count;
      for (const auto& x : gens) {
        size_t j = g->index_of(g->mul(g->unkey(g->enumerate()[cur]), x));
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    CHECK(count == g->enumerate().size());
  }
}

TEST_CASE("conjugacy classes") {
  SUBCASE("GL2(F_3) has q^2-1 = 8 classes partitioning the group") {
    auto g = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::GL2);
    auto cls = g->conjugacy_classes();
    CHECK(cls.size() == 8);
    uint64_t total = 0;
    for (auto& c : cls) {
      CHECK(g->enumerate().size() % c.size == 0);  // class sizes divide |G|
      total += c.size;
    }
    CHECK(total == g->enumerate().size());
  }
  SUBCASE("SL2(F_2) = S_3 has 3 classes") {
    auto g = GroupSpec::make(Ring::prime_field(2), GroupSpec::Kind::SL2);
    CHECK(g->conjugacy_classes().size() == 3);
  }
  SUBCASE("l-regular classes count the irreducible representations mod l") {
    auto g = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::GL2);
    for (uint32_t ell : {2u, 5u, 7u}) {
      size_t regular = 0;
      for (auto& c : g->conjugacy_classes()) {
        uint32_t ord = 1;
        GElt x = c.rep;
        while (!(x == g->id())) {
          x = g->mul(x, c.rep);
          ++ord;
        }
        if (ord % ell != 0) ++regular;
      }
      INFO("ell = ", ell);
      CHECK(regular == valid_labels(3, ell).size());
    }
  }
}

TEST_CASE("subgroup handles: membership and closure agree") {
  auto g = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::GL2);
  for (auto name : {SubgroupHandle::Name::B, SubgroupHandle::Name::U, SubgroupHandle::Name::T,
                    SubgroupHandle::Name::Z, SubgroupHandle::Name::SL2, SubgroupHandle::Name::Uminus}) {
    SubgroupHandle h(g, name);
    CHECK(h.verify_consistent());
  }
  auto zg = GroupSpec::make(Ring::int_mod(3, 2), GroupSpec::Kind::SL2);
  for (auto name : {SubgroupHandle::Name::BorelSL2, SubgroupHandle::Name::IwahoriImage,
                    SubgroupHandle::Name::ProPIwahoriImage, SubgroupHandle::Name::CenterSL2}) {
    SubgroupHandle h(zg, name);
    CHECK(h.verify_consistent());
  }
  SubgroupHandle ck(zg, SubgroupHandle::Name::CongruenceKernel, 1);
  CHECK(ck.verify_consistent());
  CHECK(ck.elements().size() == 27);  // kernel of SL2(Z/9) -> SL2(Z/3)
}

TEST_CASE("subgroup membership is closed under product and inverse") {
  auto g = GroupSpec::make(Ring::prime_field(5), GroupSpec::Kind::GL2);
  SubgroupHandle b(g, SubgroupHandle::Name::B);
  auto els = b.elements();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
  for (int t = 0; t < 300; ++t) {
    GElt x = els[pick(rng)], y = els[pick(rng)];
    CHECK(b.contains(g->mul(x, y)));
    CHECK(b.contains(g->inverse(x)));
  }
}

TEST_CASE("double cosets") {
  SUBCASE("Bruhat: B'\\SL2(F_3)/B' has 2 cosets") {
    auto g = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::SL2);
    SubgroupHandle b(g, SubgroupHandle::Name::BorelSL2);
    auto dc = double_cosets(b, g, b);
    CHECK(dc.size() == 2);
    uint64_t total = 0;
    for (auto& c : dc) total += c.size;
    CHECK(total == g->enumerate().size());
  }
  SUBCASE("Iwasawa counts over Z/3 and Z/9") {
    auto g1 = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::SL2);
    SubgroupHandle b1(g1, SubgroupHandle::Name::BorelSL2);
    SubgroupHandle t1(g1, SubgroupHandle::Name::Trivial);
    CHECK(double_cosets(b1, g1, t1).size() == 4);  // (q+1) q^0

    auto g2 = GroupSpec::make(Ring::int_mod(3, 2), GroupSpec::Kind::SL2);
    SubgroupHandle b2(g2, SubgroupHandle::Name::BorelSL2);
    SubgroupHandle t2(g2, SubgroupHandle::Name::Trivial);
    CHECK(double_cosets(b2, g2, t2).size() == 12);  // (q+1) q
  }
  SUBCASE("representatives are canonical-minimal") {
    auto g = GroupSpec::make(Ring::prime_field(3), GroupSpec::Kind::SL2);
    SubgroupHandle b(g, SubgroupHandle::Name::BorelSL2);
    auto dc = double_cosets(b, g, b);
    CHECK(dc[0].rep == g->unkey(g->enumerate()[0]));
  }
}

TEST_CASE("det-solved SL2 enumeration agrees with the quadruple-loop filter") {
  auto g = GroupSpec::make(Ring::int_mod(3, 2), GroupSpec::Kind::SL2);
  const Ring& R = g->ring();
  std::vector<uint64_t> brute;
  for (uint32_t a = 0; a < 9; ++a)
    for (uint32_t b = 0; b < 9; ++b)
      for (uint32_t c = 0; c < 9; ++c)
        for (uint32_t d = 0; d < 9; ++d)
          if (R.sub(R.mul(a, d), R.mul(b, c)) == 1) brute.push_back(g->key({a, b, c, d}));
  CHECK(brute == g->enumerate());
}

TEST_CASE("enumeration cap raises resource-limit") {
  auto g = GroupSpec::make(Ring::int_mod(5, 4), GroupSpec::Kind::SL2);  // 5^10 * 24 elements
  CHECK_THROWS_AS(g->enumerate(), error);
}
