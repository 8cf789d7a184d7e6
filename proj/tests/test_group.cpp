#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "groupdet/catalog.hpp"
#include "groupdet/error.hpp"
#include "groupdet/structure.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

const std::vector<std::string> kSmallCatalog = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10",
                                                "C12", "S3", "D8", "D10", "D12", "Q8", "E2^2", "E3^2",
                                                "E2^3", "C2 x C4", "C2 x C6", "S3 x C2", "S4", "Q8 x C3", "A4", "Dic12", "Dic16"};

}  // namespace

TEST_CASE("catalog groups have the expected orders") {
  CHECK(build_group("C4")->order() == 4);
  CHECK(build_group("S3 x C4")->order() == 24);
  CHECK(build_group("Q8")->order() == 8);
  CHECK(build_group("D6")->order() == 6);
  CHECK(build_group("E2^3")->order() == 8);
  CHECK(build_group("S4")->order() == 24);
  CHECK(build_group("C1")->order() == 1);
  CHECK(build_group("A4")->order() == 12);
  CHECK(build_group("Dic12")->order() == 12);
  CHECK_FALSE(build_group("Dic12")->is_abelian());
  CHECK(center(build_group("A4")).is_trivial());
  CHECK(center(build_group("Dic12")).order() == 2);
  CHECK(are_isomorphic(build_group("Dic8"), build_group("Q8")));
  CHECK_FALSE(are_isomorphic(build_group("Dic12"), build_group("D12")));
  CHECK_THROWS_AS(build_group("Dic10"), ParseError);
}

TEST_CASE("catalog tables pass the oracle axioms") {
  for (const auto& spec : kSmallCatalog) {
    CAPTURE(spec);
    auto g = build_group(spec);
    CHECK(oracle::is_associative(*g));
    for (Elem x = 0; x < g->order(); ++x) {
      CHECK(g->mul(g->identity(), x) == x);
      CHECK(g->mul(g->inv(x), x) == g->identity());
    }
  }
}

TEST_CASE("random triples associate on larger groups") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"S5", "D16 x C3", "Q8 x S3"}) {
    auto g = build_group(spec);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g->order() - 1));
    for (int i = 0; i < 2000; ++i) {
      Elem x = pick(rng), y = pick(rng), z = pick(rng);
      CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
    }
  }
}

TEST_CASE("products record their factorization") {
  auto g = build_group("S3 x C4");
  REQUIRE(g->is_product());
  CHECK(g->factors().size() == 2);
  CHECK(g->spec() == "S3 x C4");
  for (Elem x = 0; x < g->order(); ++x) CHECK(g->encode(g->decode(x)) == x);
  // Injected elements of different factors commute.
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(g->mul(g->embed(0, a), g->embed(1, b)) == g->mul(g->embed(1, b), g->embed(0, a)));
}

TEST_CASE("nested products encode like flat ones") {
  auto nested = FiniteGroup::direct_product({build_group("C2 x C3"), build_group("C4")});
  auto flat = build_group("C2 x C3 x C4");
  CHECK(same_group(nested, flat));
}

TEST_CASE("center and derived subgroup match the oracle") {
  for (const auto& spec : kSmallCatalog) {
    CAPTURE(spec);
    auto g = build_group(spec);
    CHECK(center(g).elements() == oracle::center(*g));
    CHECK(derived_subgroup(g).elements() == oracle::derived(*g));
    CHECK(center(g).is_normal());
    CHECK(derived_subgroup(g).is_normal());
  }
  CHECK(center(build_group("S3")).is_trivial());
  CHECK(center(build_group("C4")).is_whole());
  CHECK(center(build_group("Q8")).order() == 2);
  CHECK(derived_subgroup(build_group("S3")).order() == 3);
  CHECK(derived_subgroup(build_group("Q8")) == center(build_group("Q8")));
  CHECK(derived_subgroup(build_group("C12")).is_trivial());
}

TEST_CASE("stem groups") {
  CHECK(is_stem(build_group("S3")));
  CHECK(is_stem(build_group("Q8")));
  CHECK_FALSE(is_stem(build_group("C4")));
  CHECK(is_stem(build_group("C1")));
  CHECK_FALSE(is_stem(build_group("D8 x C2")));
}

TEST_CASE("direct factorizations") {
  auto c6 = build_group("C6");
  auto f6 = direct_factorizations(c6);
  bool has_23 = false;
  for (const auto& f : f6) has_23 = has_23 || (f.left.order() == 2 && f.right.order() == 3);
  CHECK(has_23);

  auto s3 = direct_factorizations(build_group("S3"));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].left.is_trivial());
  CHECK(s3[0].right.is_whole());

  auto v4 = direct_factorizations(build_group("E2^2"));
  CHECK(v4.size() == 4);  // the trivial one and three nontrivial ones

  for (const auto& spec : kSmallCatalog) {
    auto g = build_group(spec);
    for (const auto& f : direct_factorizations(g)) {
      CHECK(f.left.order() * f.right.order() == g->order());
      CHECK(f.left.is_normal());
      CHECK(f.right.is_normal());
      for (Elem a : f.left.elements()) {
        CHECK((a == g->identity() || !f.right.contains(a)));
        for (Elem b : f.right.elements()) CHECK(g->mul(a, b) == g->mul(b, a));
      }
    }
  }
}

TEST_CASE("normal subgroups of S4 and E2^3") {
  CHECK(normal_subgroups(build_group("S4")).size() == 4);
  CHECK(normal_subgroups(build_group("E2^3")).size() == 16);
  CHECK(normal_subgroups(build_group("Q8")).size() == 6);
}

TEST_CASE("isomorphism search") {
  auto c4 = build_group("C4");
  auto iso = are_isomorphic(c4, build_group("C4"));
  REQUIRE(iso);
  CHECK(*iso == GroupMap::identity(c4));
  CHECK_FALSE(are_isomorphic(c4, build_group("E2^2")));
  auto d6 = build_group("D6");
  auto s3 = build_group("S3");
  auto phi = are_isomorphic(d6, s3);
  REQUIRE(phi);
  CHECK(oracle::is_hom(*d6, *s3, phi->values()));
  CHECK(oracle::is_bijective(phi->values(), 6));
  CHECK(are_isomorphic(build_group("C2 x C3"), build_group("C6")));
  CHECK_FALSE(are_isomorphic(build_group("D8"), build_group("Q8")));
}

TEST_CASE("isomorphism is symmetric over small catalog pairs") {
  std::vector<GroupPtr> gs;
  for (const char* s : {"C4", "E2^2", "C6", "S3", "D6", "C2 x C3", "D8", "Q8", "C8", "C2 x C4", "E2^3",
                        "C12", "D12", "S3 x C2", "C2 x C6", "Q8 x C3", "S4", "C24", "D24", "C2 x C12"})
    gs.push_back(build_group(s));
  for (const auto& a : gs)
    for (const auto& b : gs) CHECK(are_isomorphic(a, b).has_value() == are_isomorphic(b, a).has_value());
  CHECK(are_isomorphic(build_group("D12"), build_group("S3 x C2")));
}

TEST_CASE("common nontrivial factor") {
  auto w = common_nontrivial_factor(build_group("C2 x C3"), build_group("C2"));
  REQUIRE(w);
  CHECK(w->h_factor.order() == 2);
  CHECK(w->k_factor.is_whole());
  CHECK_FALSE(common_nontrivial_factor(build_group("S3"), build_group("C4")));
  auto s3 = build_group("S3");
  auto same = common_nontrivial_factor(s3, s3);
  REQUIRE(same);
  CHECK(same->h_factor.is_whole());
  CHECK(same->iso == Subgroup::whole(s3).elements());
  CHECK_FALSE(common_nontrivial_factor(build_group("C2"), build_group("C4")));
  CHECK(common_nontrivial_factor(build_group("D12"), build_group("C6")));
  CHECK_FALSE(common_central_factor(build_group("S3 x C3"), build_group("S3")));
  CHECK(common_central_factor(build_group("S3 x C3"), build_group("C3")));
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 2}), ValidationError);
  // A Latin square with identity 0 that is not associative.
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    FiniteGroup::from_table(loop);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.has_triple());
    auto t = e.triple();
    auto mul = [&](Elem a, Elem b) { return loop[a * 5 + b]; };
    CHECK(mul(mul(t[0], t[1]), t[2]) != mul(t[0], mul(t[1], t[2])));
  }
}

TEST_CASE("expression parsing") {
  CHECK_THROWS_AS(build_group("C"), ParseError);
  CHECK_THROWS_AS(build_group("X4"), ParseError);
  CHECK_THROWS_AS(build_group("C4 x"), ParseError);
  CHECK_THROWS_AS(build_group("D5"), ParseError);
  CHECK_THROWS_AS(build_group("E4^2"), ParseError);
  CHECK(build_group("C2xC4")->order() == 8);
  CHECK(build_group("  E3^2 x Q8 ")->order() == 72);
}

TEST_CASE("table files") {
  const char* path = "test_group_c3.tbl";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\nlabels: e a b\n";
  }
  auto g = build_group(std::string("@") + path + " x C2");
  CHECK(g->order() == 6);
  CHECK(g->factors()[0]->label(1) == "a");
  CHECK(are_isomorphic(g, build_group("C6")));
  {
    std::ofstream out(path);
    out << "2\n0 1\n1 1\n";
  }
  CHECK_THROWS_AS(build_group(std::string("@") + path), ValidationError);
  std::remove(path);
  CHECK_THROWS_AS(build_group("@/nonexistent/file"), ParseError);
}
