#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "groupdet/aut_analysis.hpp"
#include "groupdet/catalog.hpp"
#include "groupdet/determinant.hpp"
#include "groupdet/error.hpp"
#include "groupdet/homs.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

GroupPtr g(const char* s) { return build_group(s); }

const std::vector<const char*> kSmall = {"C1", "C2", "C3", "C4", "E2^2", "C5", "C6", "S3", "C8", "C2 x C4", "D8", "Q8", "A4"};

// Inverse of an automorphism computed on the product table, then decomposed.
EndoMatrix brute_inverse(const ProductGroup& p, const EndoMatrix& m) {
  auto inv = oracle::inverse(recompose(p, m).values());
  REQUIRE_FALSE(inv.empty());
  return decompose(p, GroupMap(p.product, p.product, inv));
}

}  // namespace

TEST_CASE("aut vs A on the standard examples") {
  auto s3c4 = compare_aut_vs_A(g("S3"), g("C4"));
  CHECK(s3c4.equal());
  CHECK(s3c4.aut_order == 24);
  CHECK(s3c4.a_order == 24);

  auto c2c2 = compare_aut_vs_A(g("C2"), g("C2"));
  // (1, 1; 1, 1) lies in A and kills (1, 1).
  CHECK_FALSE(c2c2.a_subset_aut);
  CHECK_FALSE(c2c2.aut_subset_a);
  CHECK(c2c2.a_order == 4);
  CHECK(c2c2.aut_order == 6);
  REQUIRE_FALSE(c2c2.aut_not_in_a.empty());
  CHECK_FALSE(in_A(c2c2.aut_not_in_a.front()));

  auto c3c4 = compare_aut_vs_A(g("C3"), g("C4"));
  CHECK(c3c4.equal());
  CHECK(c3c4.aut_order == 4);

  EnumLimits small;
  small.max_product_order = 10;
  CHECK_THROWS_AS(compare_aut_vs_A(g("S3"), g("C4"), small), ResourceError);
}

TEST_CASE("aut vs A agrees with the common factor structure") {
  for (const char* h : kSmall)
    for (const char* k : kSmall) {
      CAPTURE(std::string(h));
      CAPTURE(std::string(k));
      auto gh = g(h), gk = g(k);
      if (gh->order() * gk->order() > 32) continue;
      auto r = compare_aut_vs_A(gh, gk);
      bool shared = common_nontrivial_factor(gh, gk).has_value();
      CHECK(r.aut_subset_a == !shared);
      if (!shared) {
        CHECK(r.equal());
        CHECK(r.aut_order == r.a_order);
      }
      if (gh->order() * gk->order() <= 16)
        CHECK(r.aut_order == oracle::autos(*FiniteGroup::direct_product({gh, gk})).size());
    }
}

TEST_CASE("central automorphisms") {
  for (const char* s : {"C4", "E2^2", "C2 x C4", "C6"}) {
    auto grp = g(s);
    CHECK(central_aut_group(grp).size() == enumerate_autos(grp).size());
  }
  auto s3 = central_aut_group(g("S3"));
  REQUIRE(s3.size() == 1);
  CHECK(s3.front() == GroupMap::identity(g("S3")));
  // Inner automorphisms of D8 act trivially modulo the center.
  auto d8 = central_aut_group(g("D8"));
  CHECK(d8.size() == 4);

  auto r = compare_autc_vs_Z(g("S3"), g("C4"));
  CHECK(r.equal());
  CHECK(r.aut_order == 4);
  CHECK(r.a_order == 4);

  for (const char* h : {"C2", "S3", "Q8", "C4"})
    for (const char* k : {"C3", "C4", "S3", "D8"}) {
      CAPTURE(std::string(h));
      CAPTURE(std::string(k));
      auto cmp = compare_autc_vs_Z(g(h), g(k));
      if (!common_nontrivial_factor(g(h), g(k))) CHECK(cmp.equal());
    }
}

TEST_CASE("stem semidirect structure") {
  auto r = verify_stem_semidirect(g("S3"), g("Q8"));
  CHECK(r.holds());
  CHECK(r.group_order == 6 * 24 * 2);
  CHECK(r.n_order == 2);
  CHECK(r.d_order == 6 * 24);
  CHECK(verify_stem_semidirect(g("S3"), g("D8")).holds());
  CHECK_THROWS_AS(verify_stem_semidirect(g("S3"), g("C4")), PreconditionError);
  CHECK_THROWS_AS(verify_stem_semidirect(g("Q8"), g("C2")), PreconditionError);
  CHECK_THROWS_AS(verify_stem_semidirect(g("Q8"), g("Q8")), PreconditionError);
}

TEST_CASE("q8 non-commuting witness") {
  auto w = q8_noncommuting_witness();
  CHECK_FALSE(w.ul == w.lu);
  CHECK(in_A(w.u));
  CHECK(in_A(w.l));
  auto p = ProductGroup::of(w.u.factors());
  CHECK(oracle::is_bijective(recompose(p, w.ul).values(), 16));
  CHECK(oracle::is_bijective(recompose(p, w.lu).values(), 16));
  CHECK_FALSE(recompose(p, w.ul) == recompose(p, w.lu));
}

TEST_CASE("inverse relations and normality for small automorphism groups") {
  for (const char* h : kSmall)
    for (const char* k : kSmall) {
      auto gh = g(h), gk = g(k);
      if (gh->order() * gk->order() > 24) continue;
      CAPTURE(std::string(h));
      CAPTURE(std::string(k));
      auto p = ProductGroup::of({gh, gk});
      std::size_t failures = 0;
      for_each_aut_matrix(p, [&](const EndoMatrix& m) {
        auto inv = brute_inverse(p, m);
        for (bool b : check_cases(m, inv))
          if (!b) ++failures;
        auto norm = check_norm(m, inv);
        if (!norm.images_all()) ++failures;
        // With both factors abelian every endomorphism is normal.
        if (gh->is_abelian() && gk->is_abelian() && !norm.all()) ++failures;
        if (norm.h_side[0] != oracle::is_normal_endo(*gh, m.alpha().values())) ++failures;
        if (norm.k_side[0] != oracle::is_normal_endo(*gk, m.delta().values())) ++failures;
        return true;
      });
      CHECK(failures == 0);
    }
}

TEST_CASE("automorphisms need not be normal endomorphisms") {
  auto s3 = g("S3");
  auto c1 = g("C1");
  auto p = ProductGroup::of({s3, c1});
  std::size_t non_normal = 0, total = 0;
  for_each_aut_matrix(p, [&](const EndoMatrix& m) {
    ++total;
    auto norm = check_norm(m, brute_inverse(p, m));
    CHECK(norm.images_all());
    if (!norm.h_side[0]) ++non_normal;
    return true;
  });
  // Only the identity commutes with every inner automorphism of S3.
  CHECK(total == 6);
  CHECK(non_normal == 5);
}

TEST_CASE("common factor witness is an automorphism outside A") {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"C2", "C2"}, {"C2", "E2^2"}, {"C2", "C6"}, {"S3", "S3"}, {"C3", "C6"}, {"Q8", "Q8 x C2"}, {"S3 x C2", "S3"}};
  for (auto [h, k] : pairs) {
    CAPTURE(std::string(h));
    CAPTURE(std::string(k));
    auto gh = g(h), gk = g(k);
    auto cf = common_nontrivial_factor(gh, gk);
    REQUIRE(cf);
    auto m = common_factor_automorphism(gh, gk, *cf);
    auto p = ProductGroup::of({gh, gk});
    auto f = recompose(p, m);
    CHECK(oracle::is_hom(*p.product, *p.product, f.values()));
    CHECK(oracle::is_bijective(f.values(), p.product->order()));
    CHECK_FALSE(in_A(m));
    CHECK(decompose(p, f) == m);
  }
  CHECK_FALSE(common_nontrivial_factor(g("S3"), g("C4")));
}
