#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groupdet/catalog.hpp"
#include "groupdet/endo_matrix.hpp"
#include "groupdet/error.hpp"
#include "groupdet/structure.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

std::vector<Elem> oracle_values(const EndoMatrix& m) {
  std::vector<const FiniteGroup*> fs;
  for (const auto& f : m.factors()) fs.push_back(f.get());
  std::vector<std::vector<Elem>> es;
  for (const auto& e : m.entries()) es.push_back(e.values());
  return oracle::matrix_map(fs, es);
}

GroupMap s3_sign_into_c4(const GroupPtr& s3, const GroupPtr& c4) {
  std::vector<Elem> v(6);
  for (Elem x = 0; x < 6; ++x) v[x] = s3->element_order(x) == 2 ? 2 : 0;
  return GroupMap(s3, c4, v);
}

}  // namespace

TEST_CASE("identity decomposes to the identity matrix") {
  for (const char* h : {"C2", "S3", "Q8"})
    for (const char* k : {"C3", "C4", "D8"}) {
      auto p = ProductGroup::of({build_group(h), build_group(k)});
      auto m = decompose(p, GroupMap::identity(p.product));
      CHECK(m == EndoMatrix::identity(p.factors));
      CHECK(recompose(p, m) == GroupMap::identity(p.product));
    }
}

TEST_CASE("swap of S3 x S3") {
  auto s3 = build_group("S3");
  auto p = ProductGroup::of({s3, s3});
  std::vector<Elem> v(36);
  for (Elem x = 0; x < 36; ++x) {
    auto c = p.product->decode(x);
    v[x] = p.product->encode(std::vector<Elem>{c[1], c[0]});
  }
  auto m = decompose(p, GroupMap(p.product, p.product, v));
  CHECK(m.alpha().is_zero());
  CHECK(m.delta().is_zero());
  CHECK(m.beta() == GroupMap::identity(s3));
  CHECK(m.gamma() == GroupMap::identity(s3));
  CHECK_FALSE(in_A(m));
}

TEST_CASE("round trip over Aut(C2 x C4)") {
  auto p = ProductGroup::of({build_group("C2"), build_group("C4")});
  auto autos = enumerate_autos(p.product);
  CHECK(autos.size() == 8);
  for (const auto& phi : autos) {
    auto m = decompose(p, phi);
    CHECK(recompose(p, m) == phi);
    CHECK(oracle_values(m) == phi.values());
  }
}

TEST_CASE("matrix of S3 x C4 with a sign entry is an automorphism") {
  auto s3 = build_group("S3"), c4 = build_group("C4");
  auto m = EndoMatrix::two_by_two(GroupMap::identity(s3), GroupMap::zero(c4, s3), s3_sign_into_c4(s3, c4),
                                  GroupMap::identity(c4));
  auto phi = recompose(m);
  CHECK(oracle::is_bijective(phi.values(), 24));
  CHECK(oracle::is_hom(*phi.domain(), *phi.domain(), phi.values()));
  CHECK(in_A(m));
}

TEST_CASE("M-condition is enforced") {
  auto s3 = build_group("S3");
  auto id = GroupMap::identity(s3);
  CHECK_THROWS_AS(EndoMatrix::two_by_two(id, id, id, id), StructuralError);
  auto c2 = build_group("C2"), c3 = build_group("C3");
  CHECK_THROWS_AS(EndoMatrix({c2, c3}, {GroupMap::identity(c2)}), StructuralError);
  GroupMap not_hom(c3, c3, {0, 1, 1});
  CHECK_THROWS_AS(EndoMatrix::two_by_two(GroupMap::identity(c2), GroupMap::zero(c3, c2), GroupMap::zero(c2, c3),
                                         not_hom),
                  StructuralError);
}

TEST_CASE("multiplication matches composition") {
  std::mt19937_64 rng(3);
  for (auto [h, k] : std::vector<std::pair<const char*, const char*>>{{"S3", "C4"}, {"C2", "C4"}, {"Q8", "C2"},
                                                                       {"S3", "S3"}, {"D8", "C3"}}) {
    auto p = ProductGroup::of({build_group(h), build_group(k)});
    MSpace space(p.factors);
    for (int i = 0; i < 40; ++i) {
      auto a = space.sample(rng), b = space.sample(rng);
      auto ab = matrix_multiply(a, b);
      CHECK(recompose(p, ab) == compose(recompose(p, a), recompose(p, b)));
      CHECK(oracle_values(ab) == compose(recompose(p, a), recompose(p, b)).values());
    }
  }
}

TEST_CASE("M space size equals the number of endomorphisms") {
  for (auto [h, k] : std::vector<std::pair<const char*, const char*>>{
           {"C2", "C2"}, {"C2", "C4"}, {"S3", "C2"}, {"S3", "S3"}, {"Q8", "C2"}, {"C3", "C3"}, {"D8", "C2"}}) {
    CAPTURE(h);
    CAPTURE(k);
    auto p = ProductGroup::of({build_group(h), build_group(k)});
    MSpace space(p.factors);
    auto endos = enumerate_endos(p.product);
    CHECK(space.size() == endos.size());
    std::size_t seen = 0;
    space.for_each([&](const EndoMatrix& m) {
      ++seen;
      CHECK(oracle::is_hom(*p.product, *p.product, recompose(p, m).values()));
      return true;
    });
    CHECK(seen == endos.size());
  }
  MSpace three({build_group("C2"), build_group("C2"), build_group("C3")});
  CHECK(three.size() == enumerate_endos(build_group("C2 x C2 x C3")).size());
}

TEST_CASE("A and Z membership") {
  auto c2 = build_group("C2"), c4 = build_group("C4");
  CHECK(enumerate_A({c2, c4}).size() == 8);
  CHECK(enumerate_Z({c2, c4}).size() == 8);
  for (const auto& m : enumerate_A({c2, c4})) CHECK(in_Z(m));
  CHECK(enumerate_A({c2, c2}).size() == 4);
  CHECK(enumerate_autos(build_group("C2 x C2")).size() == 6);

  auto s3 = build_group("S3");
  std::vector<Elem> c(6);
  for (Elem x = 0; x < 6; ++x) c[x] = s3->conj(x, 1);
  auto m = EndoMatrix::diagonal({GroupMap(s3, s3, c), GroupMap::identity(c4)});
  CHECK(in_A(m));
  CHECK_FALSE(in_Z(m));
  CHECK(enumerate_A({s3, c4}).size() == 6 * 2 * 2);
  CHECK(enumerate_Z({s3, c4}).size() == 2 * 2);
}

TEST_CASE("Aut(S3 x C4) is exactly A") {
  auto s3 = build_group("S3"), c4 = build_group("C4");
  auto p = ProductGroup::of({s3, c4});
  auto auts = enumerate_aut_matrices(p);
  CHECK(auts.size() == 24);
  for (const auto& m : auts) CHECK(in_A(m));
  auto a = enumerate_A({s3, c4});
  for (const auto& m : a) CHECK(oracle::is_bijective(recompose(p, m).values(), 24));
}

TEST_CASE("ASpace sampling stays in A") {
  std::mt19937_64 rng(9);
  ASpace a({build_group("Q8"), build_group("C2")});
  CHECK(a.size() == enumerate_A(a.factors()).size());
  for (int i = 0; i < 50; ++i) CHECK(in_A(a.sample(rng)));
  ASpace z({build_group("Q8"), build_group("C2")}, true);
  for (int i = 0; i < 50; ++i) CHECK(in_Z(z.sample(rng)));
}

TEST_CASE("A factorization") {
  auto s3 = build_group("S3"), c4 = build_group("C4");
  auto p = ProductGroup::of({s3, c4});
  for (const auto& m : enumerate_A({s3, c4})) {
    auto f = astruc_factorize(m);
    auto prod = matrix_multiply(matrix_multiply(matrix_multiply(f.d1, f.u), f.l), f.d2);
    CHECK(prod == m);
    CHECK(oracle::is_bijective(recompose(p, f.u).values(), 24));
    CHECK(oracle::is_bijective(recompose(p, f.l).values(), 24));
  }
  auto c2 = build_group("C2");
  auto one = GroupMap::identity(c2);
  CHECK_THROWS_AS(astruc_factorize(EndoMatrix::two_by_two(one, one, one, one)), FactorizationError);
  CHECK_THROWS_AS(astruc_factorize(EndoMatrix::identity({c2, c2, c2})), PreconditionError);
}

TEST_CASE("enumeration limits") {
  EnumLimits tight;
  tight.max_members = 3;
  CHECK_THROWS_AS(enumerate_A({build_group("S3"), build_group("C4")}, tight), ResourceError);
  EnumLimits small;
  small.max_product_order = 10;
  CHECK_THROWS_AS(enumerate_aut_matrices(ProductGroup::of({build_group("S3"), build_group("C4")}), small),
                  ResourceError);
}
