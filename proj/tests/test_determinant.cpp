#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groupdet/catalog.hpp"
#include "groupdet/determinant.hpp"
#include "groupdet/error.hpp"
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

// The brute-force inverse of the map a matrix defines, or empty.
std::vector<Elem> oracle_inverse(const EndoMatrix& m) { return oracle::inverse(oracle_values(m)); }

EndoMatrix swap_matrix(const GroupPtr& g) {
  return EndoMatrix::two_by_two(GroupMap::zero(g, g), GroupMap::identity(g), GroupMap::identity(g),
                                GroupMap::zero(g, g));
}

const std::vector<std::pair<const char*, const char*>> kPairs = {
    {"S3", "C4"}, {"C2", "C4"}, {"Q8", "C2"}, {"C3", "C4"}, {"C2", "C2"}, {"S3", "C2"}, {"D8", "C3"}};

}  // namespace

TEST_CASE("determinants of simple matrices") {
  auto s3 = build_group("S3"), c4 = build_group("C4");
  auto id = EndoMatrix::identity({s3, c4});
  CHECK(det_H(id) == GroupMap::identity(s3));
  CHECK(det_K(id) == GroupMap::identity(c4));
  CHECK(det_A(id) == GroupMap::identity(s3));
  auto sw = swap_matrix(s3);
  CHECK_THROWS_AS(det_H(sw), DeterminantUndefinedError);
  CHECK_THROWS_AS(det_K(sw), DeterminantUndefinedError);
  CHECK_THROWS_AS(is_invertible_via_det(sw), DeterminantUndefinedError);
  CHECK(oracle::is_bijective(oracle_values(sw), 36));
  try {
    det_H(sw);
  } catch (const DeterminantUndefinedError& e) {
    CHECK(e.step() == 0);
    CHECK(e.pivot() == 1);
  }
  CHECK_THROWS_AS(det_A(sw), PreconditionError);
}

TEST_CASE("determinant verdict agrees with bijectivity on all endomorphisms") {
  for (auto [h, k] : kPairs) {
    CAPTURE(std::string(h));
    CAPTURE(std::string(k));
    MSpace space({build_group(h), build_group(k)});
    std::size_t decided = 0;
    space.for_each([&](const EndoMatrix& m) {
      bool truth = !oracle_inverse(m).empty();
      for (Branch b : {Branch::h, Branch::k, Branch::automatic}) {
        bool verdict = false;
        try {
          verdict = is_invertible_via_det(m, nullptr, b);
        } catch (const DeterminantUndefinedError&) {
          if (b == Branch::h) CHECK_FALSE(is_bijective(m.delta()));
          if (b == Branch::k) CHECK_FALSE(is_bijective(m.alpha()));
          if (b == Branch::automatic) CHECK((!is_bijective(m.delta()) && !is_bijective(m.alpha())));
          continue;
        }
        CHECK(verdict == truth);
        ++decided;
      }
      return true;
    });
    CHECK(decided > 0);
  }
}

TEST_CASE("inverse formulas match the brute-force inverse") {
  for (auto [h, k] : kPairs) {
    CAPTURE(std::string(h));
    CAPTURE(std::string(k));
    MSpace space({build_group(h), build_group(k)});
    space.for_each([&](const EndoMatrix& m) {
      auto truth = oracle_inverse(m);
      for (Branch b : {Branch::h, Branch::k}) {
        bool pivot_ok = is_bijective(b == Branch::h ? m.delta() : m.alpha());
        if (!pivot_ok) {
          CHECK_THROWS_AS(invert_via_det(m, b), DeterminantUndefinedError);
          continue;
        }
        if (truth.empty()) {
          CHECK_THROWS_AS(invert_via_det(m, b), NotInvertibleError);
          continue;
        }
        auto inv = invert_via_det(m, b);
        CHECK(oracle_values(inv) == truth);
      }
      if (is_bijective(m.delta()) && !truth.empty()) {
        auto viaf = invert_via_f_determinant(m, FSequence{2, {1}});
        CHECK(viaf == invert_via_det(m, Branch::h));
      }
      return true;
    });
  }
}

TEST_CASE("pleasant formula on A") {
  for (auto [h, k] : kPairs) {
    CAPTURE(std::string(h));
    CAPTURE(std::string(k));
    auto a = enumerate_A({build_group(h), build_group(k)});
    for (const auto& m : a) {
      auto truth = oracle_inverse(m);
      if (truth.empty()) {
        CHECK_THROWS_AS(invert_via_det_pleasant(m), NotInvertibleError);
        continue;
      }
      auto inv = invert_via_det_pleasant(m);
      CHECK(oracle_values(inv) == truth);
      CHECK(in_A(inv));
      CHECK(det_A(inv) == invert(m.alpha()));
      CHECK(inv == invert_via_det(m, Branch::h));
      CHECK(inv == invert_via_det(m, Branch::k));
    }
  }
  CHECK_THROWS_AS(invert_via_det_pleasant(swap_matrix(build_group("C3"))), PreconditionError);
}

TEST_CASE("reciprocal identities") {
  for (auto [h, k] : kPairs) {
    CAPTURE(std::string(h));
    CAPTURE(std::string(k));
    for (const auto& m : enumerate_A({build_group(h), build_group(k)})) {
      auto r = detiff_check(m);
      CHECK(r.detH_invertible == r.detK_invertible);
      CHECK(r.reciprocal_identities_hold);
      CHECK(r.identities_checked == r.detH_invertible);
      CHECK(r.detH_invertible == !oracle_inverse(m).empty());
    }
  }
}

TEST_CASE("f-determinant chain") {
  auto c2 = build_group("C2"), c3 = build_group("C3"), c4 = build_group("C4");
  MSpace two({c2, c4});
  two.for_each([&](const EndoMatrix& m) {
    if (is_bijective(m.delta())) CHECK(f_determinant_map(m, FSequence{2, {1}}) == det_H(m));
    if (is_bijective(m.alpha())) CHECK(f_determinant_map(m, FSequence{2, {0}}) == det_K(m));
    return true;
  });
  auto id3 = EndoMatrix::identity({c2, c2, c3});
  auto chain = f_determinant(id3, FSequence::canonical(3));
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].size() == 3);
  CHECK(chain[1].size() == 2);
  CHECK(chain[1].surviving == std::vector<std::size_t>{0, 1});
  CHECK(chain[2].surviving == std::vector<std::size_t>{0});
  CHECK(chain[2].at(0, 0) == GroupMap::identity(c2));
  CHECK(FSequence::canonical(3).images == std::vector<std::size_t>{2, 1});

  CHECK_THROWS_AS((FSequence{3, {1, 1}}.validate()), PreconditionError);
  CHECK_THROWS_AS((FSequence{3, {3}}.validate()), PreconditionError);
  CHECK_THROWS_AS((FSequence{2, {0, 1}}.validate()), PreconditionError);
  CHECK_THROWS_AS(f_determinant(id3, FSequence{2, {1}}), PreconditionError);
}

TEST_CASE("three factors: C2 x C2 x C3") {
  auto c2 = build_group("C2"), c3 = build_group("C3");
  auto p = ProductGroup::of({c2, c2, c3});
  auto auts = enumerate_aut_matrices(p);
  CHECK(auts.size() == 12);
  std::size_t without_sequence = 0;
  for (const auto& m : auts) {
    auto f = find_admissible_sequence(m);
    if (!f) {
      ++without_sequence;
      CHECK_FALSE(in_A(m));
      CHECK_THROWS_AS(is_invertible_via_det(m), DeterminantUndefinedError);
      continue;
    }
    CHECK(is_invertible_via_det(m));
    auto inv = invert_via_f_determinant(m, *f);
    CHECK(oracle_values(inv) == oracle_inverse(m));
    CHECK(invert_via_det_any(m) == inv);
  }
  CHECK(without_sequence == 2);
  for (const auto& m : enumerate_A({c2, c2, c3})) {
    auto f = find_admissible_sequence(m);
    REQUIRE(f);
    CHECK(*f == FSequence::canonical(3));
    bool truth = !oracle_inverse(m).empty();
    CHECK(is_invertible_via_det(m) == truth);
    if (truth) CHECK(det_A(invert_via_det_any(m)) == invert(m.alpha()));
  }
}

TEST_CASE("three nonabelian factors") {
  auto s3 = build_group("S3"), c2 = build_group("C2"), c3 = build_group("C3");
  std::mt19937_64 rng(17);
  ASpace a({s3, c2, c3});
  for (int i = 0; i < 200; ++i) {
    auto m = a.sample(rng);
    auto truth = oracle_inverse(m);
    CHECK(is_invertible_via_det(m) == !truth.empty());
    if (!truth.empty()) CHECK(oracle_values(invert_via_det_any(m)) == truth);
  }
}

TEST_CASE("operation counts") {
  auto c3 = build_group("C3"), c4 = build_group("C4"), s3 = build_group("S3");
  OpCounter oc;
  auto d = decide_via_det(EndoMatrix::identity({c3, c4}), &oc);
  CHECK(d.invertible);
  CHECK(d.branch == Branch::h);
  CHECK(oc.lookups == 4);
  CHECK(oc.comparisons == 3);
  CHECK(oc.evaluations == 3);
  CHECK(oc.headline() == 7);

  OpCounter oh;
  CHECK(is_invertible_via_det(EndoMatrix::identity({s3, c4}), &oh, Branch::h));
  CHECK(oh.headline() == 4 + 15);
  OpCounter ok;
  auto dk = decide_via_det(EndoMatrix::identity({s3, c4}), &ok);
  CHECK(dk.branch == Branch::k);
  CHECK(ok.headline() == 6 + 6);
}

TEST_CASE("non-invertible with defined determinant") {
  auto c2 = build_group("C2");
  auto one = GroupMap::identity(c2);
  auto m = EndoMatrix::two_by_two(one, one, one, one);
  CHECK_FALSE(is_invertible_via_det(m));
  CHECK_THROWS_AS(invert_via_det(m), NotInvertibleError);
  auto r = detiff_check(m);
  CHECK_FALSE(r.detH_invertible);
  CHECK_FALSE(r.identities_checked);
}
