#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "groupdet/bench.hpp"
#include "groupdet/catalog.hpp"
#include "groupdet/sweep.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

GroupPtr g(const char* s) { return build_group(s); }

std::uint64_t c2(std::uint64_t x) { return x * (x - 1) / 2; }

}  // namespace

TEST_CASE("step formulas") {
  CHECK(naive_steps(3, 4) == 66);
  CHECK(naive_steps(6, 4) == 276);
  CHECK(determinant_steps(3, 4, Branch::h) == 7);
  CHECK(determinant_steps(6, 4, Branch::h) == 19);
  CHECK(determinant_steps(6, 4, Branch::k) == 12);
  CHECK(determinant_steps(6, 4, Branch::automatic) == 12);
  CHECK(preferred_branch(3, 4) == Branch::h);
  CHECK(preferred_branch(6, 4) == Branch::k);
  // The determinant never loses once m >= 2 and mn > m + 1.
  for (std::size_t m = 2; m <= 12; ++m)
    for (std::size_t n = 1; n <= 12; ++n)
      if (m * n > m + 1) CHECK(determinant_steps(m, n, Branch::h) < naive_steps(m, n));
  // With m = 1 the naive count can be the smaller one.
  CHECK(naive_steps(1, 3) <= determinant_steps(1, 3, Branch::h));
}

TEST_CASE("counters on A match the formulas") {
  struct Case {
    const char* h;
    const char* k;
    Branch branch;
    std::uint64_t headline;
  };
  for (auto c : {Case{"C3", "C4", Branch::automatic, 7}, Case{"C3", "C4", Branch::h, 7},
                 Case{"S3", "C4", Branch::h, 19}, Case{"S3", "C4", Branch::automatic, 12},
                 Case{"S3", "C4", Branch::k, 12}, Case{"Q8", "C2", Branch::h, 2 + c2(8)}}) {
    CAPTURE(std::string(c.h));
    CAPTURE(std::string(c.k));
    BenchOptions o;
    o.trials = 200;
    o.seed = 3;
    o.branch = c.branch;
    auto s = run_bench(g(c.h), g(c.k), o);
    CHECK(s.disagreements == 0);
    CHECK(s.undefined == 0);
    CHECK(s.agreements == 200);
    const std::uint64_t mn = g(c.h)->order() * g(c.k)->order();
    for (const auto& r : s.records) {
      if (r.method == BenchMethod::naive) {
        CHECK(r.steps_headline == c2(mn));
        CHECK(r.verdict);
      } else {
        CHECK(r.steps_headline == c.headline);
        CHECK(r.steps_full.pivot_inversion + r.steps_full.injectivity_comparisons == r.steps_headline);
        CHECK(r.verdict);
      }
    }
  }
}

TEST_CASE("verdicts agree on End and on Aut") {
  BenchOptions o;
  o.trials = 300;
  o.seed = 42;
  o.population = Population::m;
  for (auto [h, k] : std::vector<std::pair<const char*, const char*>>{{"S3", "C4"}, {"C2", "C2"}, {"S3", "S3"}, {"C4", "C4"}}) {
    CAPTURE(std::string(h));
    CAPTURE(std::string(k));
    auto s = run_bench(g(h), g(k), o);
    CHECK(s.disagreements == 0);
    CHECK(s.agreements + s.undefined == 300);
    // Early exit on a repeated value keeps the naive count at most C(mn, 2).
    for (const auto& r : s.records)
      if (r.method == BenchMethod::naive) CHECK(r.steps_headline <= c2(g(h)->order() * g(k)->order()));
  }
  std::mt19937_64 rng(5);
  MSpace space({g("S3"), g("C4")});
  auto p = ProductGroup::of({g("S3"), g("C4")});
  for (int i = 0; i < 200; ++i) {
    auto m = space.sample(rng);
    bool truth = oracle::is_bijective(recompose(p, m).values(), 24);
    CHECK(bench_naive(m).verdict == truth);
    auto d = bench_determinant(m);
    if (d.determinant_defined) CHECK(d.verdict == truth);
  }

  o.population = Population::aut;
  auto s = run_bench(g("C2"), g("C2"), o);
  CHECK(s.disagreements == 0);
  CHECK_FALSE(s.warnings.empty());
  // The two swaps of C2 x C2 are automorphisms with no bijective pivot.
  CHECK(s.undefined > 0);
}

TEST_CASE("seeded runs are reproducible") {
  BenchOptions o;
  o.trials = 20;
  o.seed = 99;
  auto a = run_bench(g("S3"), g("C4"), o);
  auto b = run_bench(g("S3"), g("C4"), o);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].steps_headline == b.records[i].steps_headline);
    CHECK(a.records[i].verdict == b.records[i].verdict);
  }
}

TEST_CASE("catalog") {
  auto all = catalog_specs(15);
  CHECK(all.size() == 28);
  CHECK(catalog_specs(1) == std::vector<std::string>{"C1"});
  CHECK(catalog_specs(12).size() == 24);
  CHECK(catalog_specs(64) == all);
  // Pairwise non-isomorphic, and each spec builds a group of the listed order.
  std::vector<GroupPtr> groups;
  for (const auto& s : all) groups.push_back(build_group(s));
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (groups[i]->order() == groups[j]->order()) {
        CAPTURE(groups[i]->spec());
        CAPTURE(groups[j]->spec());
        CHECK_FALSE(are_isomorphic(groups[i], groups[j]));
      }
  // Number of groups of each order up to 15.
  const std::size_t counts[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  for (std::size_t n = 1; n <= 15; ++n) {
    std::size_t c = 0;
    for (const auto& grp : groups) c += grp->order() == n;
    CAPTURE(n);
    CHECK(c == counts[n]);
  }
}

TEST_CASE("small sweeps") {
  SweepOptions o;
  o.max_order = 1;
  auto one = run_sweep(o);
  CHECK(one.entries.size() == 1);
  CHECK(one.ok());
  o.max_order = 6;
  auto six = run_sweep(o);
  CHECK(six.entries.size() == 64);
  CHECK(six.complete);
  CHECK(six.ok());
  for (const auto& e : six.entries) {
    bool shared = e.report.common_factor.has_value();
    if (!shared) {
      REQUIRE(e.aut);
      CHECK(e.aut->equal());
    }
  }
}
