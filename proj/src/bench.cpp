#include "groupdet/bench.hpp"

#include <chrono>
#include <random>

#include "groupdet/error.hpp"
#include "groupdet/structure.hpp"

namespace groupdet {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0)) / 2; }

std::string spec_of(const GroupPtr& g) { return g->has_spec() ? g->spec() : "order " + std::to_string(g->order()); }

template <class F>
double timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

StepBreakdown breakdown(const OpCounter& c) { return {c.lookups, c.evaluations, c.comparisons}; }

}  // namespace

std::uint64_t naive_steps(std::size_t m, std::size_t n) { return choose2(std::uint64_t(m) * n); }

std::uint64_t determinant_steps(std::size_t m, std::size_t n, Branch branch) {
  if (branch == Branch::automatic) branch = preferred_branch(m, n);
  return branch == Branch::h ? n + choose2(m) : m + choose2(n);
}

Branch preferred_branch(std::size_t m, std::size_t n) { return m <= n ? Branch::h : Branch::k; }

BenchRecord bench_naive(const EndoMatrix& m) {
  if (m.size() != 2) throw PreconditionError("bench_naive needs a 2x2 matrix");
  BenchRecord r;
  r.h_spec = spec_of(m.factors()[0]);
  r.k_spec = spec_of(m.factors()[1]);
  r.method = BenchMethod::naive;
  OpCounter c;
  // recompose is the same for both methods and is not charged to either.
  GroupMap f = recompose(m);
  r.wall_time = timed([&] { r.verdict = is_bijective(f, &c); });
  r.steps_full = breakdown(c);
  r.steps_headline = c.headline();
  return r;
}

BenchRecord bench_determinant(const EndoMatrix& m, Branch branch) {
  if (m.size() != 2) throw PreconditionError("bench_determinant needs a 2x2 matrix");
  BenchRecord r;
  r.h_spec = spec_of(m.factors()[0]);
  r.k_spec = spec_of(m.factors()[1]);
  r.method = BenchMethod::determinant;
  OpCounter c;
  r.wall_time = timed([&] {
    try {
      auto d = decide_via_det(m, &c, branch);
      r.verdict = d.invertible;
      r.branch = d.branch;
    } catch (const DeterminantUndefinedError&) {
      r.determinant_defined = false;
    }
  });
  r.steps_full = breakdown(c);
  r.steps_headline = c.headline();
  return r;
}

BenchSummary run_bench(const GroupPtr& h, const GroupPtr& k, const BenchOptions& opts) {
  BenchSummary s;
  s.h_spec = spec_of(h);
  s.k_spec = spec_of(k);
  s.seed = opts.seed;
  s.population = opts.population;
  s.branch = opts.branch;
  if (common_nontrivial_factor(h, k))
    s.warnings.push_back("the factors share a nontrivial direct factor, so Aut(H x K) is larger than A");
  if (h->order() <= 2 && k->order() <= 2)
    s.warnings.push_back("with both factors of order at most 2 the determinant saves no steps");

  std::mt19937_64 rng(opts.seed);
  std::vector<EndoMatrix> auts;
  std::optional<ASpace> a;
  std::optional<MSpace> mspace;
  switch (opts.population) {
    case Population::a: a.emplace(std::vector<GroupPtr>{h, k}); break;
    case Population::m: mspace.emplace(std::vector<GroupPtr>{h, k}); break;
    case Population::aut: auts = enumerate_aut_matrices(ProductGroup::of({h, k}), opts.limits); break;
  }

  for (std::size_t i = 0; i < opts.trials; ++i) {
    EndoMatrix m = a ? a->sample(rng)
                     : mspace ? mspace->sample(rng)
                              : auts[std::uniform_int_distribution<std::size_t>(0, auts.size() - 1)(rng)];
    BenchRecord naive = bench_naive(m);
    BenchRecord det = bench_determinant(m, opts.branch);
    naive.sample = det.sample = i;
    if (!det.determinant_defined)
      ++s.undefined;
    else if (det.verdict == naive.verdict)
      ++s.agreements;
    else
      ++s.disagreements;
    s.records.push_back(std::move(naive));
    s.records.push_back(std::move(det));
  }
  return s;
}

}  // namespace groupdet
