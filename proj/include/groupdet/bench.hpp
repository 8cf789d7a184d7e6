#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupdet/determinant.hpp"
#include "groupdet/endo_matrix.hpp"

namespace groupdet {

enum class BenchMethod { naive, determinant };

// Where the benchmark draws its matrices from.
enum class Population { a, aut, m };

struct StepBreakdown {
  std::uint64_t pivot_inversion = 0;
  std::uint64_t build_cost = 0;
  std::uint64_t injectivity_comparisons = 0;

  friend bool operator==(const StepBreakdown&, const StepBreakdown&) = default;
};

struct BenchRecord {
  std::string h_spec;
  std::string k_spec;
  BenchMethod method = BenchMethod::naive;
  std::uint64_t sample = 0;
  // pivot_inversion + injectivity_comparisons; build_cost is reported separately.
  std::uint64_t steps_headline = 0;
  StepBreakdown steps_full;
  bool verdict = false;
  // Determinant records only: the branch used, or nullopt when no pivot was bijective.
  std::optional<Branch> branch;
  bool determinant_defined = true;
  double wall_time = 0.0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Branch branch = Branch::automatic;
  Population population = Population::a;
  EnumLimits limits;
};

struct BenchSummary {
  std::string h_spec;
  std::string k_spec;
  std::uint64_t seed = 0;
  Population population = Population::a;
  Branch branch = Branch::automatic;
  std::vector<BenchRecord> records;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  // Samples on which no determinant was defined; the naive verdict stands alone.
  std::size_t undefined = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const BenchSummary&, const BenchSummary&) = default;
};

// C(mn, 2): the comparisons a pairwise injectivity check of a bijection makes.
std::uint64_t naive_steps(std::size_t m, std::size_t n);
// n + C(m, 2) for Branch::h and m + C(n, 2) for Branch::k, with m = |H|, n = |K|.
std::uint64_t determinant_steps(std::size_t m, std::size_t n, Branch branch);
// The branch Branch::automatic tries first.
Branch preferred_branch(std::size_t m, std::size_t n);

BenchRecord bench_naive(const EndoMatrix& m);
BenchRecord bench_determinant(const EndoMatrix& m, Branch branch = Branch::automatic);

// Draws opts.trials matrices with a std::mt19937_64 seeded by opts.seed and
// runs both methods on each. Population::aut enumerates Aut(H x K) once and
// samples from it; Population::m samples End(H x K).
BenchSummary run_bench(const GroupPtr& h, const GroupPtr& k, const BenchOptions& opts = {});

}  // namespace groupdet
