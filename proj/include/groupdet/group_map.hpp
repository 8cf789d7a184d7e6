#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "groupdet/group.hpp"

namespace groupdet {

// Elementary steps: pairwise element comparisons (injectivity), graph lookups
// (inversion) and map evaluations (building a map such as a determinant).
struct OpCounter {
  std::uint64_t comparisons = 0;
  std::uint64_t lookups = 0;
  std::uint64_t evaluations = 0;

  std::uint64_t headline() const { return comparisons + lookups; }
  OpCounter& operator+=(const OpCounter& o) {
    comparisons += o.comparisons;
    lookups += o.lookups;
    evaluations += o.evaluations;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

enum class HomStatus : std::uint8_t { unknown, homomorphism, not_homomorphism };

// Whether a pointwise sum or difference must check that the two images commute.
enum class Commute { unchecked, require };

class GroupMap {
 public:
  GroupMap(GroupPtr domain, GroupPtr codomain, std::vector<Elem> values,
           HomStatus status = HomStatus::unknown);
  GroupMap(const GroupMap& other);
  GroupMap(GroupMap&& other) noexcept;
  GroupMap& operator=(const GroupMap& other);
  GroupMap& operator=(GroupMap&& other) noexcept;

  static GroupMap identity(const GroupPtr& g);
  static GroupMap zero(const GroupPtr& domain, const GroupPtr& codomain);

  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  const std::vector<Elem>& values() const { return values_; }
  Elem operator()(Elem x) const { return values_[x]; }

  HomStatus hom_status() const { return static_cast<HomStatus>(hom_.load(std::memory_order_relaxed)); }
  // Idempotent cache write; safe between concurrent readers.
  void set_hom_status(HomStatus s) const { hom_.store(static_cast<std::uint8_t>(s), std::memory_order_relaxed); }

  bool is_zero() const;
  bool is_endo() const { return same_group(domain_, codomain_); }

  // Same groups (by table) and same values.
  friend bool operator==(const GroupMap& a, const GroupMap& b);

 private:
  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<Elem> values_;
  mutable std::atomic<std::uint8_t> hom_;
};

// x -> f(g(x))
GroupMap compose(const GroupMap& f, const GroupMap& g);
// x -> f(x) g(x)
GroupMap pointwise_sum(const GroupMap& f, const GroupMap& g, Commute c = Commute::unchecked);
// x -> f(x) g(x)^-1
GroupMap pointwise_diff(const GroupMap& f, const GroupMap& g, Commute c = Commute::unchecked);
// x -> f(x)^-1
GroupMap negate(const GroupMap& f);
GroupMap power(const GroupMap& f, std::size_t r);

bool is_homomorphism(const GroupMap& f);
bool is_normal_endo(const GroupMap& f);
// Images of f and g commute elementwise, i.e. [f(x), g(y)] = 1 for all x, y.
bool images_commute(const GroupMap& f, const GroupMap& g);
bool image_in_center(const GroupMap& f);
// g^-1 f(g) central for every g.
bool is_central_endo(const GroupMap& f);

// With a counter, injectivity is decided by pairwise comparison and every
// comparison is counted; without one a bitmap is used. Verdicts agree.
bool is_bijective(const GroupMap& f, OpCounter* counter = nullptr);
// One lookup per domain element. Throws InversionError if f is not bijective.
GroupMap invert(const GroupMap& f, OpCounter* counter = nullptr);

// Both require a homomorphism.
Subgroup image(const GroupMap& f);
Subgroup kernel(const GroupMap& f);

struct FittingDecomposition {
  std::size_t r;
  Subgroup image;
  Subgroup kernel;
};
FittingDecomposition fitting_decomposition(const GroupMap& f);

}  // namespace groupdet
