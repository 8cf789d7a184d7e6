#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "groupdet/group_map.hpp"

namespace groupdet {

struct HomSet {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<GroupMap> members;

  std::size_t size() const { return members.size(); }
  auto begin() const { return members.begin(); }
  auto end() const { return members.end(); }
  const GroupMap& operator[](std::size_t i) const { return members[i]; }
};

// Receives the full value table of each homomorphism found; return false to stop.
using HomVisitor = std::function<bool(const std::vector<Elem>&)>;

struct HomSearchOptions {
  bool injective = false;
  // Images restricted to this subgroup of the codomain when set.
  const Subgroup* restrict_codomain = nullptr;
};

// Generator-image backtracking. Every relation x * s = y of the domain table
// is checked as soon as the generators involved have images. Visits in
// lexicographic order of generator images; returns false if stopped early.
bool for_each_hom(const GroupPtr& h, const GroupPtr& k, const HomVisitor& visit,
                  const HomSearchOptions& opts = {});

// Members sorted lexicographically by value array.
HomSet enumerate_homs(const GroupPtr& h, const GroupPtr& k, const Subgroup* restrict_codomain = nullptr);
HomSet enumerate_endos(const GroupPtr& g);
HomSet enumerate_autos(const GroupPtr& g);
// Hom(h, Z(k)).
HomSet enumerate_central_homs(const GroupPtr& h, const GroupPtr& k);

std::uint64_t count_homs(const GroupPtr& h, const GroupPtr& k, const HomSearchOptions& opts = {});

// A homomorphism found by backtracking with shuffled candidate order.
GroupMap random_hom(const GroupPtr& h, const GroupPtr& k, std::mt19937_64& rng,
                    const HomSearchOptions& opts = {});

}  // namespace groupdet
