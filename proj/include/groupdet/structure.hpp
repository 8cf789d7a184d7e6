#pragma once

#include <optional>
#include <vector>

#include "groupdet/group_map.hpp"

namespace groupdet {

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
bool is_stem(const GroupPtr& g);

// Sorted by order, then by elements.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);
// Unordered pairs (A, B) with A normal, B normal, A ∩ B = 1 and AB = G,
// including (1, G); within a pair |A| <= |B|.
std::vector<DirectFactorization> direct_factorizations(const GroupPtr& g);

// A nontrivial direct factor together with one complement. Distinct entries
// are pairwise non-isomorphic; sorted by decreasing order.
struct DirectFactor {
  Subgroup factor;
  Subgroup complement;
};
std::vector<DirectFactor> direct_factor_types(const GroupPtr& g);

std::optional<GroupMap> are_isomorphic(const GroupPtr& g1, const GroupPtr& g2);

struct CommonFactor {
  Subgroup h_factor;
  Subgroup h_complement;
  Subgroup k_factor;
  Subgroup k_complement;
  // iso[i] is the element of k matched with h_factor.elements()[i].
  std::vector<Elem> iso;

  friend bool operator==(const CommonFactor&, const CommonFactor&) = default;
};

std::optional<CommonFactor> common_nontrivial_factor(const GroupPtr& h, const GroupPtr& k);
// Same search restricted to factors lying in the center.
std::optional<CommonFactor> common_central_factor(const GroupPtr& h, const GroupPtr& k);

}  // namespace groupdet
