#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupdet/aut_analysis.hpp"
#include "groupdet/endo_matrix.hpp"
#include "groupdet/structure.hpp"

namespace groupdet {

// Which composition a fixed-point search iterates: στ on K or τσ on H.
enum class Side { k, h };

// σ: H -> K and τ: K -> H with στ and τσ normal; `element` is a nontrivial
// element of K (Side::k) or H (Side::h) fixed by the composition, or, for
// total incompatibility, one whose orbit never reaches the identity.
struct CompatWitness {
  GroupMap sigma;
  GroupMap tau;
  Side side = Side::k;
  Elem element = 0;

  friend bool operator==(const CompatWitness&, const CompatWitness&) = default;
};

struct IncompatResult {
  bool holds = true;
  std::optional<CompatWitness> witness;
};

struct TotalResult {
  bool holds = true;
  // Largest, over qualifying (σ, τ), of the least n with (στ)^n = 0 or (τσ)^n = 0.
  std::optional<std::size_t> length;
  std::optional<CompatWitness> witness;
};

// The pair loops are bounded by limits.max_members and throw ResourceError past it.
IncompatResult is_incompatible(const GroupPtr& h, const GroupPtr& k, Side side = Side::k,
                               const EnumLimits& limits = {});
IncompatResult is_centrally_incompatible(const GroupPtr& h, const GroupPtr& k, Side side = Side::k,
                                         const EnumLimits& limits = {});
TotalResult is_totally_incompatible(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {});
TotalResult is_centrally_totally_incompatible(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {});
bool is_totally_incompatible_of_length(const GroupPtr& h, const GroupPtr& k, std::size_t n,
                                       const EnumLimits& limits = {});
bool is_centrally_totally_incompatible_of_length(const GroupPtr& h, const GroupPtr& k, std::size_t n,
                                                 const EnumLimits& limits = {});

// A non-bijective λ + ξμ (Side::h, λ ∈ Aut H) or ν + μξ (Side::k, λ holds
// ν ∈ Aut K), with two members of A whose product has it on the diagonal.
struct SubgroupWitness {
  Side side = Side::h;
  GroupMap automorphism;
  GroupMap mu;
  GroupMap xi;
  GroupMap sum;
  EndoMatrix left;
  EndoMatrix right;
};

struct SubgroupResult {
  bool holds = true;
  std::optional<SubgroupWitness> witness;
};

// Whether A is a subgroup of Aut(H x K), by checking every λ + ξμ and ν + μξ.
SubgroupResult a_subgroup_check(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {});

struct ContainmentResult {
  bool holds = true;
  // A member (1, -ξ; μ, 1) of A that is not bijective.
  std::optional<EndoMatrix> witness;
};

// Whether every member of A is an automorphism: 1 + ξμ bijective for all
// ξ ∈ Hom(K, Z(H)), μ ∈ Hom(H, Z(K)).
ContainmentResult a_subset_aut_check(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {});

struct TheoremCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;

  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

struct PairReport {
  std::string h_spec;
  std::string k_spec;
  std::size_t h_order = 0;
  std::size_t k_order = 0;

  std::optional<bool> incompatible;
  std::optional<bool> incompatible_h_side;
  std::optional<bool> centrally_incompatible;
  std::optional<bool> centrally_incompatible_h_side;
  std::optional<bool> totally_incompatible;
  std::optional<std::size_t> total_length;
  std::optional<bool> centrally_totally_incompatible;
  std::optional<std::size_t> central_total_length;

  std::optional<CommonFactor> common_factor;
  std::optional<CommonFactor> common_central_factor;
  bool h_stem = false;
  bool k_stem = false;

  std::optional<bool> a_is_subgroup;
  std::optional<bool> a_subset_aut;
  std::optional<bool> aut_subset_a;
  std::optional<bool> a_equals_aut;
  std::uint64_t a_order = 0;
  std::optional<std::uint64_t> aut_order;
  // An automorphism outside A when aut_subset_a is false.
  std::optional<EndoMatrix> aut_witness;

  std::vector<CompatWitness> witnesses;
  std::vector<TheoremCheck> theorem_checks;
  bool complete = true;
  std::vector<std::string> notes;

  bool theorems_hold() const;
  friend bool operator==(const PairReport&, const PairReport&) = default;
};

// Every predicate above, the common-factor structure, both inclusions between
// A and Aut(H x K) and implication checks for the results that tie them
// together. Sections exceeding the limits are skipped and the report is
// marked incomplete.
PairReport classify_pair(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {});

}  // namespace groupdet
