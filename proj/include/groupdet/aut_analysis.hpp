#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "groupdet/endo_matrix.hpp"
#include "groupdet/structure.hpp"

namespace groupdet {

struct AutComparison {
  std::uint64_t aut_order = 0;
  std::uint64_t a_order = 0;
  bool a_subset_aut = false;
  bool aut_subset_a = false;
  // Members of A (or Z) that are not automorphisms (or not central ones).
  std::vector<EndoMatrix> a_not_in_aut;
  // Automorphisms (or central automorphisms) outside A (or Z).
  std::vector<EndoMatrix> aut_not_in_a;

  bool equal() const { return a_subset_aut && aut_subset_a; }
  friend bool operator==(const AutComparison&, const AutComparison&) = default;
};

// Both inclusions decided by enumeration; at most max_witnesses are kept per side.
AutComparison compare_aut_vs_A(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {},
                               std::size_t max_witnesses = 4);

// Automorphisms acting trivially on g / Z(g).
std::vector<GroupMap> central_aut_group(const GroupPtr& g);
bool is_central_automorphism(const GroupMap& f);
AutComparison compare_autc_vs_Z(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {},
                                std::size_t max_witnesses = 4);

// The automorphism (ι_M π_M, ι_X φ^-1 π_Y; ι_Y φ π_X, ι_N π_N) built from a
// common factor X ≅ Y with H = X × M and K = Y × N. It never lies in A.
EndoMatrix common_factor_automorphism(const GroupPtr& h, const GroupPtr& k, const CommonFactor& cf);

struct StemSemidirect {
  std::uint64_t group_order = 0;
  std::uint64_t n_order = 0;
  std::uint64_t d_order = 0;
  bool closed = false;
  bool n_normal = false;
  bool unitriangular_commute = false;
  bool d_meets_n_trivially = false;
  bool dn_is_everything = false;

  bool holds() const { return closed && n_normal && unitriangular_commute && d_meets_n_trivially && dn_is_everything; }
};

// A for two stem groups without a common factor: N (identity diagonal) is a
// normal subgroup with [U, L] = 1 and the diagonal matrices D complement it.
// Throws PreconditionError if a factor is not stem or a common factor exists.
StemSemidirect verify_stem_semidirect(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits = {});

struct NonCommutingPair {
  EndoMatrix u;
  EndoMatrix l;
  EndoMatrix ul;
  EndoMatrix lu;
};

// H = Q8, K = C2, u = (1, β; 0, 1), l = (1, 0; γ, 1) with β: C2 -> Z(Q8)
// injective and γ: Q8 -> C2 onto.
NonCommutingPair q8_noncommuting_witness();

// The eight relations between an automorphism (α, β; γ, δ) and its inverse
// (α', β'; γ', δ'): entries of φφ' = 1 first, then of φ'φ = 1, row-major.
std::array<bool, 8> check_cases(const EndoMatrix& phi, const EndoMatrix& inv);

struct NormCheck {
  bool alpha_onto_beta_central = true;
  bool delta_onto_gamma_central = true;
  // α, α', βγ', β'γ
  std::array<bool, 4> h_side{};
  // δ, δ', γβ', γ'β
  std::array<bool, 4> k_side{};
  // The same eight maps with "normal endomorphism" weakened to "image is a
  // normal subgroup". An inner automorphism of S3 already fails the full
  // claim on S3 x 1 while every image is normal.
  std::array<bool, 4> h_side_images{};
  std::array<bool, 4> k_side_images{};

  // Surjectivity clauses and both normal-endomorphism arrays.
  bool all() const;
  // Surjectivity clauses and both image arrays.
  bool images_all() const;
};
NormCheck check_norm(const EndoMatrix& phi, const EndoMatrix& inv);

}  // namespace groupdet
