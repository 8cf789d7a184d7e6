#pragma once

#include <optional>
#include <vector>

#include "groupdet/endo_matrix.hpp"

namespace groupdet {

// Which diagonal entry a 2x2 determinant inverts: Branch::h computes det_H
// (inverting δ), Branch::k computes det_K (inverting α). Branch::automatic
// inverts the diagonal entry of the larger factor and falls back to the other.
enum class Branch { h, k, automatic };

// An injective sequence of 0-based factor indices, eliminated in order.
struct FSequence {
  std::size_t n = 0;
  std::vector<std::size_t> images;

  // Eliminates n-1, n-2, ..., 1 and leaves factor 0.
  static FSequence canonical(std::size_t n);
  void validate() const;
  friend bool operator==(const FSequence&, const FSequence&) = default;
};

// det^g of a matrix: the entries indexed by the factors not yet eliminated.
struct PartialDet {
  std::vector<std::size_t> surviving;
  std::vector<GroupMap> entries;
  FSequence eliminated;

  std::size_t size() const { return surviving.size(); }
  // Indexed by factor numbers, not positions.
  const GroupMap& at(std::size_t i, std::size_t j) const;
};

GroupMap det_H(const EndoMatrix& m, OpCounter* counter = nullptr);
GroupMap det_K(const EndoMatrix& m, OpCounter* counter = nullptr);
// det_H for n = 2, the canonical f-determinant for n > 2. Requires in_A(m).
GroupMap det_A(const EndoMatrix& m);

// The chain det^∅ = m, ..., det^f. Throws DeterminantUndefinedError at the
// first non-bijective pivot.
std::vector<PartialDet> f_determinant(const EndoMatrix& m, const FSequence& f, OpCounter* counter = nullptr);
// The single surviving entry for a sequence of length n - 1.
GroupMap f_determinant_map(const EndoMatrix& m, const FSequence& f, OpCounter* counter = nullptr);

// Canonical sequence first, then the others in lexicographic order.
std::optional<FSequence> find_admissible_sequence(const EndoMatrix& m);

struct DetDecision {
  bool invertible = false;
  // For n = 2 the branch actually used; Branch::automatic for n > 2.
  Branch branch = Branch::automatic;
  FSequence sequence;
};

// Throws DeterminantUndefinedError when no admissible determinant exists.
DetDecision decide_via_det(const EndoMatrix& m, OpCounter* counter = nullptr, Branch branch = Branch::automatic);
bool is_invertible_via_det(const EndoMatrix& m, OpCounter* counter = nullptr, Branch branch = Branch::automatic);

// Inverse of a 2x2 matrix by the H-side formula (δ and det_H bijective) or
// the K-side formula (α and det_K bijective). Throws
// DeterminantUndefinedError if the requested pivot is not bijective and
// NotInvertibleError if the determinant is not.
EndoMatrix invert_via_det(const EndoMatrix& m, Branch branch = Branch::automatic);
// (det_H^-1, -α^-1 β det_K^-1; -δ^-1 γ det_H^-1, det_K^-1), for members of A.
EndoMatrix invert_via_det_pleasant(const EndoMatrix& m);
// Block elimination along f, recursing on the complement of each pivot.
// For n = 2 and f = (1) this is the H-side formula.
EndoMatrix invert_via_f_determinant(const EndoMatrix& m, const FSequence& f);
// Any n: invert_via_det for n = 2, otherwise the first admissible sequence.
EndoMatrix invert_via_det_any(const EndoMatrix& m);

struct DetiffRecord {
  bool detH_invertible = false;
  bool detK_invertible = false;
  // Vacuously true when neither determinant is invertible.
  bool reciprocal_identities_hold = true;
  bool identities_checked = false;
};
DetiffRecord detiff_check(const EndoMatrix& m);

}  // namespace groupdet
