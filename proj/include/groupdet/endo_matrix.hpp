#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "groupdet/group_map.hpp"
#include "groupdet/homs.hpp"

namespace groupdet {

struct EnumLimits {
  // Largest product order for exhaustive automorphism or matrix enumeration.
  std::size_t max_product_order = 64;
  // Largest number of matrices or automorphisms an enumeration may produce.
  std::uint64_t max_members = 5'000'000;
};

struct ProductGroup {
  GroupPtr product;
  std::vector<GroupPtr> factors;
  std::vector<GroupMap> injections;
  std::vector<GroupMap> projections;

  static ProductGroup of(const std::vector<GroupPtr>& factors);
  // Uses the factor list recorded when the product was built.
  static ProductGroup from(const GroupPtr& product);
};

// n x n matrix of homomorphisms; entry (i, j) maps factor j to factor i.
class EndoMatrix {
  struct Trusted {};

 public:
  // Entries row-major. Throws StructuralError unless every entry is a
  // homomorphism of the right shape and rows satisfy the M-condition.
  EndoMatrix(std::vector<GroupPtr> factors, std::vector<GroupMap> entries);
  // Skips validation; for callers that build matrices known to be valid.
  static EndoMatrix trusted(std::vector<GroupPtr> factors, std::vector<GroupMap> entries);

  static EndoMatrix identity(const std::vector<GroupPtr>& factors);
  static EndoMatrix diagonal(const std::vector<GroupMap>& diag);
  static EndoMatrix two_by_two(GroupMap alpha, GroupMap beta, GroupMap gamma, GroupMap delta);

  std::size_t size() const { return factors_.size(); }
  const std::vector<GroupPtr>& factors() const { return factors_; }
  const std::vector<GroupMap>& entries() const { return entries_; }
  const GroupMap& at(std::size_t i, std::size_t j) const { return entries_[i * factors_.size() + j]; }

  const GroupMap& alpha() const { return at(0, 0); }
  const GroupMap& beta() const { return at(0, 1); }
  const GroupMap& gamma() const { return at(1, 0); }
  const GroupMap& delta() const { return at(1, 1); }

  friend bool operator==(const EndoMatrix& a, const EndoMatrix& b);

 private:
  EndoMatrix(std::vector<GroupPtr> factors, std::vector<GroupMap> entries, Trusted);
  std::vector<GroupPtr> factors_;
  std::vector<GroupMap> entries_;
};

bool same_factors(const std::vector<GroupPtr>& a, const std::vector<GroupPtr>& b);

EndoMatrix decompose(const ProductGroup& p, const GroupMap& phi);
GroupMap recompose(const ProductGroup& p, const EndoMatrix& m);
// Builds the product on the fly; prefer the overload above in loops.
GroupMap recompose(const EndoMatrix& m);
EndoMatrix matrix_multiply(const EndoMatrix& a, const EndoMatrix& b);

bool in_A(const EndoMatrix& m);
bool in_Z(const EndoMatrix& m);

using MatrixVisitor = std::function<bool(const EndoMatrix&)>;

// All matrices satisfying the M-condition, i.e. End of the product. Rows are
// independent, so the space is the cartesian product of the admissible rows.
class MSpace {
 public:
  explicit MSpace(std::vector<GroupPtr> factors);
  const std::vector<GroupPtr>& factors() const { return factors_; }
  // Saturates at UINT64_MAX.
  std::uint64_t size() const;
  bool for_each(const MatrixVisitor& visit) const;
  EndoMatrix sample(std::mt19937_64& rng) const;
  const HomSet& homs(std::size_t i, std::size_t j) const { return homs_[i * factors_.size() + j]; }

 private:
  EndoMatrix build(const std::vector<std::size_t>& row_choice) const;
  std::vector<GroupPtr> factors_;
  std::vector<HomSet> homs_;
  // rows_[i][r][j] indexes homs(i, j).
  std::vector<std::vector<std::vector<std::size_t>>> rows_;
};

// A (automorphisms on the diagonal, center-valued homomorphisms elsewhere)
// or, with central = true, Z (central automorphisms on the diagonal).
class ASpace {
 public:
  explicit ASpace(std::vector<GroupPtr> factors, bool central = false);
  const std::vector<GroupPtr>& factors() const { return factors_; }
  std::uint64_t size() const;
  bool for_each(const MatrixVisitor& visit) const;
  EndoMatrix sample(std::mt19937_64& rng) const;
  const HomSet& component(std::size_t i, std::size_t j) const { return sets_[i * factors_.size() + j]; }

 private:
  std::vector<GroupPtr> factors_;
  std::vector<HomSet> sets_;
};

// Throws ResourceError past the limits.
std::vector<EndoMatrix> enumerate_A(const std::vector<GroupPtr>& factors, const EnumLimits& limits = {});
std::vector<EndoMatrix> enumerate_Z(const std::vector<GroupPtr>& factors, const EnumLimits& limits = {});
// Automorphisms of the product, decomposed. Throws ResourceError past the limits.
bool for_each_aut_matrix(const ProductGroup& p, const MatrixVisitor& visit, const EnumLimits& limits = {});
std::vector<EndoMatrix> enumerate_aut_matrices(const ProductGroup& p, const EnumLimits& limits = {});

struct AStrucFactors {
  EndoMatrix d1;
  EndoMatrix u;
  EndoMatrix l;
  EndoMatrix d2;
};

// m = d1 u l d2 with d1 = diag(α(1 - bγ), 1), u = (1, (1 - bγ)^-1 b; 0, 1),
// l = (1, 0; γ, 1), d2 = diag(1, δ), where b = α^-1 β δ^-1.
AStrucFactors astruc_factorize(const EndoMatrix& m);

}  // namespace groupdet
