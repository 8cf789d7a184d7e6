#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace groupdet {

using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ValidationOptions {
  // Tables up to this order get the full cubic associativity check; larger
  // ones are checked on 10 * order^2 random triples.
  std::size_t full_associativity_limit = 256;
  std::uint64_t sample_seed = 0x9e3779b97f4a7c15ULL;
};

// A finite group given by its multiplication table. Immutable once built;
// center, derived subgroup, element orders and a small generating set are
// computed at construction.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
  struct Key {};

 public:
  static GroupPtr from_table(std::vector<Elem> table, std::string spec = {},
                             std::vector<std::string> labels = {},
                             const ValidationOptions& opts = {});

  // Elements are encoded in mixed radix with the first factor varying fastest,
  // so nested products encode exactly like the flattened product.
  static GroupPtr direct_product(const std::vector<GroupPtr>& factors);

  FiniteGroup(Key, std::size_t order, std::vector<Elem> table, std::string spec,
              std::vector<std::string> labels);

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  // g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }
  // x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem pow(Elem x, std::uint64_t k) const;
  std::size_t element_order(Elem x) const { return orders_[x]; }
  const std::vector<std::size_t>& element_orders() const { return orders_; }

  std::span<const Elem> table() const { return table_; }
  const std::vector<Elem>& generators() const { return generators_; }

  bool is_abelian() const { return center_.size() == order_; }
  bool in_center(Elem x) const { return center_mask_[x]; }
  const std::vector<Elem>& center_elements() const { return center_; }
  const std::vector<Elem>& derived_elements() const { return derived_; }

  const std::string& spec() const { return spec_; }
  bool has_spec() const { return !spec_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem x) const;

  bool is_product() const { return !factors_.empty(); }
  const std::vector<GroupPtr>& factors() const { return factors_; }
  Elem coordinate(Elem x, std::size_t i) const {
    return static_cast<Elem>((x / radix_[i]) % factors_[i]->order());
  }
  std::vector<Elem> decode(Elem x) const;
  Elem encode(std::span<const Elem> coords) const;
  // Element of factor i placed in slot i, identity elsewhere.
  Elem embed(std::size_t i, Elem x) const;

 private:
  void compute_structure();

  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
  std::vector<Elem> center_;
  std::vector<bool> center_mask_;
  std::vector<Elem> derived_;
  std::string spec_;
  std::vector<std::string> labels_;
  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> radix_;
};

// Same multiplication table (pointer identity is the fast path).
bool same_group(const FiniteGroup& a, const FiniteGroup& b);
bool same_group(const GroupPtr& a, const GroupPtr& b);

// Smallest subgroup containing the given elements.
std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens);

class Subgroup {
 public:
  // Throws StructuralError unless the elements form a subgroup.
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup generated(GroupPtr parent, std::span<const Elem> gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem x) const { return mask_[x]; }
  const std::vector<bool>& mask() const { return mask_; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == parent_->order(); }
  bool is_normal() const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  struct Trusted {};
  Subgroup(GroupPtr parent, std::vector<Elem> elements, Trusted);
  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<bool> mask_;
};

struct DirectFactorization {
  Subgroup left;
  Subgroup right;
};

// A subgroup re-indexed as a group of its own. embedding[i] is the parent
// element playing the role of element i.
struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<Elem> embedding;
};
SubgroupAsGroup as_group(const Subgroup& s);

}  // namespace groupdet
