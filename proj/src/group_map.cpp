#include "groupdet/group_map.hpp"

#include <algorithm>

#include "groupdet/error.hpp"

namespace groupdet {

GroupMap::GroupMap(GroupPtr domain, GroupPtr codomain, std::vector<Elem> values, HomStatus status)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(std::move(values)),
      hom_(static_cast<std::uint8_t>(status)) {
  if (values_.size() != domain_->order())
    throw StructuralError("map has " + std::to_string(values_.size()) + " values for a domain of order " +
                          std::to_string(domain_->order()));
  for (Elem v : values_)
    if (v >= codomain_->order()) throw StructuralError("map value out of codomain range");
}

GroupMap::GroupMap(const GroupMap& o)
    : domain_(o.domain_), codomain_(o.codomain_), values_(o.values_), hom_(o.hom_.load()) {}

GroupMap::GroupMap(GroupMap&& o) noexcept
    : domain_(std::move(o.domain_)),
      codomain_(std::move(o.codomain_)),
      values_(std::move(o.values_)),
      hom_(o.hom_.load()) {}

GroupMap& GroupMap::operator=(const GroupMap& o) {
  if (this != &o) {
    domain_ = o.domain_;
    codomain_ = o.codomain_;
    values_ = o.values_;
    hom_.store(o.hom_.load());
  }
  return *this;
}

GroupMap& GroupMap::operator=(GroupMap&& o) noexcept {
  domain_ = std::move(o.domain_);
  codomain_ = std::move(o.codomain_);
  values_ = std::move(o.values_);
  hom_.store(o.hom_.load());
  return *this;
}

GroupMap GroupMap::identity(const GroupPtr& g) {
  std::vector<Elem> v(g->order());
  for (Elem x = 0; x < v.size(); ++x) v[x] = x;
  return GroupMap(g, g, std::move(v), HomStatus::homomorphism);
}

GroupMap GroupMap::zero(const GroupPtr& domain, const GroupPtr& codomain) {
  return GroupMap(domain, codomain, std::vector<Elem>(domain->order(), codomain->identity()),
                  HomStatus::homomorphism);
}

bool GroupMap::is_zero() const {
  const Elem e = codomain_->identity();
  return std::all_of(values_.begin(), values_.end(), [e](Elem v) { return v == e; });
}

bool operator==(const GroupMap& a, const GroupMap& b) {
  return a.values_ == b.values_ && same_group(a.domain_, b.domain_) && same_group(a.codomain_, b.codomain_);
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  if (!same_group(g.codomain(), f.domain())) throw StructuralError("compose: codomain of g is not the domain of f");
  std::vector<Elem> v(g.domain()->order());
  for (Elem x = 0; x < v.size(); ++x) v[x] = f(g(x));
  bool hom = f.hom_status() == HomStatus::homomorphism && g.hom_status() == HomStatus::homomorphism;
  return GroupMap(g.domain(), f.codomain(), std::move(v), hom ? HomStatus::homomorphism : HomStatus::unknown);
}

namespace {

void check_same_shape(const GroupMap& f, const GroupMap& g, const char* op) {
  if (!same_group(f.domain(), g.domain()) || !same_group(f.codomain(), g.codomain()))
    throw StructuralError(std::string(op) + ": maps have different domain or codomain");
}

void require_commuting(const FiniteGroup& c, Elem a, Elem b, Elem x) {
  if (c.mul(a, b) != c.mul(b, a))
    throw StructuralError("pointwise operation on non-commuting images at element " + std::to_string(x));
}

}  // namespace

GroupMap pointwise_sum(const GroupMap& f, const GroupMap& g, Commute c) {
  check_same_shape(f, g, "pointwise_sum");
  const auto& cod = *f.codomain();
  std::vector<Elem> v(f.values().size());
  for (Elem x = 0; x < v.size(); ++x) {
    if (c == Commute::require) require_commuting(cod, f(x), g(x), x);
    v[x] = cod.mul(f(x), g(x));
  }
  return GroupMap(f.domain(), f.codomain(), std::move(v));
}

GroupMap pointwise_diff(const GroupMap& f, const GroupMap& g, Commute c) {
  check_same_shape(f, g, "pointwise_diff");
  const auto& cod = *f.codomain();
  std::vector<Elem> v(f.values().size());
  for (Elem x = 0; x < v.size(); ++x) {
    if (c == Commute::require) require_commuting(cod, f(x), g(x), x);
    v[x] = cod.mul(f(x), cod.inv(g(x)));
  }
  return GroupMap(f.domain(), f.codomain(), std::move(v));
}

GroupMap negate(const GroupMap& f) {
  const auto& cod = *f.codomain();
  std::vector<Elem> v(f.values().size());
  for (Elem x = 0; x < v.size(); ++x) v[x] = cod.inv(f(x));
  return GroupMap(f.domain(), f.codomain(), std::move(v));
}

GroupMap power(const GroupMap& f, std::size_t r) {
  if (!f.is_endo()) throw StructuralError("power of a map that is not a self-map");
  GroupMap out = GroupMap::identity(f.domain());
  for (std::size_t i = 0; i < r; ++i) out = compose(f, out);
  return out;
}

bool is_homomorphism(const GroupMap& f) {
  HomStatus s = f.hom_status();
  if (s != HomStatus::unknown) return s == HomStatus::homomorphism;
  const auto& d = *f.domain();
  const auto& c = *f.codomain();
  bool ok = f(d.identity()) == c.identity();
  for (Elem x = 0; ok && x < d.order(); ++x)
    for (Elem s : d.generators())
      if (f(d.mul(x, s)) != c.mul(f(x), f(s))) {
        ok = false;
        break;
      }
  f.set_hom_status(ok ? HomStatus::homomorphism : HomStatus::not_homomorphism);
  return ok;
}

bool is_normal_endo(const GroupMap& f) {
  if (!f.is_endo()) throw StructuralError("is_normal_endo: domain and codomain differ");
  if (!is_homomorphism(f)) return false;
  const auto& g = *f.domain();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem s : g.generators())
      if (f(g.conj(x, s)) != g.conj(f(x), s)) return false;
  return true;
}

bool images_commute(const GroupMap& f, const GroupMap& g) {
  if (!same_group(f.codomain(), g.codomain())) throw StructuralError("images_commute: different codomains");
  const auto& c = *f.codomain();
  std::vector<bool> fi(c.order(), false), gi(c.order(), false);
  for (Elem v : f.values()) fi[v] = true;
  for (Elem v : g.values()) gi[v] = true;
  for (Elem a = 0; a < c.order(); ++a) {
    if (!fi[a]) continue;
    for (Elem b = 0; b < c.order(); ++b)
      if (gi[b] && c.mul(a, b) != c.mul(b, a)) return false;
  }
  return true;
}

bool image_in_center(const GroupMap& f) {
  const auto& c = *f.codomain();
  return std::all_of(f.values().begin(), f.values().end(), [&c](Elem v) { return c.in_center(v); });
}

bool is_central_endo(const GroupMap& f) {
  if (!f.is_endo()) return false;
  const auto& g = *f.domain();
  for (Elem x = 0; x < g.order(); ++x)
    if (!g.in_center(g.mul(g.inv(x), f(x)))) return false;
  return true;
}

bool is_bijective(const GroupMap& f, OpCounter* counter) {
  const std::size_t n = f.domain()->order();
  if (n != f.codomain()->order()) return false;
  const auto& v = f.values();
  if (counter) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        ++counter->comparisons;
        if (v[i] == v[j]) return false;
      }
    return true;
  }
  std::vector<bool> hit(n, false);
  for (Elem y : v) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

GroupMap invert(const GroupMap& f, OpCounter* counter) {
  const std::size_t n = f.domain()->order();
  if (n != f.codomain()->order()) throw InversionError("invert: domain and codomain have different orders");
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> inv(n, unset);
  for (Elem x = 0; x < n; ++x) {
    if (counter) ++counter->lookups;
    Elem y = f(x);
    if (inv[y] != unset) throw InversionError("invert: map is not injective");
    inv[y] = x;
  }
  HomStatus s = f.hom_status() == HomStatus::homomorphism ? HomStatus::homomorphism : HomStatus::unknown;
  return GroupMap(f.codomain(), f.domain(), std::move(inv), s);
}

Subgroup image(const GroupMap& f) {
  if (!is_homomorphism(f)) throw PreconditionError("image: map is not a homomorphism");
  std::vector<Elem> v = f.values();
  return Subgroup(f.codomain(), std::move(v));
}

Subgroup kernel(const GroupMap& f) {
  if (!is_homomorphism(f)) throw PreconditionError("kernel: map is not a homomorphism");
  std::vector<Elem> k;
  for (Elem x = 0; x < f.values().size(); ++x)
    if (f(x) == f.codomain()->identity()) k.push_back(x);
  return Subgroup(f.domain(), std::move(k));
}

FittingDecomposition fitting_decomposition(const GroupMap& f) {
  if (!f.is_endo()) throw PreconditionError("fitting_decomposition: not an endomorphism");
  if (!is_normal_endo(f)) throw PreconditionError("fitting_decomposition: not a normal endomorphism");
  GroupMap cur = f;
  for (std::size_t r = 1;; ++r) {
    GroupMap next = compose(f, cur);
    Subgroup im = image(cur), ke = kernel(cur);
    if (im == image(next) && ke == kernel(next)) return {r, std::move(im), std::move(ke)};
    cur = std::move(next);
  }
}

}  // namespace groupdet
