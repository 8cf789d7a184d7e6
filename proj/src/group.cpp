#include "groupdet/group.hpp"

#include <algorithm>
#include <random>

#include "groupdet/error.hpp"

namespace groupdet {

namespace {

void check_latin(std::size_t n, const std::vector<Elem>& table) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      Elem v = table[r * n + c];
      if (seen[v] == stamp)
        throw ValidationError("table is not a Latin square: row " + std::to_string(r) +
                              " repeats element " + std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      Elem v = table[r * n + c];
      if (seen[v] == stamp)
        throw ValidationError("table is not a Latin square: column " + std::to_string(c) +
                              " repeats element " + std::to_string(v));
      seen[v] = stamp;
    }
  }
}

void throw_assoc(Elem x, Elem y, Elem z) {
  throw ValidationError("table is not associative at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ", " + std::to_string(z) + ")",
                        {x, y, z}, true);
}

void check_associative(std::size_t n, const std::vector<Elem>& t, const ValidationOptions& opts) {
  auto mul = [&](Elem a, Elem b) { return t[std::size_t(a) * n + b]; };
  if (n <= opts.full_associativity_limit) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Elem xy = mul(x, y);
        for (Elem z = 0; z < n; ++z)
          if (mul(xy, z) != mul(x, mul(y, z))) throw_assoc(x, y, z);
      }
    return;
  }
  std::mt19937_64 rng(opts.sample_seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  const std::size_t samples = 10 * n * n;
  for (std::size_t s = 0; s < samples; ++s) {
    Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw_assoc(x, y, z);
  }
}

std::vector<Elem> normal_closure(const FiniteGroup& g, std::vector<Elem> seeds) {
  std::vector<Elem> s = closure(g, seeds);
  while (true) {
    std::vector<bool> in(g.order(), false);
    for (Elem x : s) in[x] = true;
    std::vector<Elem> extra;
    for (Elem x : s)
      for (Elem t : g.generators()) {
        Elem c = g.conj(x, t);
        if (!in[c]) {
          in[c] = true;
          extra.push_back(c);
        }
      }
    if (extra.empty()) return s;
    s.insert(s.end(), extra.begin(), extra.end());
    s = closure(g, s);
  }
}

}  // namespace

std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr FiniteGroup::from_table(std::vector<Elem> table, std::string spec,
                                 std::vector<std::string> labels, const ValidationOptions& opts) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size())
    throw ValidationError("table size " + std::to_string(table.size()) + " is not a square");
  for (Elem v : table)
    if (v >= n) throw ValidationError("table entry " + std::to_string(v) + " out of range");
  if (!labels.empty() && labels.size() != n)
    throw ValidationError("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  check_latin(n, table);
  check_associative(n, table, opts);
  return std::make_shared<const FiniteGroup>(Key{}, n, std::move(table), std::move(spec),
                                             std::move(labels));
}

FiniteGroup::FiniteGroup(Key, std::size_t order, std::vector<Elem> table, std::string spec,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), spec_(std::move(spec)), labels_(std::move(labels)) {
  bool found = false;
  for (Elem e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("table has no identity element");
  inverse_.assign(order_, 0);
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) {
        inverse_[x] = y;
        break;
      }
  compute_structure();
}

void FiniteGroup::compute_structure() {
  orders_.assign(order_, 1);
  for (Elem x = 0; x < order_; ++x) {
    Elem y = x;
    std::size_t k = 1;
    while (y != identity_) {
      y = mul(y, x);
      ++k;
    }
    orders_[x] = k;
  }

  std::vector<bool> in(order_, false);
  in[identity_] = true;
  std::size_t covered = 1;
  while (covered < order_) {
    Elem best = 0;
    std::size_t best_order = 0;
    for (Elem x = 0; x < order_; ++x)
      if (!in[x] && orders_[x] > best_order) {
        best = x;
        best_order = orders_[x];
      }
    generators_.push_back(best);
    auto span = closure(*this, generators_);
    for (Elem x : span) in[x] = true;
    covered = span.size();
  }

  center_mask_.assign(order_, false);
  for (Elem z = 0; z < order_; ++z) {
    bool central = true;
    for (Elem s : generators_)
      if (mul(z, s) != mul(s, z)) {
        central = false;
        break;
      }
    if (central) {
      center_mask_[z] = true;
      center_.push_back(z);
    }
  }

  std::vector<Elem> comms;
  for (Elem a : generators_)
    for (Elem b : generators_) comms.push_back(commutator(a, b));
  derived_ = normal_closure(*this, comms);
}

Elem FiniteGroup::pow(Elem x, std::uint64_t k) const {
  Elem result = identity_;
  Elem base = x;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::string FiniteGroup::label(Elem x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

GroupPtr FiniteGroup::direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) throw StructuralError("direct product of no factors");
  if (factors.size() == 1) return factors.front();
  std::vector<std::size_t> radix(factors.size());
  std::size_t n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    radix[i] = n;
    n *= factors[i]->order();
  }
  std::vector<Elem> table(n * n);
  std::vector<Elem> a(factors.size()), b(factors.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < factors.size(); ++i) a[i] = (x / radix[i]) % factors[i]->order();
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Elem yi = static_cast<Elem>((y / radix[i]) % factors[i]->order());
        z += factors[i]->mul(a[i], yi) * radix[i];
      }
      table[x * n + y] = static_cast<Elem>(z);
    }
  }
  std::string spec;
  bool all_specs = true;
  bool all_labels = true;
  for (const auto& f : factors) {
    all_specs = all_specs && f->has_spec();
    all_labels = all_labels && !f->labels().empty();
  }
  if (all_specs)
    for (std::size_t i = 0; i < factors.size(); ++i)
      spec += (i ? " x " : "") + factors[i]->spec();
  std::vector<std::string> labels;
  if (all_labels) {
    labels.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::string l = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) l += ",";
        l += factors[i]->label(static_cast<Elem>((x / radix[i]) % factors[i]->order()));
      }
      labels.push_back(l + ")");
    }
  }
  auto g = std::make_shared<FiniteGroup>(Key{}, n, std::move(table), std::move(spec),
                                         std::move(labels));
  g->factors_ = factors;
  g->radix_ = std::move(radix);
  return g;
}

std::vector<Elem> FiniteGroup::decode(Elem x) const {
  std::vector<Elem> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = coordinate(x, i);
  return c;
}

Elem FiniteGroup::encode(std::span<const Elem> coords) const {
  std::size_t z = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) z += coords[i] * radix_[i];
  return static_cast<Elem>(z);
}

Elem FiniteGroup::embed(std::size_t i, Elem x) const {
  std::size_t z = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    z += (j == i ? x : factors_[j]->identity()) * radix_[j];
  return static_cast<Elem>(z);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  return std::equal(a.table().begin(), a.table().end(), b.table().begin());
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return same_group(*a, *b); }

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements, Trusted)
    : parent_(std::move(parent)), elements_(std::move(elements)), mask_(parent_->order(), false) {
  for (Elem x : elements_) mask_[x] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  mask_.assign(parent_->order(), false);
  for (Elem x : elements_) {
    if (x >= parent_->order()) throw StructuralError("subgroup element out of range");
    mask_[x] = true;
  }
  if (elements_.empty() || !mask_[parent_->identity()])
    throw StructuralError("subgroup must contain the identity");
  for (Elem x : elements_) {
    if (!mask_[parent_->inv(x)]) throw StructuralError("subset is not closed under inverses");
    for (Elem y : elements_)
      if (!mask_[parent_->mul(x, y)]) throw StructuralError("subset is not closed under products");
  }
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  return Subgroup(std::move(parent), std::move(all), Trusted{});
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  Elem e = parent->identity();
  return Subgroup(std::move(parent), {e}, Trusted{});
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Elem> gens) {
  auto elems = closure(*parent, gens);
  return Subgroup(std::move(parent), std::move(elems), Trusted{});
}

bool Subgroup::is_normal() const {
  for (Elem x : elements_)
    for (Elem g : parent_->generators())
      if (!mask_[parent_->conj(x, g)]) return false;
  return true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (Elem x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

SubgroupAsGroup as_group(const Subgroup& s) {
  const auto& g = *s.parent();
  const auto& el = s.elements();
  std::vector<Elem> index(g.order(), 0);
  for (Elem i = 0; i < el.size(); ++i) index[el[i]] = i;
  const std::size_t m = el.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = index[g.mul(el[i], el[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Elem x : el) labels.push_back(g.label(x));
  ValidationOptions sampled;
  sampled.full_associativity_limit = 0;
  auto sub = FiniteGroup::from_table(std::move(table), {}, std::move(labels), sampled);
  return {sub, el};
}

}  // namespace groupdet
