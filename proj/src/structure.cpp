#include "groupdet/structure.hpp"

#include <algorithm>

#include "groupdet/homs.hpp"

namespace groupdet {

namespace {

std::vector<Elem> product_set(const FiniteGroup& g, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out;
  for (Elem x : a)
    for (Elem y : b) {
      Elem z = g.mul(x, y);
      if (!in[z]) {
        in[z] = true;
        out.push_back(z);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> normal_closure_of(const FiniteGroup& g, Elem x) {
  std::vector<Elem> seeds;
  std::vector<bool> in(g.order(), false);
  for (Elem h = 0; h < g.order(); ++h) {
    Elem c = g.conj(x, h);
    if (!in[c]) {
      in[c] = true;
      seeds.push_back(c);
    }
  }
  return closure(g, seeds);
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> p = g.element_orders();
  std::sort(p.begin(), p.end());
  return p;
}

std::optional<CommonFactor> common_factor_search(const GroupPtr& h, const GroupPtr& k, bool central) {
  if (h->order() > 1 && same_group(h, k) && (!central || h->is_abelian())) {
    auto whole = Subgroup::whole(h);
    std::vector<Elem> iso = whole.elements();
    return CommonFactor{whole, Subgroup::trivial(h), Subgroup::whole(k), Subgroup::trivial(k), iso};
  }
  auto keep = [central](const GroupPtr& g) {
    std::vector<DirectFactor> fs = direct_factor_types(g);
    if (central)
      std::erase_if(fs, [&g](const DirectFactor& f) {
        return !std::all_of(f.factor.elements().begin(), f.factor.elements().end(),
                            [&g](Elem x) { return g->in_center(x); });
      });
    return fs;
  };
  auto fh = keep(h);
  auto fk = keep(k);
  for (const auto& a : fh)
    for (const auto& b : fk) {
      if (a.factor.order() != b.factor.order()) continue;
      auto ga = as_group(a.factor);
      auto gb = as_group(b.factor);
      auto iso = are_isomorphic(ga.group, gb.group);
      if (!iso) continue;
      std::vector<Elem> m(a.factor.order());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = gb.embedding[(*iso)(static_cast<Elem>(i))];
      return CommonFactor{a.factor, a.complement, b.factor, b.complement, std::move(m)};
    }
  return std::nullopt;
}

}  // namespace

Subgroup center(const GroupPtr& g) { return Subgroup(g, g->center_elements()); }

Subgroup derived_subgroup(const GroupPtr& g) { return Subgroup(g, g->derived_elements()); }

bool is_stem(const GroupPtr& g) {
  const auto& d = g->derived_elements();
  for (Elem z : g->center_elements())
    if (!std::binary_search(d.begin(), d.end(), z)) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::vector<std::vector<Elem>> closures;
  for (Elem x = 0; x < g->order(); ++x) {
    auto c = normal_closure_of(*g, x);
    if (std::find(closures.begin(), closures.end(), c) == closures.end()) closures.push_back(std::move(c));
  }
  std::vector<std::vector<Elem>> found{{g->identity()}};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& c : closures) {
      auto p = product_set(*g, found[i], c);
      if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(std::move(p));
    }
  std::vector<Subgroup> out;
  for (auto& s : found) out.emplace_back(g, std::move(s));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<DirectFactorization> direct_factorizations(const GroupPtr& g) {
  auto ns = normal_subgroups(g);
  std::vector<DirectFactorization> out;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i; j < ns.size(); ++j) {
      const auto& a = ns[i];
      const auto& b = ns[j];
      if (a.order() * b.order() != g->order()) continue;
      bool disjoint = true;
      for (Elem x : a.elements())
        if (x != g->identity() && b.contains(x)) {
          disjoint = false;
          break;
        }
      if (disjoint) out.push_back({a, b});
    }
  return out;
}

std::vector<DirectFactor> direct_factor_types(const GroupPtr& g) {
  std::vector<DirectFactor> all;
  for (const auto& f : direct_factorizations(g)) {
    if (!f.left.is_trivial()) all.push_back({f.left, f.right});
    if (!f.right.is_trivial() && !(f.left == f.right)) all.push_back({f.right, f.left});
  }
  std::stable_sort(all.begin(), all.end(), [](const DirectFactor& a, const DirectFactor& b) {
    if (a.factor.order() != b.factor.order()) return a.factor.order() > b.factor.order();
    return a.factor.elements() < b.factor.elements();
  });
  std::vector<DirectFactor> out;
  std::vector<GroupPtr> types;
  for (auto& f : all) {
    auto as = as_group(f.factor).group;
    bool dup = false;
    for (const auto& t : types)
      if (t->order() == as->order() && are_isomorphic(t, as)) {
        dup = true;
        break;
      }
    if (dup) continue;
    types.push_back(as);
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<GroupMap> are_isomorphic(const GroupPtr& g1, const GroupPtr& g2) {
  if (g1->order() != g2->order()) return std::nullopt;
  if (same_group(g1, g2)) return GroupMap(g1, g2, GroupMap::identity(g1).values(), HomStatus::homomorphism);
  if (g1->center_elements().size() != g2->center_elements().size() ||
      g1->derived_elements().size() != g2->derived_elements().size() || order_profile(*g1) != order_profile(*g2))
    return std::nullopt;
  HomSearchOptions opts;
  opts.injective = true;
  std::optional<GroupMap> out;
  for_each_hom(g1, g2, [&](const std::vector<Elem>& v) {
    out.emplace(g1, g2, v, HomStatus::homomorphism);
    return false;
  }, opts);
  return out;
}

std::optional<CommonFactor> common_nontrivial_factor(const GroupPtr& h, const GroupPtr& k) {
  return common_factor_search(h, k, false);
}

std::optional<CommonFactor> common_central_factor(const GroupPtr& h, const GroupPtr& k) {
  return common_factor_search(h, k, true);
}

}  // namespace groupdet
