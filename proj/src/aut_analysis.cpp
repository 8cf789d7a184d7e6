#include "groupdet/aut_analysis.hpp"

#include <set>

#include "groupdet/catalog.hpp"
#include "groupdet/determinant.hpp"
#include "groupdet/error.hpp"

namespace groupdet {

namespace {

using Key = std::vector<Elem>;

Key key_of(const EndoMatrix& m) {
  Key k;
  for (const auto& e : m.entries()) k.insert(k.end(), e.values().begin(), e.values().end());
  return k;
}

void check_size(std::uint64_t size, const EnumLimits& limits, const char* what) {
  if (size > limits.max_members)
    throw ResourceError(std::string(what) + " has " + std::to_string(size) + " members, above the limit of " +
                        std::to_string(limits.max_members));
}

// Projections of an internal direct product g = x * m onto each factor.
std::pair<std::vector<Elem>, std::vector<Elem>> split(const GroupPtr& g, const Subgroup& x, const Subgroup& m) {
  std::vector<Elem> px(g->order()), pm(g->order());
  for (Elem a : x.elements())
    for (Elem b : m.elements()) {
      Elem e = g->mul(a, b);
      px[e] = a;
      pm[e] = b;
    }
  return {px, pm};
}

}  // namespace

AutComparison compare_aut_vs_A(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits,
                               std::size_t max_witnesses) {
  auto p = ProductGroup::of({h, k});
  if (p.product->order() > limits.max_product_order)
    throw ResourceError("product order " + std::to_string(p.product->order()) + " is above the enumeration bound");
  ASpace a({h, k});
  check_size(a.size(), limits, "A");
  AutComparison r;
  r.a_subset_aut = true;
  r.aut_subset_a = true;
  a.for_each([&](const EndoMatrix& m) {
    ++r.a_order;
    if (!is_bijective(recompose(p, m))) {
      r.a_subset_aut = false;
      if (r.a_not_in_aut.size() < max_witnesses) r.a_not_in_aut.push_back(m);
    }
    return true;
  });
  for_each_aut_matrix(
      p,
      [&](const EndoMatrix& m) {
        ++r.aut_order;
        if (!in_A(m)) {
          r.aut_subset_a = false;
          if (r.aut_not_in_a.size() < max_witnesses) r.aut_not_in_a.push_back(m);
        }
        return true;
      },
      limits);
  return r;
}

bool is_central_automorphism(const GroupMap& f) {
  if (!f.is_endo() || !is_bijective(f) || !is_homomorphism(f)) return false;
  const auto& g = *f.domain();
  for (Elem x = 0; x < g.order(); ++x)
    if (!g.in_center(g.mul(g.inv(x), f(x)))) return false;
  return true;
}

std::vector<GroupMap> central_aut_group(const GroupPtr& g) {
  std::vector<GroupMap> out;
  for (const auto& f : enumerate_autos(g))
    if (is_central_automorphism(f)) out.push_back(f);
  return out;
}

AutComparison compare_autc_vs_Z(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits,
                                std::size_t max_witnesses) {
  auto p = ProductGroup::of({h, k});
  if (p.product->order() > limits.max_product_order)
    throw ResourceError("product order " + std::to_string(p.product->order()) + " is above the enumeration bound");
  ASpace z({h, k}, true);
  check_size(z.size(), limits, "Z");
  AutComparison r;
  r.a_subset_aut = true;
  r.aut_subset_a = true;
  z.for_each([&](const EndoMatrix& m) {
    ++r.a_order;
    if (!is_central_automorphism(recompose(p, m))) {
      r.a_subset_aut = false;
      if (r.a_not_in_aut.size() < max_witnesses) r.a_not_in_aut.push_back(m);
    }
    return true;
  });
  for_each_aut_matrix(
      p,
      [&](const EndoMatrix& m) {
        if (!is_central_automorphism(recompose(p, m))) return true;
        ++r.aut_order;
        if (!in_Z(m)) {
          r.aut_subset_a = false;
          if (r.aut_not_in_a.size() < max_witnesses) r.aut_not_in_a.push_back(m);
        }
        return true;
      },
      limits);
  return r;
}

EndoMatrix common_factor_automorphism(const GroupPtr& h, const GroupPtr& k, const CommonFactor& cf) {
  const auto& xs = cf.h_factor.elements();
  if (xs.size() != cf.k_factor.order() || cf.iso.size() != xs.size())
    throw PreconditionError("common factor witness has mismatched sizes");
  std::vector<Elem> phi(h->order(), 0), phi_inv(k->order(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    phi[xs[i]] = cf.iso[i];
    phi_inv[cf.iso[i]] = xs[i];
  }
  auto [px, pm] = split(h, cf.h_factor, cf.h_complement);
  auto [py, pn] = split(k, cf.k_factor, cf.k_complement);
  std::vector<Elem> a(h->order()), g(h->order()), b(k->order()), d(k->order());
  for (Elem x = 0; x < h->order(); ++x) {
    a[x] = pm[x];
    g[x] = phi[px[x]];
  }
  for (Elem y = 0; y < k->order(); ++y) {
    b[y] = phi_inv[py[y]];
    d[y] = pn[y];
  }
  return EndoMatrix::two_by_two(GroupMap(h, h, a), GroupMap(k, h, b), GroupMap(h, k, g), GroupMap(k, k, d));
}

StemSemidirect verify_stem_semidirect(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits) {
  if (!is_stem(h) || !is_stem(k)) throw PreconditionError("verify_stem_semidirect: both groups must be stem groups");
  if (common_nontrivial_factor(h, k)) throw PreconditionError("verify_stem_semidirect: the groups share a direct factor");
  auto all = enumerate_A({h, k}, limits);
  StemSemidirect r;
  r.group_order = all.size();
  std::set<Key> keys;
  for (const auto& m : all) keys.insert(key_of(m));

  std::vector<EndoMatrix> n, d, u, l;
  const auto id_h = GroupMap::identity(h), id_k = GroupMap::identity(k);
  for (const auto& m : all) {
    if (m.alpha() == id_h && m.delta() == id_k) {
      n.push_back(m);
      if (m.gamma().is_zero()) u.push_back(m);
      if (m.beta().is_zero()) l.push_back(m);
    }
    if (m.beta().is_zero() && m.gamma().is_zero()) d.push_back(m);
  }
  r.n_order = n.size();
  r.d_order = d.size();

  r.closed = true;
  for (const auto& a : all) {
    for (const auto& b : all)
      if (!keys.count(key_of(matrix_multiply(a, b)))) {
        r.closed = false;
        break;
      }
    if (!r.closed) break;
  }

  std::set<Key> n_keys;
  for (const auto& m : n) n_keys.insert(key_of(m));
  r.n_normal = true;
  for (const auto& a : all) {
    EndoMatrix ai = invert_via_det_pleasant(a);
    for (const auto& x : n)
      if (!n_keys.count(key_of(matrix_multiply(matrix_multiply(a, x), ai)))) {
        r.n_normal = false;
        break;
      }
    if (!r.n_normal) break;
  }

  r.unitriangular_commute = true;
  for (const auto& a : u)
    for (const auto& b : l)
      if (!(matrix_multiply(a, b) == matrix_multiply(b, a))) r.unitriangular_commute = false;

  std::size_t shared = 0;
  for (const auto& m : d)
    if (n_keys.count(key_of(m))) ++shared;
  r.d_meets_n_trivially = shared == 1;

  std::set<Key> dn;
  for (const auto& a : d)
    for (const auto& b : n) dn.insert(key_of(matrix_multiply(a, b)));
  r.dn_is_everything = dn == keys;
  return r;
}

NonCommutingPair q8_noncommuting_witness() {
  auto q8 = quaternion();
  auto c2 = cyclic(2);
  // Index 1 is -1, the generator of Z(Q8); indices 0..3 are ±1, ±i.
  GroupMap beta(c2, q8, {0, 1});
  GroupMap gamma(q8, c2, {0, 0, 0, 0, 1, 1, 1, 1});
  auto id_q = GroupMap::identity(q8), id_c = GroupMap::identity(c2);
  auto u = EndoMatrix::two_by_two(id_q, beta, GroupMap::zero(q8, c2), id_c);
  auto l = EndoMatrix::two_by_two(id_q, GroupMap::zero(c2, q8), gamma, id_c);
  auto ul = matrix_multiply(u, l);
  auto lu = matrix_multiply(l, u);
  return {u, l, ul, lu};
}

std::array<bool, 8> check_cases(const EndoMatrix& phi, const EndoMatrix& inv) {
  if (phi.size() != 2 || inv.size() != 2) throw PreconditionError("check_cases needs 2x2 matrices");
  const auto& h = phi.factors()[0];
  const auto& k = phi.factors()[1];
  const auto &a = phi.alpha(), &b = phi.beta(), &c = phi.gamma(), &d = phi.delta();
  const auto &a1 = inv.alpha(), &b1 = inv.beta(), &c1 = inv.gamma(), &d1 = inv.delta();
  auto sum = [](const GroupMap& x, const GroupMap& y) { return pointwise_sum(x, y, Commute::require); };
  return {
      sum(compose(a, a1), compose(b, c1)) == GroupMap::identity(h),
      sum(compose(a, b1), compose(b, d1)).is_zero(),
      sum(compose(c, a1), compose(d, c1)).is_zero(),
      sum(compose(c, b1), compose(d, d1)) == GroupMap::identity(k),
      sum(compose(a1, a), compose(b1, c)) == GroupMap::identity(h),
      sum(compose(a1, b), compose(b1, d)).is_zero(),
      sum(compose(c1, a), compose(d1, c)).is_zero(),
      sum(compose(c1, b), compose(d1, d)) == GroupMap::identity(k),
  };
}

bool NormCheck::all() const {
  for (bool b : h_side)
    if (!b) return false;
  for (bool b : k_side)
    if (!b) return false;
  return alpha_onto_beta_central && delta_onto_gamma_central;
}

bool NormCheck::images_all() const {
  for (bool b : h_side_images)
    if (!b) return false;
  for (bool b : k_side_images)
    if (!b) return false;
  return alpha_onto_beta_central && delta_onto_gamma_central;
}

NormCheck check_norm(const EndoMatrix& phi, const EndoMatrix& inv) {
  if (phi.size() != 2 || inv.size() != 2) throw PreconditionError("check_norm needs 2x2 matrices");
  NormCheck r;
  r.alpha_onto_beta_central = !is_bijective(phi.alpha()) || image_in_center(phi.beta());
  r.delta_onto_gamma_central = !is_bijective(phi.delta()) || image_in_center(phi.gamma());
  const std::array<GroupMap, 4> hs = {phi.alpha(), inv.alpha(), compose(phi.beta(), inv.gamma()),
                                      compose(inv.beta(), phi.gamma())};
  const std::array<GroupMap, 4> ks = {phi.delta(), inv.delta(), compose(phi.gamma(), inv.beta()),
                                      compose(inv.gamma(), phi.beta())};
  for (std::size_t i = 0; i < 4; ++i) {
    r.h_side[i] = is_normal_endo(hs[i]);
    r.k_side[i] = is_normal_endo(ks[i]);
    r.h_side_images[i] = image(hs[i]).is_normal();
    r.k_side_images[i] = image(ks[i]).is_normal();
  }
  return r;
}

}  // namespace groupdet
