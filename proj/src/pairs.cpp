#include "groupdet/pairs.hpp"

#include <map>

#include "groupdet/error.hpp"
#include "groupdet/homs.hpp"

namespace groupdet {

namespace {

struct Scan {
  std::optional<CompatWitness> k_fixed;
  std::optional<CompatWitness> h_fixed;
  bool nilpotent = true;
  std::size_t length = 0;
  std::optional<CompatWitness> non_nilpotent;
};

std::optional<Elem> first_fixed_nontrivial(const GroupMap& f) {
  const auto& g = *f.domain();
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity() && f(x) == x) return x;
  return std::nullopt;
}

// Least n >= 1 with f^n = 0, or 0 if there is none. `stuck` receives an
// element whose orbit never reaches the identity.
std::size_t nil_index(const GroupMap& f, Elem* stuck) {
  const auto& g = *f.domain();
  GroupMap p = f;
  for (std::size_t n = 1; n <= g.order(); ++n) {
    if (p.is_zero()) return n;
    p = compose(f, p);
  }
  if (stuck)
    for (Elem x = 0; x < g.order(); ++x)
      if (p(x) != g.identity()) {
        *stuck = x;
        break;
      }
  return 0;
}

void check_pairs(std::size_t a, std::size_t b, const EnumLimits& limits, const char* what) {
  if (a != 0 && b > limits.max_members / a)
    throw ResourceError(std::string(what) + ": " + std::to_string(a) + " x " + std::to_string(b) +
                        " pairs exceed the limit of " + std::to_string(limits.max_members));
}

Scan scan(const GroupPtr& h, const GroupPtr& k, bool central, const EnumLimits& limits) {
  HomSet s = central ? enumerate_central_homs(h, k) : enumerate_homs(h, k);
  HomSet t = central ? enumerate_central_homs(k, h) : enumerate_homs(k, h);
  check_pairs(s.size(), t.size(), limits, "homomorphism pairs");
  Scan r;
  for (const auto& sigma : s)
    for (const auto& tau : t) {
      GroupMap st = compose(sigma, tau);
      GroupMap ts = compose(tau, sigma);
      if (!is_normal_endo(st) || !is_normal_endo(ts)) continue;
      if (!r.k_fixed)
        if (auto x = first_fixed_nontrivial(st)) r.k_fixed = CompatWitness{sigma, tau, Side::k, *x};
      if (!r.h_fixed)
        if (auto x = first_fixed_nontrivial(ts)) r.h_fixed = CompatWitness{sigma, tau, Side::h, *x};
      Elem stuck = 0;
      std::size_t nk = nil_index(st, &stuck);
      std::size_t nh = nil_index(ts, nullptr);
      if (nk == 0 && nh == 0) {
        if (r.nilpotent) r.non_nilpotent = CompatWitness{sigma, tau, Side::k, stuck};
        r.nilpotent = false;
        continue;
      }
      std::size_t len = nk == 0 ? nh : (nh == 0 ? nk : std::min(nk, nh));
      r.length = std::max(r.length, len);
    }
  return r;
}

IncompatResult from_scan(const Scan& s, Side side) {
  const auto& w = side == Side::k ? s.k_fixed : s.h_fixed;
  return {!w.has_value(), w};
}

TotalResult total_from_scan(const Scan& s) {
  TotalResult r;
  r.holds = s.nilpotent;
  if (s.nilpotent) r.length = s.length;
  r.witness = s.non_nilpotent;
  return r;
}

// Distinct compositions f∘g over f ∈ fs, g ∈ gs, with the first pair producing each.
std::map<std::vector<Elem>, std::pair<std::size_t, std::size_t>> products(const HomSet& fs, const HomSet& gs) {
  std::map<std::vector<Elem>, std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) out.emplace(compose(fs[i], gs[j]).values(), std::pair{i, j});
  return out;
}

}  // namespace

IncompatResult is_incompatible(const GroupPtr& h, const GroupPtr& k, Side side, const EnumLimits& limits) {
  return from_scan(scan(h, k, false, limits), side);
}

IncompatResult is_centrally_incompatible(const GroupPtr& h, const GroupPtr& k, Side side, const EnumLimits& limits) {
  return from_scan(scan(h, k, true, limits), side);
}

TotalResult is_totally_incompatible(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits) {
  return total_from_scan(scan(h, k, false, limits));
}

TotalResult is_centrally_totally_incompatible(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits) {
  return total_from_scan(scan(h, k, true, limits));
}

bool is_totally_incompatible_of_length(const GroupPtr& h, const GroupPtr& k, std::size_t n,
                                       const EnumLimits& limits) {
  if (n == 0) throw PreconditionError("length must be positive");
  auto r = is_totally_incompatible(h, k, limits);
  return r.holds && *r.length <= n;
}

bool is_centrally_totally_incompatible_of_length(const GroupPtr& h, const GroupPtr& k, std::size_t n,
                                                 const EnumLimits& limits) {
  if (n == 0) throw PreconditionError("length must be positive");
  auto r = is_centrally_totally_incompatible(h, k, limits);
  return r.holds && *r.length <= n;
}

SubgroupResult a_subgroup_check(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits) {
  HomSet mu = enumerate_central_homs(h, k);
  HomSet xi = enumerate_central_homs(k, h);
  check_pairs(mu.size(), xi.size(), limits, "central homomorphism pairs");
  HomSet aut_h = enumerate_autos(h);
  HomSet aut_k = enumerate_autos(k);
  auto theta_h = products(xi, mu);
  auto theta_k = products(mu, xi);
  check_pairs(aut_h.size(), theta_h.size(), limits, "automorphism sums");
  check_pairs(aut_k.size(), theta_k.size(), limits, "automorphism sums");
  const auto id_h = GroupMap::identity(h), id_k = GroupMap::identity(k);
  const auto zero_hk = GroupMap::zero(h, k), zero_kh = GroupMap::zero(k, h);

  for (const auto& lambda : aut_h)
    for (const auto& [values, ij] : theta_h) {
      GroupMap sum = pointwise_sum(lambda, GroupMap(h, h, values), Commute::require);
      if (is_bijective(sum)) continue;
      const auto& x = xi[ij.first];
      const auto& m = mu[ij.second];
      return {false, SubgroupWitness{Side::h, lambda, m, x, sum, EndoMatrix::two_by_two(lambda, x, zero_hk, id_k),
                                     EndoMatrix::two_by_two(id_h, zero_kh, m, id_k)}};
    }
  for (const auto& nu : aut_k)
    for (const auto& [values, ij] : theta_k) {
      GroupMap sum = pointwise_sum(nu, GroupMap(k, k, values), Commute::require);
      if (is_bijective(sum)) continue;
      const auto& m = mu[ij.first];
      const auto& x = xi[ij.second];
      return {false, SubgroupWitness{Side::k, nu, m, x, sum, EndoMatrix::two_by_two(id_h, zero_kh, m, nu),
                                     EndoMatrix::two_by_two(id_h, x, zero_hk, id_k)}};
    }
  return {true, std::nullopt};
}

ContainmentResult a_subset_aut_check(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits) {
  HomSet mu = enumerate_central_homs(h, k);
  HomSet xi = enumerate_central_homs(k, h);
  check_pairs(mu.size(), xi.size(), limits, "central homomorphism pairs");
  const auto id_h = GroupMap::identity(h);
  for (const auto& [values, ij] : products(xi, mu)) {
    if (is_bijective(pointwise_sum(id_h, GroupMap(h, h, values), Commute::require))) continue;
    return {false, EndoMatrix::two_by_two(id_h, negate(xi[ij.first]), mu[ij.second], GroupMap::identity(k))};
  }
  return {true, std::nullopt};
}

bool PairReport::theorems_hold() const {
  for (const auto& c : theorem_checks)
    if (c.applicable && !c.holds) return false;
  return true;
}

PairReport classify_pair(const GroupPtr& h, const GroupPtr& k, const EnumLimits& limits) {
  PairReport r;
  r.h_spec = h->has_spec() ? h->spec() : "";
  r.k_spec = k->has_spec() ? k->spec() : "";
  r.h_order = h->order();
  r.k_order = k->order();

  auto guarded = [&r](const std::string& section, const auto& fn) {
    try {
      fn();
    } catch (const ResourceError& e) {
      r.complete = false;
      r.notes.push_back(section + " skipped: " + e.what());
    }
  };

  guarded("incompatibility", [&] {
    Scan s = scan(h, k, false, limits);
    r.incompatible = !s.k_fixed;
    r.incompatible_h_side = !s.h_fixed;
    r.totally_incompatible = s.nilpotent;
    if (s.nilpotent) r.total_length = s.length;
    if (s.k_fixed) r.witnesses.push_back(*s.k_fixed);
    if (s.h_fixed) r.witnesses.push_back(*s.h_fixed);
    if (s.non_nilpotent) r.witnesses.push_back(*s.non_nilpotent);
  });
  guarded("central incompatibility", [&] {
    Scan s = scan(h, k, true, limits);
    r.centrally_incompatible = !s.k_fixed;
    r.centrally_incompatible_h_side = !s.h_fixed;
    r.centrally_totally_incompatible = s.nilpotent;
    if (s.nilpotent) r.central_total_length = s.length;
  });

  r.common_factor = common_nontrivial_factor(h, k);
  r.common_central_factor = common_central_factor(h, k);
  r.h_stem = is_stem(h);
  r.k_stem = is_stem(k);

  guarded("subgroup criterion", [&] { r.a_is_subgroup = a_subgroup_check(h, k, limits).holds; });
  guarded("containment criterion", [&] { r.a_subset_aut = a_subset_aut_check(h, k, limits).holds; });
  r.a_order = ASpace({h, k}).size();

  bool witness_ok = true;
  if (r.common_factor) {
    r.aut_subset_a = false;
    r.aut_witness = common_factor_automorphism(h, k, *r.common_factor);
    witness_ok = !in_A(*r.aut_witness) && is_bijective(recompose(*r.aut_witness));
  }
  const std::size_t product_order = h->order() * k->order();
  // With a common factor Aut can be far larger than A; only count it when End is small.
  bool enumerate = product_order <= limits.max_product_order &&
                   (!r.common_factor || MSpace({h, k}).size() <= limits.max_members);
  if (enumerate) {
    guarded("automorphism enumeration", [&] {
      auto p = ProductGroup::of({h, k});
      std::uint64_t count = 0;
      bool inside = true;
      for_each_aut_matrix(
          p,
          [&](const EndoMatrix& m) {
            ++count;
            if (!in_A(m)) {
              if (inside && !r.aut_witness) r.aut_witness = m;
              inside = false;
            }
            return true;
          },
          limits);
      r.aut_order = count;
      r.aut_subset_a = inside;
    });
  } else if (!r.common_factor) {
    r.complete = false;
    r.notes.push_back("automorphism enumeration skipped: product order " + std::to_string(product_order) +
                      " is above the bound " + std::to_string(limits.max_product_order));
  }
  if (r.a_subset_aut && r.aut_subset_a) r.a_equals_aut = *r.a_subset_aut && *r.aut_subset_a;

  const bool cf = r.common_factor.has_value();
  const bool ccf = r.common_central_factor.has_value();
  auto add = [&r](std::string name, bool applicable, bool holds) {
    r.theorem_checks.push_back({std::move(name), applicable, !applicable || holds});
  };
  auto known = [](const std::optional<bool>& b) { return b.has_value(); };
  auto iff = [](bool a, bool b) { return a == b; };

  add("incompatible_iff_no_common_factor", known(r.incompatible), known(r.incompatible) && iff(*r.incompatible, !cf));
  add("centrally_incompatible_iff_no_common_central_factor", known(r.centrally_incompatible),
      known(r.centrally_incompatible) && iff(*r.centrally_incompatible, !ccf));
  add("a_subgroup_iff_no_common_central_factor", known(r.a_is_subgroup),
      known(r.a_is_subgroup) && iff(*r.a_is_subgroup, !ccf));
  add("a_equals_aut_iff_no_common_factor", known(r.a_equals_aut), known(r.a_equals_aut) && iff(*r.a_equals_aut, !cf));
  add("centrally_incompatible_iff_a_subgroup", known(r.centrally_incompatible) && known(r.a_is_subgroup),
      known(r.centrally_incompatible) && known(r.a_is_subgroup) &&
          iff(*r.centrally_incompatible, *r.a_is_subgroup));
  add("fixed_point_sides_agree", known(r.incompatible) && known(r.centrally_incompatible),
      r.incompatible == r.incompatible_h_side && r.centrally_incompatible == r.centrally_incompatible_h_side);
  add("totally_implies_incompatible", known(r.totally_incompatible) && r.totally_incompatible.value(),
      r.incompatible.value_or(false));
  add("incompatible_implies_centrally_incompatible", known(r.incompatible) && r.incompatible.value(),
      r.centrally_incompatible.value_or(false));
  add("common_factor_implies_compatible", cf && known(r.incompatible), !r.incompatible.value_or(true));
  add("common_factor_gives_automorphism_outside_a", cf, witness_ok);
  add("totally_incompatible_implies_a_equals_aut", r.totally_incompatible.value_or(false) && known(r.a_equals_aut),
      r.a_equals_aut.value_or(false));
  add("stem_implies_a_subgroup", (r.h_stem || r.k_stem) && known(r.a_is_subgroup), r.a_is_subgroup.value_or(false));
  add("stem_implies_central_length_one", (r.h_stem || r.k_stem) && known(r.centrally_totally_incompatible),
      r.centrally_totally_incompatible.value_or(false) && r.central_total_length.value_or(2) <= 1);
  add("stem_without_common_factor_implies_a_equals_aut", (r.h_stem || r.k_stem) && !cf && known(r.a_equals_aut),
      r.a_equals_aut.value_or(false));
  add("a_subgroup_implies_a_subset_aut", r.a_is_subgroup.value_or(false) && known(r.a_subset_aut),
      r.a_subset_aut.value_or(false));
  bool no_homs = count_homs(h, k) == 1 && count_homs(k, h) == 1;
  if (no_homs && r.aut_order) {
    std::uint64_t expected = enumerate_autos(h).size() * enumerate_autos(k).size();
    add("no_homs_implies_aut_is_product", true, *r.aut_order == expected);
  } else {
    add("no_homs_implies_aut_is_product", false, true);
  }
  return r;
}

}  // namespace groupdet
