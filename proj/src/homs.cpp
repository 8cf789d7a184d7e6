#include "groupdet/homs.hpp"

#include <algorithm>

#include "groupdet/error.hpp"

namespace groupdet {

namespace {

struct Edge {
  Elem y;
  Elem x;
  std::uint32_t j;
};

// Level l introduces generator l. defs[l] gives the new elements of
// <g_0..g_l> in an order where each is a known element times a generator;
// checks[l] holds the relations that become decidable at level l.
struct Plan {
  std::vector<Elem> gens;
  std::vector<std::vector<Edge>> defs;
  std::vector<std::vector<Edge>> checks;
};

Plan make_plan(const FiniteGroup& h) {
  Plan p;
  p.gens = h.generators();
  const std::size_t r = p.gens.size();
  p.defs.resize(r);
  p.checks.resize(r);
  std::vector<bool> in(h.order(), false);
  std::vector<Elem> members{h.identity()};
  in[h.identity()] = true;
  for (std::size_t l = 0; l < r; ++l) {
    const std::size_t old = members.size();
    auto visit = [&](Elem x, std::uint32_t j) {
      Elem y = h.mul(x, p.gens[j]);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        p.defs[l].push_back({y, x, j});
      } else {
        p.checks[l].push_back({y, x, j});
      }
    };
    for (std::size_t i = 0; i < old; ++i) visit(members[i], static_cast<std::uint32_t>(l));
    for (std::size_t i = old; i < members.size(); ++i)
      for (std::uint32_t j = 0; j <= l; ++j) visit(members[i], j);
  }
  return p;
}

class Searcher {
 public:
  Searcher(const GroupPtr& h, const GroupPtr& k, const HomSearchOptions& opts, std::mt19937_64* rng)
      : h_(*h), k_(*k), opts_(opts), rng_(rng), plan_(make_plan(h_)) {
    constexpr Elem unset = ~Elem{0};
    f_.assign(h_.order(), unset);
    f_[h_.identity()] = k_.identity();
    if (opts_.injective) {
      used_.assign(k_.order(), false);
      used_[k_.identity()] = true;
    }
    img_.resize(plan_.gens.size());
    assigned_.assign(plan_.gens.size(), 0);
    cands_.resize(plan_.gens.size());
    for (std::size_t l = 0; l < plan_.gens.size(); ++l) {
      std::size_t ord = h_.element_order(plan_.gens[l]);
      for (Elem c = 0; c < k_.order(); ++c) {
        std::size_t oc = k_.element_order(c);
        bool ok = opts_.injective ? oc == ord : ord % oc == 0;
        if (opts_.restrict_codomain && !opts_.restrict_codomain->contains(c)) ok = false;
        if (ok) cands_[l].push_back(c);
      }
    }
  }

  bool run(const HomVisitor& visit) { return descend(0, visit); }

 private:
  bool descend(std::size_t l, const HomVisitor& visit) {
    if (l == plan_.gens.size()) return visit(f_);
    std::vector<Elem> order = cands_[l];
    if (rng_) std::shuffle(order.begin(), order.end(), *rng_);
    for (Elem c : order) {
      img_[l] = c;
      if (!assign(l)) {
        undo(l);
        continue;
      }
      bool keep_going = descend(l + 1, visit);
      undo(l);
      if (!keep_going) return false;
    }
    return true;
  }

  bool assign(std::size_t l) {
    std::size_t& assigned = assigned_[l];
    assigned = 0;
    for (const Edge& e : plan_.defs[l]) {
      Elem v = k_.mul(f_[e.x], img_[e.j]);
      if (opts_.injective) {
        if (used_[v]) return false;
        used_[v] = true;
      }
      f_[e.y] = v;
      ++assigned;
    }
    for (const Edge& e : plan_.checks[l])
      if (f_[e.y] != k_.mul(f_[e.x], img_[e.j])) return false;
    return true;
  }

  void undo(std::size_t l) {
    constexpr Elem unset = ~Elem{0};
    for (std::size_t i = 0; i < assigned_[l]; ++i) {
      Elem y = plan_.defs[l][i].y;
      if (opts_.injective) used_[f_[y]] = false;
      f_[y] = unset;
    }
    assigned_[l] = 0;
  }

  const FiniteGroup& h_;
  const FiniteGroup& k_;
  HomSearchOptions opts_;
  std::mt19937_64* rng_;
  Plan plan_;
  std::vector<Elem> f_;
  std::vector<bool> used_;
  std::vector<Elem> img_;
  std::vector<std::vector<Elem>> cands_;
  std::vector<std::size_t> assigned_;
};

void check_restriction(const GroupPtr& k, const HomSearchOptions& opts) {
  if (opts.restrict_codomain && !same_group(opts.restrict_codomain->parent(), k))
    throw StructuralError("codomain restriction is not a subgroup of the codomain");
}

}  // namespace

bool for_each_hom(const GroupPtr& h, const GroupPtr& k, const HomVisitor& visit, const HomSearchOptions& opts) {
  check_restriction(k, opts);
  if (opts.injective && h->order() > k->order()) return true;
  Searcher s(h, k, opts, nullptr);
  return s.run(visit);
}

HomSet enumerate_homs(const GroupPtr& h, const GroupPtr& k, const Subgroup* restrict_codomain) {
  HomSearchOptions opts;
  opts.restrict_codomain = restrict_codomain;
  HomSet out{h, k, {}};
  std::vector<std::vector<Elem>> found;
  for_each_hom(h, k, [&](const std::vector<Elem>& v) {
    found.push_back(v);
    return true;
  }, opts);
  std::sort(found.begin(), found.end());
  out.members.reserve(found.size());
  for (auto& v : found) out.members.emplace_back(h, k, std::move(v), HomStatus::homomorphism);
  return out;
}

HomSet enumerate_endos(const GroupPtr& g) { return enumerate_homs(g, g); }

HomSet enumerate_autos(const GroupPtr& g) {
  HomSearchOptions opts;
  opts.injective = true;
  HomSet out{g, g, {}};
  std::vector<std::vector<Elem>> found;
  for_each_hom(g, g, [&](const std::vector<Elem>& v) {
    found.push_back(v);
    return true;
  }, opts);
  std::sort(found.begin(), found.end());
  for (auto& v : found) out.members.emplace_back(g, g, std::move(v), HomStatus::homomorphism);
  return out;
}

HomSet enumerate_central_homs(const GroupPtr& h, const GroupPtr& k) {
  Subgroup z(k, k->center_elements());
  return enumerate_homs(h, k, &z);
}

std::uint64_t count_homs(const GroupPtr& h, const GroupPtr& k, const HomSearchOptions& opts) {
  std::uint64_t n = 0;
  for_each_hom(h, k, [&n](const std::vector<Elem>&) {
    ++n;
    return true;
  }, opts);
  return n;
}

GroupMap random_hom(const GroupPtr& h, const GroupPtr& k, std::mt19937_64& rng, const HomSearchOptions& opts) {
  check_restriction(k, opts);
  std::vector<Elem> result;
  Searcher s(h, k, opts, &rng);
  s.run([&result](const std::vector<Elem>& v) {
    result = v;
    return false;
  });
  if (result.empty()) throw PreconditionError("random_hom: no homomorphism satisfies the constraints");
  return GroupMap(h, k, std::move(result), HomStatus::homomorphism);
}

}  // namespace groupdet
