#include "groupdet/endo_matrix.hpp"

#include <algorithm>
#include <limits>

#include "groupdet/error.hpp"

namespace groupdet {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::size_t product_order(const std::vector<GroupPtr>& factors) {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f->order();
  return n;
}

// Distinct image elements, or empty when the codomain is abelian (everything commutes).
std::vector<Elem> image_list(const GroupMap& f) {
  if (f.codomain()->is_abelian()) return {};
  std::vector<Elem> v = f.values();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool lists_commute(const FiniteGroup& g, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  for (Elem x : a)
    for (Elem y : b)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

ProductGroup assemble(GroupPtr product, const std::vector<GroupPtr>& factors) {
  ProductGroup p;
  p.product = std::move(product);
  p.factors = factors;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Elem> inj(factors[i]->order());
    for (Elem x = 0; x < inj.size(); ++x) inj[x] = p.product->embed(i, x);
    p.injections.emplace_back(factors[i], p.product, std::move(inj), HomStatus::homomorphism);
    std::vector<Elem> proj(p.product->order());
    for (Elem x = 0; x < proj.size(); ++x) proj[x] = p.product->coordinate(x, i);
    p.projections.emplace_back(p.product, factors[i], std::move(proj), HomStatus::homomorphism);
  }
  return p;
}

}  // namespace

ProductGroup ProductGroup::of(const std::vector<GroupPtr>& factors) {
  if (factors.size() < 2) throw StructuralError("a product needs at least two factors");
  return assemble(FiniteGroup::direct_product(factors), factors);
}

ProductGroup ProductGroup::from(const GroupPtr& product) {
  if (!product->is_product()) throw PreconditionError("group carries no recorded direct factorization");
  return assemble(product, product->factors());
}

bool same_factors(const std::vector<GroupPtr>& a, const std::vector<GroupPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_group(a[i], b[i])) return false;
  return true;
}

EndoMatrix::EndoMatrix(std::vector<GroupPtr> factors, std::vector<GroupMap> entries, Trusted)
    : factors_(std::move(factors)), entries_(std::move(entries)) {}

EndoMatrix EndoMatrix::trusted(std::vector<GroupPtr> factors, std::vector<GroupMap> entries) {
  return EndoMatrix(std::move(factors), std::move(entries), Trusted{});
}

EndoMatrix::EndoMatrix(std::vector<GroupPtr> factors, std::vector<GroupMap> entries)
    : factors_(std::move(factors)), entries_(std::move(entries)) {
  const std::size_t n = factors_.size();
  if (n < 2) throw StructuralError("an endomorphism matrix needs at least two factors");
  if (entries_.size() != n * n) throw StructuralError("expected " + std::to_string(n * n) + " matrix entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const GroupMap& e = at(i, j);
      if (!same_group(e.domain(), factors_[j]) || !same_group(e.codomain(), factors_[i]))
        throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has the wrong shape");
      if (!is_homomorphism(e))
        throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a homomorphism");
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (factors_[i]->is_abelian()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!images_commute(at(i, j), at(i, k)))
          throw StructuralError("M-condition fails in row " + std::to_string(i) + " for columns " +
                                std::to_string(j) + " and " + std::to_string(k));
  }
}

EndoMatrix EndoMatrix::identity(const std::vector<GroupPtr>& factors) {
  std::vector<GroupMap> e;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j)
      e.push_back(i == j ? GroupMap::identity(factors[i]) : GroupMap::zero(factors[j], factors[i]));
  return EndoMatrix(factors, std::move(e), Trusted{});
}

EndoMatrix EndoMatrix::diagonal(const std::vector<GroupMap>& diag) {
  std::vector<GroupPtr> factors;
  for (const auto& d : diag) {
    if (!d.is_endo()) throw StructuralError("diagonal entries must be self-maps");
    factors.push_back(d.domain());
  }
  std::vector<GroupMap> e;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j)
      e.push_back(i == j ? diag[i] : GroupMap::zero(factors[j], factors[i]));
  return EndoMatrix(factors, std::move(e));
}

EndoMatrix EndoMatrix::two_by_two(GroupMap alpha, GroupMap beta, GroupMap gamma, GroupMap delta) {
  std::vector<GroupPtr> factors{alpha.domain(), delta.domain()};
  std::vector<GroupMap> e{std::move(alpha), std::move(beta), std::move(gamma), std::move(delta)};
  return EndoMatrix(std::move(factors), std::move(e));
}

bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
  if (!same_factors(a.factors_, b.factors_)) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].values() != b.entries_[i].values()) return false;
  return true;
}

EndoMatrix decompose(const ProductGroup& p, const GroupMap& phi) {
  if (!same_group(phi.domain(), p.product) || !same_group(phi.codomain(), p.product))
    throw PreconditionError("decompose: map is not a self-map of the product");
  if (!is_homomorphism(phi)) throw PreconditionError("decompose: map is not an endomorphism");
  const std::size_t n = p.factors.size();
  std::vector<GroupMap> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Elem> v(p.factors[j]->order());
      for (Elem x = 0; x < v.size(); ++x) v[x] = p.product->coordinate(phi(p.product->embed(j, x)), i);
      e.emplace_back(p.factors[j], p.factors[i], std::move(v), HomStatus::homomorphism);
    }
  return EndoMatrix(p.factors, std::move(e));
}

GroupMap recompose(const ProductGroup& p, const EndoMatrix& m) {
  if (!same_factors(p.factors, m.factors())) throw StructuralError("recompose: factor lists differ");
  const auto& g = *p.product;
  const std::size_t n = m.size();
  std::vector<Elem> v(g.order());
  std::vector<Elem> in(n), out(n);
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t j = 0; j < n; ++j) in[j] = g.coordinate(x, j);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& fi = *m.factors()[i];
      Elem acc = fi.identity();
      for (std::size_t j = 0; j < n; ++j) acc = fi.mul(acc, m.at(i, j)(in[j]));
      out[i] = acc;
    }
    v[x] = g.encode(out);
  }
  return GroupMap(p.product, p.product, std::move(v));
}

GroupMap recompose(const EndoMatrix& m) { return recompose(ProductGroup::of(m.factors()), m); }

EndoMatrix matrix_multiply(const EndoMatrix& a, const EndoMatrix& b) {
  if (!same_factors(a.factors(), b.factors())) throw StructuralError("matrix_multiply: factor lists differ");
  const std::size_t n = a.size();
  std::vector<GroupMap> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GroupMap acc = compose(a.at(i, 0), b.at(0, j));
      for (std::size_t k = 1; k < n; ++k) acc = pointwise_sum(acc, compose(a.at(i, k), b.at(k, j)), Commute::require);
      e.push_back(std::move(acc));
    }
  return EndoMatrix(a.factors(), std::move(e));
}

bool in_A(const EndoMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& e = m.at(i, j);
      if (i == j ? !is_bijective(e) : !image_in_center(e)) return false;
    }
  return true;
}

bool in_Z(const EndoMatrix& m) {
  if (!in_A(m)) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!is_central_endo(m.at(i, i))) return false;
  return true;
}

MSpace::MSpace(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
  const std::size_t n = factors_.size();
  if (n < 2) throw StructuralError("MSpace needs at least two factors");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) homs_.push_back(enumerate_homs(factors_[j], factors_[i]));
  rows_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<std::vector<Elem>>> images(n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& f : homs(i, j)) images[j].push_back(image_list(f));
    std::vector<std::size_t> choice(n);
    const auto& g = *factors_[i];
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == n) {
        rows_[i].push_back(choice);
        return;
      }
      for (std::size_t c = 0; c < homs(i, j).size(); ++c) {
        bool ok = true;
        for (std::size_t k = 0; k < j && ok; ++k) ok = lists_commute(g, images[k][choice[k]], images[j][c]);
        if (!ok) continue;
        choice[j] = c;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }
}

std::uint64_t MSpace::size() const {
  std::uint64_t s = 1;
  for (const auto& r : rows_) s = saturating_mul(s, r.size());
  return s;
}

EndoMatrix MSpace::build(const std::vector<std::size_t>& row_choice) const {
  const std::size_t n = factors_.size();
  std::vector<GroupMap> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(homs(i, j)[rows_[i][row_choice[i]][j]]);
  return EndoMatrix::trusted(factors_, std::move(e));
}

bool MSpace::for_each(const MatrixVisitor& visit) const {
  const std::size_t n = factors_.size();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    if (!visit(build(idx))) return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < rows_[i].size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
  }
}

EndoMatrix MSpace::sample(std::mt19937_64& rng) const {
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = std::uniform_int_distribution<std::size_t>(0, rows_[i].size() - 1)(rng);
  return build(idx);
}

ASpace::ASpace(std::vector<GroupPtr> factors, bool central) : factors_(std::move(factors)) {
  const std::size_t n = factors_.size();
  if (n < 2) throw StructuralError("ASpace needs at least two factors");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        sets_.push_back(enumerate_central_homs(factors_[j], factors_[i]));
        continue;
      }
      HomSet autos = enumerate_autos(factors_[i]);
      if (central) std::erase_if(autos.members, [](const GroupMap& f) { return !is_central_endo(f); });
      sets_.push_back(std::move(autos));
    }
}

std::uint64_t ASpace::size() const {
  std::uint64_t s = 1;
  for (const auto& c : sets_) s = saturating_mul(s, c.size());
  return s;
}

bool ASpace::for_each(const MatrixVisitor& visit) const {
  const std::size_t nn = sets_.size();
  std::vector<std::size_t> idx(nn, 0);
  while (true) {
    std::vector<GroupMap> e;
    e.reserve(nn);
    for (std::size_t s = 0; s < nn; ++s) e.push_back(sets_[s][idx[s]]);
    if (!visit(EndoMatrix::trusted(factors_, std::move(e)))) return false;
    std::size_t s = nn;
    while (s > 0) {
      --s;
      if (++idx[s] < sets_[s].size()) break;
      idx[s] = 0;
      if (s == 0) return true;
    }
  }
}

EndoMatrix ASpace::sample(std::mt19937_64& rng) const {
  std::vector<GroupMap> e;
  for (const auto& c : sets_) e.push_back(c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)]);
  return EndoMatrix::trusted(factors_, std::move(e));
}

namespace {

std::vector<EndoMatrix> enumerate_space(const ASpace& space, const EnumLimits& limits) {
  if (product_order(space.factors()) > limits.max_product_order)
    throw ResourceError("product order " + std::to_string(product_order(space.factors())) +
                        " exceeds the enumeration bound " + std::to_string(limits.max_product_order));
  if (space.size() > limits.max_members)
    throw ResourceError("matrix set of size " + std::to_string(space.size()) + " exceeds the enumeration bound");
  std::vector<EndoMatrix> out;
  out.reserve(space.size());
  space.for_each([&out](const EndoMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace

std::vector<EndoMatrix> enumerate_A(const std::vector<GroupPtr>& factors, const EnumLimits& limits) {
  if (product_order(factors) > limits.max_product_order)
    throw ResourceError("product order exceeds the enumeration bound");
  return enumerate_space(ASpace(factors), limits);
}

std::vector<EndoMatrix> enumerate_Z(const std::vector<GroupPtr>& factors, const EnumLimits& limits) {
  if (product_order(factors) > limits.max_product_order)
    throw ResourceError("product order exceeds the enumeration bound");
  return enumerate_space(ASpace(factors, true), limits);
}

bool for_each_aut_matrix(const ProductGroup& p, const MatrixVisitor& visit, const EnumLimits& limits) {
  if (p.product->order() > limits.max_product_order)
    throw ResourceError("product order " + std::to_string(p.product->order()) + " exceeds the enumeration bound " +
                        std::to_string(limits.max_product_order));
  HomSearchOptions opts;
  opts.injective = true;
  std::uint64_t seen = 0;
  return for_each_hom(p.product, p.product, [&](const std::vector<Elem>& v) {
    if (++seen > limits.max_members) throw ResourceError("automorphism count exceeds the enumeration bound");
    return visit(decompose(p, GroupMap(p.product, p.product, v, HomStatus::homomorphism)));
  }, opts);
}

std::vector<EndoMatrix> enumerate_aut_matrices(const ProductGroup& p, const EnumLimits& limits) {
  std::vector<EndoMatrix> out;
  for_each_aut_matrix(p, [&out](const EndoMatrix& m) {
    out.push_back(m);
    return true;
  }, limits);
  return out;
}

AStrucFactors astruc_factorize(const EndoMatrix& m) {
  if (m.size() != 2) throw PreconditionError("astruc_factorize: only 2x2 matrices are supported");
  if (!in_A(m)) throw PreconditionError("astruc_factorize: matrix is not in A");
  const GroupPtr& h = m.factors()[0];
  const GroupPtr& k = m.factors()[1];
  GroupMap ai = invert(m.alpha());
  GroupMap di = invert(m.delta());
  GroupMap b = compose(ai, compose(m.beta(), di));
  GroupMap t = pointwise_diff(GroupMap::identity(h), compose(b, m.gamma()), Commute::require);
  if (!is_bijective(t)) throw FactorizationError("1 - bγ is not bijective, so A is not a group here");
  GroupMap ti = invert(t);
  GroupMap id_h = GroupMap::identity(h), id_k = GroupMap::identity(k);
  GroupMap zkh = GroupMap::zero(k, h), zhk = GroupMap::zero(h, k);
  return {EndoMatrix::two_by_two(compose(m.alpha(), t), zkh, zhk, id_k),
          EndoMatrix::two_by_two(id_h, compose(ti, b), zhk, id_k),
          EndoMatrix::two_by_two(id_h, zkh, m.gamma(), id_k),
          EndoMatrix::two_by_two(id_h, zkh, zhk, m.delta())};
}

}  // namespace groupdet
