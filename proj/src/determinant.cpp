#include "groupdet/determinant.hpp"

#include <algorithm>
#include <numeric>

#include "groupdet/error.hpp"

namespace groupdet {

namespace {

void require_2x2(const EndoMatrix& m, const char* op) {
  if (m.size() != 2) throw PreconditionError(std::string(op) + " needs a 2x2 matrix");
}

GroupMap invert_pivot(const GroupMap& pivot, std::size_t step, std::size_t index, OpCounter* counter) {
  try {
    return invert(pivot, counter);
  } catch (const InversionError&) {
    throw DeterminantUndefinedError("pivot (" + std::to_string(index) + "," + std::to_string(index) +
                                        ") is not bijective at elimination step " + std::to_string(step),
                                    step, index);
  }
}

// x - b(inv(c(x))) with images required to commute.
GroupMap schur_entry(const GroupMap& a, const GroupMap& b, const GroupMap& inv, const GroupMap& c,
                     OpCounter* counter) {
  GroupMap corr = compose(b, compose(inv, c));
  if (counter) counter->evaluations += a.domain()->order();
  return pointwise_diff(a, corr, Commute::require);
}

std::size_t position(const std::vector<std::size_t>& surviving, std::size_t i) {
  auto it = std::find(surviving.begin(), surviving.end(), i);
  if (it == surviving.end()) throw PreconditionError("factor " + std::to_string(i) + " was already eliminated");
  return static_cast<std::size_t>(it - surviving.begin());
}

Branch preferred_branch(const EndoMatrix& m) {
  return m.factors()[0]->order() <= m.factors()[1]->order() ? Branch::h : Branch::k;
}

// Generic map matrix over a subset of factors, used by the block inverse.
struct Block {
  std::vector<std::size_t> idx;
  std::vector<GroupMap> e;
  const GroupMap& at(std::size_t i, std::size_t j) const {
    return e[position(idx, i) * idx.size() + position(idx, j)];
  }
};

GroupMap sum_over(std::vector<GroupMap> terms) {
  GroupMap acc = terms.front();
  for (std::size_t t = 1; t < terms.size(); ++t) acc = pointwise_sum(acc, terms[t]);
  return acc;
}

Block invert_block(const Block& m, const std::vector<std::size_t>& order, std::size_t step) {
  if (m.idx.size() == 1) {
    const GroupMap& d = m.e.front();
    if (!is_bijective(d)) throw NotInvertibleError("the determinant is not bijective");
    return {m.idx, {invert(d)}};
  }
  const std::size_t p = order.front();
  GroupMap di = invert_pivot(m.at(p, p), step, p, nullptr);
  Block s;
  for (std::size_t i : m.idx)
    if (i != p) s.idx.push_back(i);
  for (std::size_t i : s.idx)
    for (std::size_t j : s.idx) s.e.push_back(schur_entry(m.at(i, j), m.at(i, p), di, m.at(p, j), nullptr));
  Block si = invert_block(s, std::vector<std::size_t>(order.begin() + 1, order.end()), step + 1);

  // (S^-1 B)_i = sum_j S^-1(i,j) m(j,p)  and  (C S^-1)_j = sum_i m(p,i) S^-1(i,j)
  std::vector<GroupMap> sib, csi;
  for (std::size_t i : s.idx) {
    std::vector<GroupMap> terms;
    for (std::size_t j : s.idx) terms.push_back(compose(si.at(i, j), m.at(j, p)));
    sib.push_back(sum_over(std::move(terms)));
  }
  for (std::size_t j : s.idx) {
    std::vector<GroupMap> terms;
    for (std::size_t i : s.idx) terms.push_back(compose(m.at(p, i), si.at(i, j)));
    csi.push_back(sum_over(std::move(terms)));
  }
  std::vector<GroupMap> csib_terms;
  for (std::size_t a = 0; a < s.idx.size(); ++a) csib_terms.push_back(compose(m.at(p, s.idx[a]), sib[a]));
  GroupMap csib = sum_over(std::move(csib_terms));
  const GroupPtr& gp = m.at(p, p).domain();
  GroupMap corner = compose(pointwise_sum(GroupMap::identity(gp), compose(di, csib), Commute::require), di);

  Block out{m.idx, {}};
  for (std::size_t i : m.idx)
    for (std::size_t j : m.idx) {
      if (i == p && j == p) {
        out.e.push_back(corner);
      } else if (i == p) {
        out.e.push_back(negate(compose(di, csi[position(s.idx, j)])));
      } else if (j == p) {
        out.e.push_back(negate(compose(sib[position(s.idx, i)], di)));
      } else {
        out.e.push_back(si.at(i, j));
      }
    }
  return out;
}

}  // namespace

FSequence FSequence::canonical(std::size_t n) {
  FSequence f{n, {}};
  for (std::size_t i = n; i-- > 1;) f.images.push_back(i);
  return f;
}

void FSequence::validate() const {
  if (images.size() >= n && n > 0) throw PreconditionError("an elimination sequence has at most n-1 entries");
  std::vector<bool> seen(n, false);
  for (std::size_t i : images) {
    if (i >= n) throw PreconditionError("elimination index out of range");
    if (seen[i]) throw PreconditionError("elimination sequence repeats an index");
    seen[i] = true;
  }
}

const GroupMap& PartialDet::at(std::size_t i, std::size_t j) const {
  return entries[position(surviving, i) * surviving.size() + position(surviving, j)];
}

GroupMap det_H(const EndoMatrix& m, OpCounter* counter) {
  require_2x2(m, "det_H");
  GroupMap di = invert_pivot(m.delta(), 0, 1, counter);
  return schur_entry(m.alpha(), m.beta(), di, m.gamma(), counter);
}

GroupMap det_K(const EndoMatrix& m, OpCounter* counter) {
  require_2x2(m, "det_K");
  GroupMap ai = invert_pivot(m.alpha(), 0, 0, counter);
  return schur_entry(m.delta(), m.gamma(), ai, m.beta(), counter);
}

GroupMap det_A(const EndoMatrix& m) {
  if (!in_A(m)) throw PreconditionError("det_A: matrix is not in A");
  if (m.size() == 2) return det_H(m);
  return f_determinant_map(m, FSequence::canonical(m.size()));
}

std::vector<PartialDet> f_determinant(const EndoMatrix& m, const FSequence& f, OpCounter* counter) {
  if (f.n != m.size()) throw PreconditionError("sequence length does not match the matrix size");
  f.validate();
  std::vector<PartialDet> chain;
  PartialDet cur;
  cur.surviving.resize(m.size());
  std::iota(cur.surviving.begin(), cur.surviving.end(), std::size_t{0});
  cur.entries = m.entries();
  cur.eliminated = FSequence{m.size(), {}};
  chain.push_back(cur);
  for (std::size_t step = 0; step < f.images.size(); ++step) {
    const PartialDet& prev = chain.back();
    const std::size_t p = f.images[step];
    GroupMap inv = invert_pivot(prev.at(p, p), step, p, counter);
    PartialDet next;
    for (std::size_t i : prev.surviving)
      if (i != p) next.surviving.push_back(i);
    for (std::size_t i : next.surviving)
      for (std::size_t j : next.surviving)
        next.entries.push_back(schur_entry(prev.at(i, j), prev.at(i, p), inv, prev.at(p, j), counter));
    next.eliminated = prev.eliminated;
    next.eliminated.images.push_back(p);
    chain.push_back(std::move(next));
  }
  return chain;
}

GroupMap f_determinant_map(const EndoMatrix& m, const FSequence& f, OpCounter* counter) {
  if (f.images.size() + 1 != m.size()) throw PreconditionError("the sequence must eliminate all but one factor");
  auto chain = f_determinant(m, f, counter);
  return chain.back().entries.front();
}

std::optional<FSequence> find_admissible_sequence(const EndoMatrix& m) {
  const std::size_t n = m.size();
  auto admissible = [&m](const FSequence& f) {
    try {
      f_determinant(m, f);
      return true;
    } catch (const DeterminantUndefinedError&) {
      return false;
    }
  };
  FSequence canon = FSequence::canonical(n);
  if (admissible(canon)) return canon;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    FSequence f{n, std::vector<std::size_t>(perm.begin(), perm.end() - 1)};
    // Each sequence appears once: the last slot of perm is determined by the rest.
    if (f == canon) continue;
    if (admissible(f)) return f;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

DetDecision decide_via_det(const EndoMatrix& m, OpCounter* counter, Branch branch) {
  if (m.size() == 2) {
    std::vector<Branch> tries;
    if (branch == Branch::automatic) {
      Branch first = preferred_branch(m);
      tries = {first, first == Branch::h ? Branch::k : Branch::h};
    } else {
      tries = {branch};
    }
    for (Branch b : tries) {
      try {
        GroupMap d = b == Branch::h ? det_H(m, counter) : det_K(m, counter);
        FSequence f{2, {b == Branch::h ? std::size_t{1} : std::size_t{0}}};
        return {is_bijective(d, counter), b, f};
      } catch (const DeterminantUndefinedError&) {
        if (b == tries.back()) throw;
      }
    }
  }
  auto f = find_admissible_sequence(m);
  if (!f) throw DeterminantUndefinedError("no elimination sequence has all pivots bijective", 0, 0);
  GroupMap d = f_determinant_map(m, *f, counter);
  return {is_bijective(d, counter), Branch::automatic, *f};
}

bool is_invertible_via_det(const EndoMatrix& m, OpCounter* counter, Branch branch) {
  return decide_via_det(m, counter, branch).invertible;
}

EndoMatrix invert_via_det(const EndoMatrix& m, Branch branch) {
  require_2x2(m, "invert_via_det");
  if (branch == Branch::automatic) {
    Branch first = preferred_branch(m);
    Branch second = first == Branch::h ? Branch::k : Branch::h;
    const GroupMap& pivot = first == Branch::h ? m.delta() : m.alpha();
    branch = is_bijective(pivot) ? first : second;
  }
  const GroupPtr& h = m.factors()[0];
  const GroupPtr& k = m.factors()[1];
  if (branch == Branch::h) {
    GroupMap d = det_H(m);
    if (!is_bijective(d)) throw NotInvertibleError("det_H is not bijective");
    GroupMap dinv = invert(d);
    GroupMap di = invert(m.delta());
    GroupMap a2 = dinv;
    GroupMap b2 = negate(compose(dinv, compose(m.beta(), di)));
    GroupMap c2 = negate(compose(di, compose(m.gamma(), dinv)));
    GroupMap t = compose(di, compose(m.gamma(), compose(dinv, m.beta())));
    GroupMap d2 = compose(pointwise_sum(GroupMap::identity(k), t, Commute::require), di);
    return EndoMatrix::two_by_two(a2, b2, c2, d2);
  }
  GroupMap e = det_K(m);
  if (!is_bijective(e)) throw NotInvertibleError("det_K is not bijective");
  GroupMap einv = invert(e);
  GroupMap ai = invert(m.alpha());
  GroupMap t = compose(ai, compose(m.beta(), compose(einv, m.gamma())));
  GroupMap a2 = compose(pointwise_sum(GroupMap::identity(h), t, Commute::require), ai);
  GroupMap b2 = negate(compose(ai, compose(m.beta(), einv)));
  GroupMap c2 = negate(compose(einv, compose(m.gamma(), ai)));
  return EndoMatrix::two_by_two(a2, b2, c2, einv);
}

EndoMatrix invert_via_det_pleasant(const EndoMatrix& m) {
  require_2x2(m, "invert_via_det_pleasant");
  if (!in_A(m)) throw PreconditionError("invert_via_det_pleasant: matrix is not in A");
  GroupMap d = det_H(m);
  GroupMap e = det_K(m);
  if (!is_bijective(d) || !is_bijective(e)) throw NotInvertibleError("the determinant is not bijective");
  GroupMap dinv = invert(d), einv = invert(e);
  GroupMap ai = invert(m.alpha()), di = invert(m.delta());
  return EndoMatrix::two_by_two(dinv, negate(compose(ai, compose(m.beta(), einv))),
                                negate(compose(di, compose(m.gamma(), dinv))), einv);
}

EndoMatrix invert_via_f_determinant(const EndoMatrix& m, const FSequence& f) {
  if (f.n != m.size() || f.images.size() + 1 != m.size())
    throw PreconditionError("the sequence must eliminate all but one factor");
  f.validate();
  Block b;
  b.idx.resize(m.size());
  std::iota(b.idx.begin(), b.idx.end(), std::size_t{0});
  b.e = m.entries();
  Block inv = invert_block(b, f.images, 0);
  return EndoMatrix(m.factors(), std::move(inv.e));
}

EndoMatrix invert_via_det_any(const EndoMatrix& m) {
  if (m.size() == 2) return invert_via_det(m);
  auto f = find_admissible_sequence(m);
  if (!f) throw DeterminantUndefinedError("no elimination sequence has all pivots bijective", 0, 0);
  return invert_via_f_determinant(m, *f);
}

DetiffRecord detiff_check(const EndoMatrix& m) {
  require_2x2(m, "detiff_check");
  if (!in_A(m)) throw PreconditionError("detiff_check: matrix is not in A");
  DetiffRecord r;
  GroupMap d = det_H(m);
  GroupMap e = det_K(m);
  r.detH_invertible = is_bijective(d);
  r.detK_invertible = is_bijective(e);
  if (!r.detH_invertible || !r.detK_invertible) {
    r.reciprocal_identities_hold = !r.detH_invertible && !r.detK_invertible;
    return r;
  }
  r.identities_checked = true;
  GroupMap dinv = invert(d), einv = invert(e);
  GroupMap ai = invert(m.alpha()), di = invert(m.delta());
  GroupMap rhs_h = pointwise_sum(compose(ai, compose(m.beta(), compose(einv, compose(m.gamma(), ai)))), ai,
                                 Commute::require);
  GroupMap rhs_k = pointwise_sum(compose(di, compose(m.gamma(), compose(dinv, compose(m.beta(), di)))), di,
                                 Commute::require);
  r.reciprocal_identities_hold = dinv.values() == rhs_h.values() && einv.values() == rhs_k.values();
  return r;
}

}  // namespace groupdet
