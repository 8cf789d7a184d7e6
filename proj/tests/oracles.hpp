#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond FiniteGroup::mul/inv and are deliberately naive.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "groupdet/group.hpp"

namespace oracle {

using groupdet::Elem;
using groupdet::FiniteGroup;

inline std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elem b = 0; b < g.order() && ok; ++b) ok = g.mul(a, b) == g.mul(b, a);
    if (ok) z.push_back(a);
  }
  return z;
}

// Repeatedly multiply pairs until nothing new appears.
inline std::vector<Elem> naive_closure(const FiniteGroup& g, std::vector<Elem> s) {
  std::set<Elem> set(s.begin(), s.end());
  set.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(set.begin(), set.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (set.insert(g.mul(a, b)).second) grew = true;
  }
  return {set.begin(), set.end()};
}

inline std::vector<Elem> derived(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return naive_closure(g, comms);
}

inline bool is_hom(const FiniteGroup& h, const FiniteGroup& k, const std::vector<Elem>& f) {
  for (Elem a = 0; a < h.order(); ++a)
    for (Elem b = 0; b < h.order(); ++b)
      if (f[h.mul(a, b)] != k.mul(f[a], f[b])) return false;
  return true;
}

inline bool is_bijective(const std::vector<Elem>& f, std::size_t codomain_order) {
  if (f.size() != codomain_order) return false;
  std::vector<Elem> s = f;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// Every function h -> k, assigned in element-index order; a branch is cut as
// soon as some product among assigned elements is violated.
inline std::vector<std::vector<Elem>> homs(const FiniteGroup& h, const FiniteGroup& k) {
  std::vector<std::vector<Elem>> out;
  const Elem n = static_cast<Elem>(h.order());
  std::vector<Elem> f(n, 0);
  std::function<void(Elem)> rec = [&](Elem x) {
    if (x == n) {
      if (is_hom(h, k, f)) out.push_back(f);
      return;
    }
    for (Elem v = 0; v < k.order(); ++v) {
      f[x] = v;
      bool ok = true;
      for (Elem a = 0; a <= x && ok; ++a)
        for (Elem b = 0; b <= x && ok; ++b) {
          Elem ab = h.mul(a, b);
          if (ab <= x && (a == x || b == x || ab == x)) ok = f[ab] == k.mul(f[a], f[b]);
        }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Elem>> autos(const FiniteGroup& g) {
  auto all = homs(g, g);
  std::erase_if(all, [&g](const std::vector<Elem>& f) { return !is_bijective(f, g.order()); });
  return all;
}

inline bool is_associative(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

inline bool is_normal_endo(const FiniteGroup& g, const std::vector<Elem>& f) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      Elem xy = g.mul(g.mul(g.inv(y), x), y);
      if (f[xy] != g.mul(g.mul(g.inv(y), f[x]), y)) return false;
    }
  return true;
}

// Inverse of a bijection given by its value table; empty if not bijective.
inline std::vector<Elem> inverse(const std::vector<Elem>& f) {
  std::vector<Elem> inv(f.size(), 0);
  std::vector<bool> hit(f.size(), false);
  for (Elem x = 0; x < f.size(); ++x) {
    if (f[x] >= f.size() || hit[f[x]]) return {};
    hit[f[x]] = true;
    inv[f[x]] = x;
  }
  return inv;
}

// The endomorphism of a direct product given by a matrix of value tables,
// entry (i, j) mapping factor j to factor i. Product elements are encoded in
// mixed radix with the first factor varying fastest.
inline std::vector<Elem> matrix_map(const std::vector<const FiniteGroup*>& factors,
                                    const std::vector<std::vector<Elem>>& entries) {
  const std::size_t n = factors.size();
  std::size_t total = 1;
  for (auto* f : factors) total *= f->order();
  std::vector<Elem> out(total);
  std::vector<Elem> coord(n);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t r = x;
    for (std::size_t i = 0; i < n; ++i) {
      coord[i] = static_cast<Elem>(r % factors[i]->order());
      r /= factors[i]->order();
    }
    std::size_t code = 0, scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Elem acc = factors[i]->identity();
      for (std::size_t j = 0; j < n; ++j) acc = factors[i]->mul(acc, entries[i * n + j][coord[j]]);
      code += acc * scale;
      scale *= factors[i]->order();
    }
    out[x] = static_cast<Elem>(code);
  }
  return out;
}

}  // namespace oracle
