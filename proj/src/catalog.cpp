#include "groupdet/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "groupdet/error.hpp"

namespace groupdet {

namespace {

constexpr std::size_t kMaxCatalogOrder = 4096;

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string cycle_label(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  if (n == 0 || n > kMaxCatalogOrder) throw ParseError("cyclic order out of range: " + std::to_string(n));
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return FiniteGroup::from_table(std::move(t), "C" + std::to_string(n), std::move(labels));
}

GroupPtr dihedral(std::size_t n) {
  if (n < 2 || n % 2 != 0 || n > kMaxCatalogOrder)
    throw ParseError("dihedral order must be even and at least 2: " + std::to_string(n));
  const std::size_t m = n / 2;
  // (f, i) stands for s^f r^i.
  auto code = [m](std::size_t f, std::size_t i) { return static_cast<Elem>(f * m + i); };
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < m; ++i) {
      std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      labels[code(f, i)] = f == 0 ? (i == 0 ? "e" : r) : "s" + r;
      for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t j = 0; j < m; ++j) {
          // s^f r^i s^g r^j = s^(f+g) r^((-1)^g i + j)
          std::size_t ri = g == 0 ? i : (m - i) % m;
          t[code(f, i) * n + code(g, j)] = code((f + g) % 2, (ri + j) % m);
        }
    }
  return FiniteGroup::from_table(std::move(t), "D" + std::to_string(n), std::move(labels));
}

namespace {

GroupPtr permutation_group(std::size_t n, bool even_only, const std::string& spec) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> t(order * order);
  std::vector<int> prod(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) prod[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      t[a * order + b] = index_of(prod);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  return FiniteGroup::from_table(std::move(t), spec, std::move(labels));
}

}  // namespace

GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 6) throw ParseError("symmetric degree must be between 1 and 6: " + std::to_string(n));
  return permutation_group(n, false, "S" + std::to_string(n));
}

GroupPtr alternating(std::size_t n) {
  if (n == 0 || n > 6) throw ParseError("alternating degree must be between 1 and 6: " + std::to_string(n));
  return permutation_group(n, true, "A" + std::to_string(n));
}

GroupPtr dicyclic(std::size_t n) {
  if (n < 8 || n % 4 != 0 || n > kMaxCatalogOrder)
    throw ParseError("dicyclic order must be a multiple of 4 and at least 8: " + std::to_string(n));
  const std::size_t m = n / 2;
  // (f, i) stands for a^i x^f with a^m = 1, x^2 = a^(m/2), x a x^-1 = a^-1.
  auto code = [m](std::size_t f, std::size_t i) { return static_cast<Elem>(f * m + i); };
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < m; ++i) {
      std::string a = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      labels[code(f, i)] = f == 0 ? (i == 0 ? "e" : a) : a + "x";
      for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t j = 0; j < m; ++j) {
          std::size_t e = (i + (f == 0 ? j : m - j)) % m;
          if (f + g == 2) e = (e + m / 2) % m;
          t[code(f, i) * n + code(g, j)] = code((f + g) % 2, e);
        }
    }
  return FiniteGroup::from_table(std::move(t), "Dic" + std::to_string(n), std::move(labels));
}

GroupPtr quaternion() {
  // Units 1, i, j, k as 0..3; unit products with signs.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto code = [](int u, int s) { return static_cast<Elem>(2 * u + (s < 0 ? 1 : 0)); };
  std::vector<Elem> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
      t[static_cast<std::size_t>(a * 8 + b)] = code(unit[ua][ub], s);
    }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(std::move(t), "Q8", std::move(labels));
}

GroupPtr elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw ParseError("E<p>^<k> needs a prime p, got " + std::to_string(p));
  if (k == 0) throw ParseError("E<p>^<k> needs k >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > kMaxCatalogOrder) throw ParseError("elementary abelian group too large");
  }
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t i = 0, v = x; i < k; ++i, v /= p) l += (i ? "," : "") + std::to_string(v % p);
    labels[x] = l + ")";
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0, place = 1, a = x, b = y;
      for (std::size_t i = 0; i < k; ++i, a /= p, b /= p, place *= p) z += ((a % p + b % p) % p) * place;
      t[x * n + y] = static_cast<Elem>(z);
    }
  }
  return FiniteGroup::from_table(std::move(t), "E" + std::to_string(p) + "^" + std::to_string(k),
                                 std::move(labels));
}

GroupPtr load_table_file(const std::string& path, const ValidationOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file " + path);
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw ParseError("table file " + path + ": missing order on line 1");
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v = 0;
    if (!(in >> v)) throw ParseError("table file " + path + ": expected " + std::to_string(n * n) + " entries");
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw ParseError("table file " + path + ": entry out of range");
    t[i] = static_cast<Elem>(v);
  }
  std::vector<std::string> labels;
  std::string word;
  if (in >> word) {
    if (word != "labels:") throw ParseError("table file " + path + ": unexpected trailing text '" + word + "'");
    while (in >> word) labels.push_back(word);
    if (labels.size() != n) throw ParseError("table file " + path + ": wrong number of labels");
  }
  return FiniteGroup::from_table(std::move(t), "@" + path, std::move(labels), opts);
}

namespace {

std::size_t parse_number(std::string_view s, std::size_t& pos, std::string_view expr) {
  std::size_t start = pos;
  std::size_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::size_t>(s[pos] - '0');
    if (v > 1'000'000) throw ParseError("number too large in '" + std::string(expr) + "'");
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number in '" + std::string(expr) + "'");
  return v;
}

GroupPtr parse_atom(std::string_view atom, const ValidationOptions& opts) {
  if (atom.empty()) throw ParseError("empty group expression");
  if (atom[0] == '@') {
    if (atom.size() == 1) throw ParseError("'@' needs a path");
    return load_table_file(std::string(atom.substr(1)), opts);
  }
  if (atom == "Q8") return quaternion();
  if (atom.substr(0, 3) == "Dic") {
    std::size_t pos = 3;
    std::size_t n = parse_number(atom, pos, atom);
    if (pos != atom.size()) throw ParseError("trailing characters in '" + std::string(atom) + "'");
    return dicyclic(n);
  }
  std::size_t pos = 1;
  std::size_t n = parse_number(atom, pos, atom);
  GroupPtr g;
  switch (atom[0]) {
    case 'C': g = cyclic(n); break;
    case 'D': g = dihedral(n); break;
    case 'S': g = symmetric(n); break;
    case 'A': g = alternating(n); break;
    case 'E': {
      if (pos >= atom.size() || atom[pos] != '^') throw ParseError("expected '^' in '" + std::string(atom) + "'");
      ++pos;
      std::size_t k = parse_number(atom, pos, atom);
      g = elementary_abelian(n, k);
      break;
    }
    default: throw ParseError("unknown group atom '" + std::string(atom) + "'");
  }
  if (pos != atom.size()) throw ParseError("trailing characters in '" + std::string(atom) + "'");
  return g;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupPtr build_group(std::string_view expr, const ValidationOptions& opts) {
  std::vector<std::string_view> atoms;
  std::string_view rest = trim(expr);
  if (rest.empty()) throw ParseError("empty group expression");
  while (!rest.empty()) {
    std::size_t end;
    if (rest[0] == '@') {
      // A path runs until a whitespace-delimited "x".
      end = rest.size();
      for (std::size_t i = 1; i + 2 < rest.size(); ++i)
        if (std::isspace(static_cast<unsigned char>(rest[i])) && rest[i + 1] == 'x' &&
            std::isspace(static_cast<unsigned char>(rest[i + 2]))) {
          end = i;
          break;
        }
    } else {
      end = rest.find('x');
      if (end == std::string_view::npos) end = rest.size();
    }
    std::string_view atom = trim(rest.substr(0, end));
    atoms.push_back(atom);
    rest = rest.substr(end);
    rest = trim(rest);
    if (!rest.empty()) {
      if (rest[0] != 'x') throw ParseError("expected 'x' in '" + std::string(expr) + "'");
      rest = trim(rest.substr(1));
      if (rest.empty()) throw ParseError("dangling 'x' in '" + std::string(expr) + "'");
    }
  }
  std::vector<GroupPtr> factors;
  for (auto a : atoms) factors.push_back(parse_atom(a, opts));
  return FiniteGroup::direct_product(factors);
}

}  // namespace groupdet
