#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "groupdet/bench.hpp"
#include "groupdet/catalog.hpp"
#include "groupdet/error.hpp"
#include "groupdet/serialize.hpp"
#include "groupdet/sweep.hpp"

using namespace groupdet;

namespace {

enum Exit { kOk = 0, kUsage = 1, kResource = 2, kViolation = 3, kNoInverse = 4 };

struct Global {
  std::size_t max_order = 64;
  bool json = false;
  std::uint64_t seed = 1;
  std::string branch = "auto";

  EnumLimits limits() const {
    EnumLimits l;
    l.max_product_order = max_order;
    return l;
  }
};

const char* yes_no(const std::optional<bool>& b) { return !b ? "unknown" : *b ? "yes" : "no"; }

std::string subgroup_str(const Subgroup& s) {
  std::ostringstream o;
  o << "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) o << (i ? ", " : "") << s.parent()->label(s.elements()[i]);
  o << "}";
  return o.str();
}

EndoMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void check_factors(const EndoMatrix& m, const std::string& h, const std::string& k) {
  if (h.empty()) return;
  if (m.size() != 2) throw ParseError("the matrix file has " + std::to_string(m.size()) + " factors, expected 2");
  if (!same_group(m.factors()[0], build_group(h)) || !same_group(m.factors()[1], build_group(k)))
    throw ParseError("the matrix file's factors do not match " + h + " and " + k);
}

void print_matrix(const EndoMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::cout << "  (" << i << "," << j << "):";
      for (Elem v : m.at(i, j).values()) std::cout << ' ' << v;
      std::cout << '\n';
    }
}

int cmd_classify(const Global& g, const std::string& hs, const std::string& ks) {
  auto h = build_group(hs), k = build_group(ks);
  auto r = classify_pair(h, k, g.limits());
  if (g.json) {
    std::cout << report_to_json(r, h, k).dump(2) << '\n';
  } else {
    std::cout << "pair: " << hs << " (order " << r.h_order << "), " << ks << " (order " << r.k_order << ")\n";
    std::cout << "incompatible: " << yes_no(r.incompatible) << '\n';
    std::cout << "centrally incompatible: " << yes_no(r.centrally_incompatible) << '\n';
    std::cout << "totally incompatible: " << yes_no(r.totally_incompatible);
    if (r.total_length) std::cout << " (length " << *r.total_length << ")";
    std::cout << '\n';
    std::cout << "centrally totally incompatible: " << yes_no(r.centrally_totally_incompatible);
    if (r.central_total_length) std::cout << " (length " << *r.central_total_length << ")";
    std::cout << '\n';
    if (r.common_factor)
      std::cout << "common factor: " << subgroup_str(r.common_factor->h_factor) << " in H ~ "
                << subgroup_str(r.common_factor->k_factor) << " in K\n";
    else
      std::cout << "common factor: none\n";
    std::cout << "common central factor: " << (r.common_central_factor ? "yes" : "none") << '\n';
    std::cout << "stem: H " << (r.h_stem ? "yes" : "no") << ", K " << (r.k_stem ? "yes" : "no") << '\n';
    std::cout << "A is a subgroup: " << yes_no(r.a_is_subgroup) << '\n';
    std::cout << "A in Aut: " << yes_no(r.a_subset_aut) << ", Aut in A: " << yes_no(r.aut_subset_a)
              << ", A = Aut: " << yes_no(r.a_equals_aut) << '\n';
    std::cout << "|A| = " << r.a_order;
    if (r.aut_order) std::cout << ", |Aut| = " << *r.aut_order;
    std::cout << '\n';
    if (count_homs(h, k) == 1 && count_homs(k, h) == 1)
      std::cout << "Hom(H,K) and Hom(K,H) are trivial: Aut(H x K) = Aut H x Aut K\n";
    if (r.aut_witness) {
      std::cout << "automorphism outside A:\n";
      print_matrix(*r.aut_witness);
    }
    for (const auto& c : r.theorem_checks)
      if (c.applicable) std::cout << "check " << c.name << ": " << (c.holds ? "holds" : "FAILS") << '\n';
    for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
  }
  return r.complete ? kOk : kResource;
}

int cmd_invert(const Global& g, const std::string& hs, const std::string& ks, const std::string& file) {
  EndoMatrix m = read_matrix(file);
  check_factors(m, hs, ks);
  Branch b = branch_from_string(g.branch);
  Json out;
  int code = kOk;
  try {
    EndoMatrix inv = m.size() == 2 ? invert_via_det(m, b) : invert_via_det_any(m);
    out = {{"status", "ok"}, {"inverse", matrix_to_json(inv)}};
  } catch (const DeterminantUndefinedError& e) {
    out = {{"status", "determinant_undefined"},
           {"message", e.what()},
           {"step", e.step()},
           {"pivot", e.pivot()},
           {"fallback", "naive"},
           {"naive_invertible", is_bijective(recompose(m))}};
    code = kNoInverse;
  } catch (const NotInvertibleError& e) {
    out = {{"status", "not_invertible"}, {"message", e.what()}};
    code = kNoInverse;
  }
  if (g.json || code == kOk) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << out.at("status").get<std::string>() << ": " << out.at("message").get<std::string>() << '\n';
    if (out.contains("naive_invertible"))
      std::cout << "fallback: the naive check says the map is "
                << (out.at("naive_invertible").get<bool>() ? "invertible" : "not invertible") << '\n';
  }
  return code;
}

int cmd_det(const Global& g, const std::string& hs, const std::string& ks, const std::string& file) {
  EndoMatrix m = read_matrix(file);
  check_factors(m, hs, ks);
  Branch b = branch_from_string(g.branch);
  OpCounter c;
  try {
    DetDecision d = decide_via_det(m, &c, b);
    GroupMap det = m.size() == 2 ? (d.branch == Branch::h ? det_H(m) : det_K(m)) : f_determinant_map(m, d.sequence);
    if (g.json) {
      std::cout << Json{{"status", "ok"}, {"decision", decision_to_json(d)}, {"determinant", map_to_json(det)},
                        {"counter", counter_to_json(c)}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "branch: " << to_string(d.branch) << ", sequence:";
      for (auto i : d.sequence.images) std::cout << ' ' << i;
      std::cout << "\ninvertible: " << (d.invertible ? "yes" : "no") << '\n';
      const auto& dom = *det.domain();
      for (Elem x = 0; x < dom.order(); ++x) std::cout << "  " << dom.label(x) << " -> " << dom.label(det(x)) << '\n';
      std::cout << "steps: " << c.headline() << " (lookups " << c.lookups << ", comparisons " << c.comparisons
                << ", evaluations " << c.evaluations << ")\n";
    }
    return kOk;
  } catch (const DeterminantUndefinedError& e) {
    if (g.json)
      std::cout << Json{{"status", "determinant_undefined"}, {"message", e.what()}, {"step", e.step()}, {"pivot", e.pivot()}}
                       .dump(2)
                << '\n';
    else
      std::cout << "determinant_undefined: " << e.what() << '\n';
    return kNoInverse;
  }
}

int cmd_bench(const Global& g, const std::string& hs, const std::string& ks, std::size_t trials,
              const std::string& population) {
  BenchOptions o;
  o.trials = trials;
  o.seed = g.seed;
  o.branch = branch_from_string(g.branch);
  o.limits = g.limits();
  if (population == "A") o.population = Population::a;
  else if (population == "Aut") o.population = Population::aut;
  else if (population == "M") o.population = Population::m;
  else throw ParseError("unknown population '" + population + "' (expected A, Aut or M)");
  auto h = build_group(hs), k = build_group(ks);
  auto s = run_bench(h, k, o);
  if (g.json) {
    std::cout << bench_to_json(s).dump(2) << '\n';
    return kOk;
  }
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  std::uint64_t naive_total = 0, det_total = 0, det_runs = 0, naive_runs = 0;
  for (const auto& r : s.records) {
    if (r.method == BenchMethod::naive) {
      naive_total += r.steps_headline;
      ++naive_runs;
    } else if (r.determinant_defined) {
      det_total += r.steps_headline;
      ++det_runs;
    }
  }
  const std::size_t m = h->order(), n = k->order();
  std::cout << "pair: " << hs << " x " << ks << ", population " << to_string(o.population) << ", seed " << o.seed
            << ", trials " << trials << '\n';
  std::cout << "naive: mean " << (naive_runs ? double(naive_total) / naive_runs : 0.0) << " steps, formula C(mn,2) = "
            << naive_steps(m, n) << '\n';
  std::cout << "determinant (" << g.branch << "): mean " << (det_runs ? double(det_total) / det_runs : 0.0)
            << " steps, formula " << determinant_steps(m, n, o.branch) << '\n';
  std::cout << "agreements " << s.agreements << ", disagreements " << s.disagreements << ", undefined " << s.undefined
            << '\n';
  return kOk;
}

int cmd_sweep(const Global& g, std::size_t max_order) {
  SweepOptions o;
  o.max_order = max_order;
  o.limits = g.limits();
  auto progress = [&](const SweepEntry& e) {
    if (g.json) return;
    const auto& r = e.report;
    std::cout << r.h_spec << " x " << r.k_spec << ": incompatible " << yes_no(r.incompatible) << ", A=Aut "
              << yes_no(r.a_equals_aut) << ", theorems " << (r.theorems_hold() && e.violations.empty() ? "hold" : "FAIL")
              << (r.complete ? "" : " (incomplete)") << '\n';
  };
  auto rep = run_sweep(o, progress);
  if (g.json) {
    std::cout << sweep_to_json(rep).dump(2) << '\n';
  } else {
    std::cout << rep.entries.size() << " pairs over " << rep.groups.size() << " groups, "
              << (rep.complete ? "complete" : "incomplete") << '\n';
    for (const auto& v : rep.violations()) std::cout << "violation: " << v << '\n';
  }
  if (!rep.ok()) return kViolation;
  return rep.complete ? kOk : kResource;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinants of endomorphisms of direct products of finite groups"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--max-order", g.max_order, "largest |H x K| for exhaustive enumeration")->capture_default_str();
  app.add_flag("--json", g.json, "print JSON");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--branch", g.branch, "determinant branch")->check(CLI::IsMember({"h", "k", "auto"}))->capture_default_str();

  std::string hs, ks, file;
  std::size_t trials = 100, sweep_order = 8;
  std::string population = "A";

  auto* classify = app.add_subcommand("classify", "report on the pair (H, K)");
  classify->add_option("H", hs)->required();
  classify->add_option("K", ks)->required();

  auto* invert = app.add_subcommand("invert", "invert a matrix from a JSON file");
  invert->add_option("H", hs)->required();
  invert->add_option("K", ks)->required();
  invert->add_option("matrix", file)->required()->check(CLI::ExistingFile);

  auto* det = app.add_subcommand("det", "print the determinant of a matrix from a JSON file");
  det->add_option("H", hs)->required();
  det->add_option("K", ks)->required();
  det->add_option("matrix", file)->required()->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "compare the naive and determinant invertibility checks");
  bench->add_option("H", hs)->required();
  bench->add_option("K", ks)->required();
  bench->add_option("--trials", trials)->capture_default_str();
  bench->add_option("--population", population, "A, Aut or M")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "classify every catalog pair up to an order");
  sweep->add_option("max_order", sweep_order)->required();

  for (auto* sub : {classify, invert, det, bench, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(g, hs, ks);
    if (*invert) return cmd_invert(g, hs, ks, file);
    if (*det) return cmd_det(g, hs, ks, file);
    if (*bench) return cmd_bench(g, hs, ks, trials, population);
    if (*sweep) return cmd_sweep(g, sweep_order);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
