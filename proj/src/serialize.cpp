#include "groupdet/serialize.hpp"

#include "groupdet/catalog.hpp"
#include "groupdet/error.hpp"

namespace groupdet {

namespace {

template <class F>
auto parsing(const char* what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> opt_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json subgroup_to_json(const Subgroup& s) { return s.elements(); }

Subgroup subgroup_from_json(const Json& j, const GroupPtr& parent) {
  return Subgroup(parent, j.get<std::vector<Elem>>());
}

}  // namespace

Json group_to_json(const GroupPtr& g) {
  Json j;
  j["order"] = g->order();
  bool rebuilds = false;
  if (g->has_spec()) {
    j["spec"] = g->spec();
    try {
      rebuilds = same_group(build_group(g->spec()), g);
    } catch (const Error&) {
      rebuilds = false;
    }
  }
  if (!rebuilds) {
    const std::size_t n = g->order();
    Json rows = Json::array();
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> row(n);
      for (Elem b = 0; b < n; ++b) row[b] = g->mul(a, b);
      rows.push_back(row);
    }
    j["table"] = rows;
    if (!g->labels().empty()) j["labels"] = g->labels();
  }
  return j;
}

GroupPtr group_from_json(const Json& j) {
  return parsing("group", [&] {
    if (j.is_string()) return build_group(j.get<std::string>());
    if (!j.contains("table")) return build_group(j.at("spec").get<std::string>());
    auto rows = j.at("table").get<std::vector<std::vector<Elem>>>();
    std::vector<Elem> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw ParseError("group: table is not square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    auto labels = j.contains("labels") ? j.at("labels").get<std::vector<std::string>>() : std::vector<std::string>{};
    return FiniteGroup::from_table(std::move(flat), j.value("spec", std::string{}), std::move(labels));
  });
}

Json map_to_json(const GroupMap& f) {
  return {{"domain", group_to_json(f.domain())}, {"codomain", group_to_json(f.codomain())}, {"values", f.values()}};
}

GroupMap map_from_json(const Json& j) {
  return parsing("map", [&] {
    return GroupMap(group_from_json(j.at("domain")), group_from_json(j.at("codomain")),
                    j.at("values").get<std::vector<Elem>>());
  });
}

Json matrix_to_json(const EndoMatrix& m) {
  Json factors = Json::array();
  for (const auto& g : m.factors()) factors.push_back(group_to_json(g));
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).values());
    rows.push_back(row);
  }
  return {{"factors", factors}, {"entries", rows}};
}

EndoMatrix matrix_from_json(const Json& j) {
  return parsing("matrix", [&] {
    std::vector<GroupPtr> factors;
    for (const auto& g : j.at("factors")) factors.push_back(group_from_json(g));
    const auto& rows = j.at("entries");
    const std::size_t n = factors.size();
    if (rows.size() != n) throw ParseError("matrix: expected " + std::to_string(n) + " rows");
    std::vector<GroupMap> entries;
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw ParseError("matrix: row " + std::to_string(r) + " has the wrong length");
      for (std::size_t c = 0; c < n; ++c)
        entries.emplace_back(factors[c], factors[r], rows[r][c].get<std::vector<Elem>>());
    }
    return EndoMatrix(factors, std::move(entries));
  });
}

Json counter_to_json(const OpCounter& c) {
  return {{"comparisons", c.comparisons}, {"lookups", c.lookups}, {"evaluations", c.evaluations},
          {"headline", c.headline()}};
}

OpCounter counter_from_json(const Json& j) {
  return parsing("counter", [&] {
    return OpCounter{j.at("comparisons").get<std::uint64_t>(), j.at("lookups").get<std::uint64_t>(),
                     j.at("evaluations").get<std::uint64_t>()};
  });
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::h: return "h";
    case Branch::k: return "k";
    case Branch::automatic: return "auto";
  }
  return "auto";
}

Branch branch_from_string(const std::string& s) {
  if (s == "h") return Branch::h;
  if (s == "k") return Branch::k;
  if (s == "auto") return Branch::automatic;
  throw ParseError("unknown branch '" + s + "' (expected h, k or auto)");
}

std::string to_string(Side s) { return s == Side::k ? "k" : "h"; }
std::string to_string(BenchMethod m) { return m == BenchMethod::naive ? "naive" : "determinant"; }

std::string to_string(Population p) {
  switch (p) {
    case Population::a: return "A";
    case Population::aut: return "Aut";
    case Population::m: return "M";
  }
  return "A";
}

namespace {

BenchMethod method_from_string(const std::string& s) {
  if (s == "naive") return BenchMethod::naive;
  if (s == "determinant") return BenchMethod::determinant;
  throw ParseError("unknown bench method '" + s + "'");
}

Population population_from_string(const std::string& s) {
  if (s == "A") return Population::a;
  if (s == "Aut") return Population::aut;
  if (s == "M") return Population::m;
  throw ParseError("unknown population '" + s + "'");
}

Side side_from_string(const std::string& s) {
  if (s == "k") return Side::k;
  if (s == "h") return Side::h;
  throw ParseError("unknown side '" + s + "'");
}

}  // namespace

Json decision_to_json(const DetDecision& d) {
  return {{"invertible", d.invertible}, {"branch", to_string(d.branch)}, {"sequence", d.sequence.images},
          {"n", d.sequence.n}};
}

DetDecision decision_from_json(const Json& j) {
  return parsing("decision", [&] {
    DetDecision d;
    d.invertible = j.at("invertible").get<bool>();
    d.branch = branch_from_string(j.at("branch").get<std::string>());
    d.sequence.n = j.at("n").get<std::size_t>();
    d.sequence.images = j.at("sequence").get<std::vector<std::size_t>>();
    return d;
  });
}

Json witness_to_json(const CompatWitness& w) {
  return {{"sigma", w.sigma.values()}, {"tau", w.tau.values()}, {"side", to_string(w.side)}, {"element", w.element}};
}

CompatWitness witness_from_json(const Json& j, const GroupPtr& h, const GroupPtr& k) {
  return parsing("witness", [&] {
    return CompatWitness{GroupMap(h, k, j.at("sigma").get<std::vector<Elem>>()),
                         GroupMap(k, h, j.at("tau").get<std::vector<Elem>>()),
                         side_from_string(j.at("side").get<std::string>()), j.at("element").get<Elem>()};
  });
}

Json common_factor_to_json(const CommonFactor& cf) {
  return {{"h_factor", subgroup_to_json(cf.h_factor)},
          {"h_complement", subgroup_to_json(cf.h_complement)},
          {"k_factor", subgroup_to_json(cf.k_factor)},
          {"k_complement", subgroup_to_json(cf.k_complement)},
          {"iso", cf.iso}};
}

CommonFactor common_factor_from_json(const Json& j, const GroupPtr& h, const GroupPtr& k) {
  return parsing("common factor", [&] {
    return CommonFactor{subgroup_from_json(j.at("h_factor"), h), subgroup_from_json(j.at("h_complement"), h),
                        subgroup_from_json(j.at("k_factor"), k), subgroup_from_json(j.at("k_complement"), k),
                        j.at("iso").get<std::vector<Elem>>()};
  });
}

Json report_to_json(const PairReport& r, const GroupPtr& h, const GroupPtr& k) {
  Json j;
  j["h"] = group_to_json(h);
  j["k"] = group_to_json(k);
  j["h_spec"] = r.h_spec;
  j["k_spec"] = r.k_spec;
  j["h_order"] = r.h_order;
  j["k_order"] = r.k_order;
  j["incompatible"] = opt(r.incompatible);
  j["incompatible_h_side"] = opt(r.incompatible_h_side);
  j["centrally_incompatible"] = opt(r.centrally_incompatible);
  j["centrally_incompatible_h_side"] = opt(r.centrally_incompatible_h_side);
  j["totally_incompatible"] = opt(r.totally_incompatible);
  j["total_length"] = opt(r.total_length);
  j["centrally_totally_incompatible"] = opt(r.centrally_totally_incompatible);
  j["central_total_length"] = opt(r.central_total_length);
  j["common_factor"] = r.common_factor ? common_factor_to_json(*r.common_factor) : Json(nullptr);
  j["common_central_factor"] = r.common_central_factor ? common_factor_to_json(*r.common_central_factor) : Json(nullptr);
  j["h_stem"] = r.h_stem;
  j["k_stem"] = r.k_stem;
  j["a_is_subgroup"] = opt(r.a_is_subgroup);
  j["a_subset_aut"] = opt(r.a_subset_aut);
  j["aut_subset_a"] = opt(r.aut_subset_a);
  j["a_equals_aut"] = opt(r.a_equals_aut);
  j["a_order"] = r.a_order;
  j["aut_order"] = opt(r.aut_order);
  j["aut_witness"] = r.aut_witness ? matrix_to_json(*r.aut_witness) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = ws;
  Json checks = Json::array();
  for (const auto& c : r.theorem_checks) checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}});
  j["theorem_checks"] = checks;
  j["theorems_hold"] = r.theorems_hold();
  j["complete"] = r.complete;
  j["notes"] = r.notes;
  return j;
}

PairReport report_from_json(const Json& j) {
  return parsing("pair report", [&] {
    GroupPtr h = group_from_json(j.at("h"));
    GroupPtr k = group_from_json(j.at("k"));
    PairReport r;
    r.h_spec = j.at("h_spec").get<std::string>();
    r.k_spec = j.at("k_spec").get<std::string>();
    r.h_order = j.at("h_order").get<std::size_t>();
    r.k_order = j.at("k_order").get<std::size_t>();
    r.incompatible = opt_from<bool>(j, "incompatible");
    r.incompatible_h_side = opt_from<bool>(j, "incompatible_h_side");
    r.centrally_incompatible = opt_from<bool>(j, "centrally_incompatible");
    r.centrally_incompatible_h_side = opt_from<bool>(j, "centrally_incompatible_h_side");
    r.totally_incompatible = opt_from<bool>(j, "totally_incompatible");
    r.total_length = opt_from<std::size_t>(j, "total_length");
    r.centrally_totally_incompatible = opt_from<bool>(j, "centrally_totally_incompatible");
    r.central_total_length = opt_from<std::size_t>(j, "central_total_length");
    if (!j.at("common_factor").is_null()) r.common_factor = common_factor_from_json(j.at("common_factor"), h, k);
    if (!j.at("common_central_factor").is_null())
      r.common_central_factor = common_factor_from_json(j.at("common_central_factor"), h, k);
    r.h_stem = j.at("h_stem").get<bool>();
    r.k_stem = j.at("k_stem").get<bool>();
    r.a_is_subgroup = opt_from<bool>(j, "a_is_subgroup");
    r.a_subset_aut = opt_from<bool>(j, "a_subset_aut");
    r.aut_subset_a = opt_from<bool>(j, "aut_subset_a");
    r.a_equals_aut = opt_from<bool>(j, "a_equals_aut");
    r.a_order = j.at("a_order").get<std::uint64_t>();
    r.aut_order = opt_from<std::uint64_t>(j, "aut_order");
    if (!j.at("aut_witness").is_null()) r.aut_witness = matrix_from_json(j.at("aut_witness"));
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w, h, k));
    for (const auto& c : j.at("theorem_checks"))
      r.theorem_checks.push_back({c.at("name").get<std::string>(), c.at("applicable").get<bool>(), c.at("holds").get<bool>()});
    r.complete = j.at("complete").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

Json comparison_to_json(const AutComparison& c) {
  Json a = Json::array(), b = Json::array();
  for (const auto& m : c.a_not_in_aut) a.push_back(matrix_to_json(m));
  for (const auto& m : c.aut_not_in_a) b.push_back(matrix_to_json(m));
  return {{"aut_order", c.aut_order}, {"a_order", c.a_order},     {"a_subset_aut", c.a_subset_aut},
          {"aut_subset_a", c.aut_subset_a}, {"equal", c.equal()}, {"a_not_in_aut", a},
          {"aut_not_in_a", b}};
}

AutComparison comparison_from_json(const Json& j) {
  return parsing("aut comparison", [&] {
    AutComparison c;
    c.aut_order = j.at("aut_order").get<std::uint64_t>();
    c.a_order = j.at("a_order").get<std::uint64_t>();
    c.a_subset_aut = j.at("a_subset_aut").get<bool>();
    c.aut_subset_a = j.at("aut_subset_a").get<bool>();
    for (const auto& m : j.at("a_not_in_aut")) c.a_not_in_aut.push_back(matrix_from_json(m));
    for (const auto& m : j.at("aut_not_in_a")) c.aut_not_in_a.push_back(matrix_from_json(m));
    return c;
  });
}

Json record_to_json(const BenchRecord& r) {
  return {{"pair", {r.h_spec, r.k_spec}},
          {"method", to_string(r.method)},
          {"sample", r.sample},
          {"steps_headline", r.steps_headline},
          {"steps_full",
           {{"pivot_inversion", r.steps_full.pivot_inversion},
            {"build_cost", r.steps_full.build_cost},
            {"injectivity_comparisons", r.steps_full.injectivity_comparisons}}},
          {"verdict", r.verdict},
          {"branch", r.branch ? Json(to_string(*r.branch)) : Json(nullptr)},
          {"determinant_defined", r.determinant_defined},
          {"wall_time", r.wall_time}};
}

BenchRecord record_from_json(const Json& j) {
  return parsing("bench record", [&] {
    BenchRecord r;
    r.h_spec = j.at("pair").at(0).get<std::string>();
    r.k_spec = j.at("pair").at(1).get<std::string>();
    r.method = method_from_string(j.at("method").get<std::string>());
    r.sample = j.at("sample").get<std::uint64_t>();
    r.steps_headline = j.at("steps_headline").get<std::uint64_t>();
    const auto& s = j.at("steps_full");
    r.steps_full = {s.at("pivot_inversion").get<std::uint64_t>(), s.at("build_cost").get<std::uint64_t>(),
                    s.at("injectivity_comparisons").get<std::uint64_t>()};
    r.verdict = j.at("verdict").get<bool>();
    if (!j.at("branch").is_null()) r.branch = branch_from_string(j.at("branch").get<std::string>());
    r.determinant_defined = j.at("determinant_defined").get<bool>();
    r.wall_time = j.at("wall_time").get<double>();
    return r;
  });
}

Json bench_to_json(const BenchSummary& s) {
  Json records = Json::array();
  for (const auto& r : s.records) records.push_back(record_to_json(r));
  return {{"pair", {s.h_spec, s.k_spec}},
          {"seed", s.seed},
          {"population", to_string(s.population)},
          {"branch", to_string(s.branch)},
          {"agreements", s.agreements},
          {"disagreements", s.disagreements},
          {"undefined", s.undefined},
          {"warnings", s.warnings},
          {"records", records}};
}

BenchSummary bench_from_json(const Json& j) {
  return parsing("bench summary", [&] {
    BenchSummary s;
    s.h_spec = j.at("pair").at(0).get<std::string>();
    s.k_spec = j.at("pair").at(1).get<std::string>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.population = population_from_string(j.at("population").get<std::string>());
    s.branch = branch_from_string(j.at("branch").get<std::string>());
    s.agreements = j.at("agreements").get<std::size_t>();
    s.disagreements = j.at("disagreements").get<std::size_t>();
    s.undefined = j.at("undefined").get<std::size_t>();
    s.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& r : j.at("records")) s.records.push_back(record_from_json(r));
    return s;
  });
}

Json sweep_to_json(const SweepReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    GroupPtr h = build_group(e.report.h_spec);
    GroupPtr k = build_group(e.report.k_spec);
    entries.push_back({{"report", report_to_json(e.report, h, k)},
                       {"aut", e.aut ? comparison_to_json(*e.aut) : Json(nullptr)},
                       {"violations", e.violations}});
  }
  return {{"max_order", r.max_order}, {"groups", r.groups},         {"complete", r.complete},
          {"ok", r.ok()},             {"violations", r.violations()}, {"entries", entries}};
}

SweepReport sweep_from_json(const Json& j) {
  return parsing("sweep report", [&] {
    SweepReport r;
    r.max_order = j.at("max_order").get<std::size_t>();
    r.groups = j.at("groups").get<std::vector<std::string>>();
    r.complete = j.at("complete").get<bool>();
    for (const auto& e : j.at("entries")) {
      SweepEntry s;
      s.report = report_from_json(e.at("report"));
      if (!e.at("aut").is_null()) s.aut = comparison_from_json(e.at("aut"));
      s.violations = e.at("violations").get<std::vector<std::string>>();
      r.entries.push_back(std::move(s));
    }
    return r;
  });
}

}  // namespace groupdet
