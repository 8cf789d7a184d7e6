#include "groupdet/sweep.hpp"

#include "groupdet/catalog.hpp"
#include "groupdet/error.hpp"
#include "groupdet/structure.hpp"

namespace groupdet {

namespace {

struct CatalogEntry {
  std::size_t order;
  const char* spec;
};

const CatalogEntry kCatalog[] = {
    {1, "C1"},        {2, "C2"},         {3, "C3"},          {4, "C4"},
    {4, "E2^2"},      {5, "C5"},         {6, "C6"},          {6, "S3"},
    {7, "C7"},        {8, "C8"},         {8, "C2 x C4"},     {8, "E2^3"},
    {8, "D8"},        {8, "Q8"},         {9, "C9"},          {9, "C3 x C3"},
    {10, "C10"},      {10, "D10"},       {11, "C11"},        {12, "C12"},
    {12, "C2 x C6"},  {12, "D12"},       {12, "A4"},         {12, "Dic12"},
    {13, "C13"},      {14, "C14"},       {14, "D14"},        {15, "C15"},
};

}  // namespace

std::vector<std::string> catalog_specs(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& e : kCatalog)
    if (e.order <= max_order) out.emplace_back(e.spec);
  return out;
}

std::vector<std::string> SweepReport::violations() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    const std::string pair = e.report.h_spec + "," + e.report.k_spec;
    for (const auto& c : e.report.theorem_checks)
      if (c.applicable && !c.holds) out.push_back(pair + ": " + c.name);
    for (const auto& v : e.violations) out.push_back(pair + ": " + v);
  }
  return out;
}

SweepReport run_sweep(const SweepOptions& opts, const SweepProgress& progress) {
  SweepReport r;
  r.max_order = opts.max_order;
  r.groups = catalog_specs(opts.max_order);
  std::vector<GroupPtr> groups;
  for (const auto& s : r.groups) groups.push_back(build_group(s));

  for (const auto& h : groups)
    for (const auto& k : groups) {
      SweepEntry e;
      e.report = classify_pair(h, k, opts.limits);
      if (!e.report.complete) r.complete = false;
      const bool shared = e.report.common_factor.has_value();
      if (opts.compare_aut && h->order() * k->order() <= opts.limits.max_product_order && !shared) {
        try {
          e.aut = compare_aut_vs_A(h, k, opts.limits);
          if (!e.aut->equal()) e.violations.push_back("aut_equals_a_without_common_factor");
          if (e.report.aut_order && *e.report.aut_order != e.aut->aut_order)
            e.violations.push_back("aut_order_consistent");
        } catch (const ResourceError& err) {
          r.complete = false;
          e.report.notes.push_back(std::string("aut comparison skipped: ") + err.what());
        }
      }
      if (progress) progress(e);
      r.entries.push_back(std::move(e));
    }
  return r;
}

}  // namespace groupdet
