#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "groupdet/aut_analysis.hpp"
#include "groupdet/pairs.hpp"

namespace groupdet {

// One spec per isomorphism class of order at most min(max_order, 15), ordered
// by group order.
std::vector<std::string> catalog_specs(std::size_t max_order);

struct SweepOptions {
  std::size_t max_order = 8;
  EnumLimits limits;
  // Also run compare_aut_vs_A when the product is within limits.max_product_order.
  bool compare_aut = true;
};

struct SweepEntry {
  PairReport report;
  std::optional<AutComparison> aut;
  // Aut comparison disagreeing with the report or with the common-factor structure.
  std::vector<std::string> violations;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepReport {
  std::size_t max_order = 0;
  std::vector<std::string> groups;
  std::vector<SweepEntry> entries;
  bool complete = true;

  // Theorem checks that failed, as "H,K: name".
  std::vector<std::string> violations() const;
  bool ok() const { return violations().empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

using SweepProgress = std::function<void(const SweepEntry&)>;

// Ordered pairs (H, K) of catalog groups with |H|, |K| <= max_order.
SweepReport run_sweep(const SweepOptions& opts, const SweepProgress& progress = {});

}  // namespace groupdet
