// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polybasis/order.hpp"
#include "polybasis/srs.hpp"
#include "polybasis/system.hpp"
#include "polybasis/types.hpp"

namespace polybasis {

/// Chosen resolution of a local peak: a zig-zag from the target of the
/// peak's left step to the target of its right step. Strict valleys run
/// Forward* then Backward* through the reduct; relaxed (Winkler-Buchberger
/// shaped) resolutions may be arbitrary zig-zags whose inner objects all lie
/// below the apex.
struct PeakResolution {
  ZigZag path;
  Object reduct;
};

/// A total, deterministic choice of resolution for every local peak of a
/// validated system. Graph mode stores the finite peak table directly;
/// string mode stores resolutions for the critical-peak templates and embeds
/// them into context on demand (disjoint redexes resolve positionally).
class LocalConfluenceStructure {
 public:
  /// Resolution of the local peak (a, b) out of `apex`; the result runs from
  /// the target of a to the target of b. Mirrored lookups are derived from
  /// the canonical orientation, so resolve(apex, b, a) is the inverse path.
  /// Throws ErrorCode::unresolved_peak when the peak is unknown or malformed.
  PeakResolution resolve(const RewritingSystem& sys, const Object& apex, const StepRef& a,
                         const StepRef& b) const;

  bool relaxed() const { return relaxed_; }

  struct TemplateResolution {
    CriticalPeak peak;
    ZigZag valley;
    Object reduct;
  };

  const std::vector<TemplateResolution>& templates() const { return templates_; }

  /// Builds a graph-mode structure from explicit per-peak resolutions, keyed
  /// by (apex, left generator, right generator) with left <= right. Set
  /// `relaxed` when the resolutions are Winkler-Buchberger shaped rather
  /// than strict valleys.
  static LocalConfluenceStructure from_graph_table(
      std::map<std::tuple<Symbol, std::uint32_t, std::uint32_t>, PeakResolution> table,
      bool relaxed = false);

 private:
  friend struct LcBuilder;

  SystemMode mode_ = SystemMode::graph;
  bool relaxed_ = false;
  std::map<std::tuple<Symbol, std::uint32_t, std::uint32_t>, PeakResolution> graph_table_;
  std::vector<TemplateResolution> templates_;
  // (left gen, left offset, right gen, right offset) -> index into templates_
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, std::size_t>
      template_index_;
};

/// A non-joinable local peak, reported as a value.
struct ConfluenceFailure {
  Object apex;
  StepRef left;
  StepRef right;
  Object left_result;   // normal form reached from the left target
  Object right_result;  // normal form reached from the right target
  std::string message;
};

struct LcSynthesis {
  std::optional<LocalConfluenceStructure> structure;
  std::optional<ConfluenceFailure> failure;

  bool ok() const { return structure.has_value(); }
};

/// Chooses a resolution for every local peak. Graph mode enumerates the
/// finite peak set; string mode resolves the critical-peak templates
/// (FullOverlap: empty valley; equal-target PartialOverlap: empty valley;
/// Peiffer: one step each side; otherwise joint normalization). Every chosen
/// valley is checked to keep its inner objects strictly below the apex.
/// Requires check_noetherian to have passed for `order`.
LcSynthesis synthesize_lc(const RewritingSystem& sys, const TerminationOrder& order);

}  // namespace polybasis
