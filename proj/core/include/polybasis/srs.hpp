// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polybasis/order.hpp"
#include "polybasis/system.hpp"
#include "polybasis/types.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis {

enum class PeakKind { full_overlap, partial_overlap, peiffer };

const char* peak_kind_name(PeakKind kind);

/// A minimal branching of two rule applications: the apex word carries both
/// redexes, with left.position <= right.position (ties broken by generator).
/// FullOverlap: the same rule at the same position. PartialOverlap: the two
/// left-hand sides share at least one letter position but are not identical.
/// Peiffer: disjoint occurrences, placed adjacently in the canonical apex.
struct CriticalPeak {
  Object word;
  StepRef left;
  StepRef right;
  PeakKind kind;

  friend bool operator==(const CriticalPeak&, const CriticalPeak&) = default;
};

/// Substitutes the rule's right-hand side for the left-hand side occurrence
/// at `position` (ErrorCode::no_match when the left-hand side is absent).
Object apply_rule(const RewritingSystem& sys, const Object& word, std::uint32_t rule,
                  std::uint32_t position);

struct NormalizeResult {
  Object normal_form;
  ZigZag path;  // forward reduction sequence from the input to the normal form
};

/// Repeatedly applies the leftmost applicable rule at the leftmost position
/// until none applies. Requires a terminating system (an iteration fuel cap
/// guards against non-termination and reports ErrorCode::measure_violation).
NormalizeResult normalize(const RewritingSystem& sys, const Object& word);

/// Enumerates all critical peaks: for every ordered rule pair, every offset
/// at which the two left-hand sides overlap consistently, plus the canonical
/// adjacent Peiffer placements and the full self-overlaps. `max_window` caps
/// the apex length when nonzero. Deterministic order.
std::vector<CriticalPeak> critical_peaks(const RewritingSystem& sys, std::size_t max_window = 0);

struct SystemWithOrder {
  RewritingSystem system;
  TerminationOrder order;
};

/// The free group on the given generators as a string rewriting system:
/// alphabet = generators plus formal inverses, with the two cancellation
/// rules per generator pair, under the rule-length-decreasing order.
SystemWithOrder free_group_system(const std::vector<std::string>& generators);

/// Name of the formal inverse letter used by free_group_system: single
/// lowercase ASCII letters toggle case, anything else gains a "^-" suffix.
std::string inverse_letter_name(const std::string& name);

}  // namespace polybasis
