// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polybasis/report.hpp"
#include "polybasis/system.hpp"
#include "polybasis/types.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis {

/// Declared termination order on objects. A value starts unvalidated; gt()
/// requires a prior successful check_noetherian, which also caches the
/// reachability / explicit closure. After validation the value is immutable
/// and may be shared between threads.
class TerminationOrder {
 public:
  enum class Kind { graph_reachability, rule_length_decreasing, explicit_pairs };

  static TerminationOrder graph_reachability();
  static TerminationOrder rule_length_decreasing();
  static TerminationOrder explicit_pairs(std::vector<std::pair<std::string, std::string>> pairs);

  Kind kind() const { return kind_; }
  bool validated() const { return validated_; }
  const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }

  /// Strict comparison x > y. Transitive and irreflexive by validation.
  /// Objects unknown to an explicit order are incomparable (returns false).
  bool gt(const Object& x, const Object& y) const;

 private:
  friend Report check_noetherian(const RewritingSystem& sys, TerminationOrder& order);

  explicit TerminationOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  bool validated_ = false;
  std::vector<std::pair<std::string, std::string>> pairs_;
  std::map<Symbol, std::set<Symbol>> closure_;  // reachability or explicit pair closure
};

const char* order_kind_name(TerminationOrder::Kind kind);

/// Validates that the order is Noetherian and that every step generator
/// strictly decreases. Graph reachability: the step graph must be acyclic
/// (a found cycle is reported). Rule length: every rule must strictly
/// shorten. Explicit pairs: the transitive closure must be irreflexive and
/// every declared step must decrease. On PASS the order is marked validated.
/// Throws ErrorCode::mode_mismatch when the order kind does not fit the
/// system mode.
Report check_noetherian(const RewritingSystem& sys, TerminationOrder& order);

/// The full visited-object sequence of a zig-zag, the measure compared under
/// the list extension by the valley-rewriting loop.
std::vector<Object> zigzag_measure(const RewritingSystem& sys, const ZigZag& u);

/// list_ext_gt specialised to object lists under a validated order.
bool object_list_ext_gt(const TerminationOrder& order, const std::vector<Object>& xs,
                        const std::vector<Object>& ys);

}  // namespace polybasis
