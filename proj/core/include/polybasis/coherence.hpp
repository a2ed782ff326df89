// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "polybasis/cells.hpp"
#include "polybasis/local_confluence.hpp"
#include "polybasis/order.hpp"
#include "polybasis/system.hpp"
#include "polybasis/types.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis {

/// Instrumentation counters for the coherence constructions. `measure_checks`
/// counts the strict-decrease assertions that passed; a failed assertion
/// throws ErrorCode::measure_violation instead of counting.
struct CoherenceStats {
  std::uint64_t peak_rewrites = 0;
  std::uint64_t measure_checks = 0;
  std::uint64_t apex_descents = 0;
};

struct ValleyResult {
  RewriteZigZag witness;  // from the input zig-zag to the valley
  ZigZag valley;
};

/// Rewrites an arbitrary zig-zag to a parallel valley, one whiskered diamond
/// per leftmost local peak. The visited-object measure strictly decreases
/// under the list extension at every iteration (asserted; a violation or the
/// fuel cap reports ErrorCode::measure_violation). Unresolvable peaks report
/// ErrorCode::unresolved_peak.
ValleyResult rewrite_to_valley(const RewritingSystem& sys, const TerminationOrder& order,
                               const LocalConfluenceStructure& lc, const ZigZag& u,
                               CoherenceStats* stats = nullptr);

/// Contracts a closed zig-zag to the empty zig-zag at its basepoint.
/// Each round rewrites to a valley v.w⁻¹ and, unless both legs are empty,
/// recurses on w⁻¹.v at the strictly smaller reduct (asserted), then pastes
/// the recursive witness between the two cancellation inserts of v.
RewriteZigZag contract_closed(const RewritingSystem& sys, const TerminationOrder& order,
                              const LocalConfluenceStructure& lc, const ZigZag& u,
                              CoherenceStats* stats = nullptr);

struct BasisWitness {
  RewriteZigZag witness;
  ZigZag u;
  ZigZag v;
};

/// The homotopy-basis witness between two parallel zig-zags: inserts v⁻¹.v
/// after u, then contracts the closed zig-zag u.v⁻¹ whiskered on the right
/// by v. Throws ErrorCode::not_parallel when endpoints disagree.
BasisWitness basis_witness(const RewritingSystem& sys, const TerminationOrder& order,
                           const LocalConfluenceStructure& lc, const ZigZag& u, const ZigZag& v,
                           CoherenceStats* stats = nullptr);

/// Iteration fuel cap shared by the engine loops; reads POLYBASIS_MAX_STEPS
/// once (default 1000000).
std::size_t max_engine_steps();

}  // namespace polybasis
