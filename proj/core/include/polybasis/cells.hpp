// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "polybasis/local_confluence.hpp"
#include "polybasis/report.hpp"
#include "polybasis/system.hpp"
#include "polybasis/types.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis {

/// A primitive 2-cell between two parallel zig-zags.
///   generator  - a declared 2-cell, endpoints from the system's cell table
///   diamond    - the chosen local-confluence cell of a local peak: source is
///                the peak zig-zag, target its resolved valley
///   rinv       - source s.s⁻¹, target the empty zig-zag at the step's source
///   linv       - source s⁻¹.s, target the empty zig-zag at the step's target
/// `at` anchors rinv/linv cells: the object where the cell's source zig-zag
/// starts (a StepRef alone does not determine the word in string mode).
struct AtomicCell {
  enum class Kind { generator, diamond, rinv, linv };

  Kind kind = Kind::rinv;
  std::uint32_t generator = 0;  // kind == generator
  Object apex;                  // kind == diamond
  StepRef left;                 // kind == diamond
  StepRef right;                // kind == diamond
  StepRef step;                 // kind == rinv / linv
  Object at;                    // kind == rinv / linv

  static AtomicCell make_generator(std::uint32_t cell_index);
  static AtomicCell make_diamond(Object apex, StepRef left, StepRef right);
  static AtomicCell make_rinv(StepRef step, Object source_of_step);
  static AtomicCell make_linv(StepRef step, Object target_of_step);

  friend bool operator==(const AtomicCell&, const AtomicCell&) = default;
};

/// An atomic cell extended by composable contexts on both sides and taken
/// forward or backward. Source = left . source(cell) . right, target
/// analogous, swapped when backward.
struct WhiskeredCell {
  ZigZag left;
  AtomicCell cell;
  ZigZag right;
  Direction dir = Direction::forward;

  friend bool operator==(const WhiskeredCell&, const WhiskeredCell&) = default;
};

/// A composable chain of whiskered cells between two parallel zig-zags. The
/// target is stored for cheap chaining; check_rewrite_zigzag revalidates it
/// against the cells.
struct RewriteZigZag {
  ZigZag source;
  std::vector<WhiskeredCell> cells;
  ZigZag target;

  friend bool operator==(const RewriteZigZag&, const RewriteZigZag&) = default;
};

RewriteZigZag empty_rewrite_zigzag(ZigZag at);

/// Endpoints of a bare atomic cell. Diamond targets need the validated
/// local-confluence structure.
ZigZag cell_source(const RewritingSystem& sys, const AtomicCell& cell);
ZigZag cell_target(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                   const AtomicCell& cell);

ZigZag whiskered_source(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                        const WhiskeredCell& cell);
ZigZag whiskered_target(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                        const WhiskeredCell& cell);

/// Extends every cell's contexts and both endpoints by the given zig-zags.
/// Requires target(left) == start(source) and target(source) == start(right)
/// (ErrorCode::endpoint_mismatch).
RewriteZigZag whisker(const RewritingSystem& sys, const ZigZag& left, const RewriteZigZag& rz,
                      const ZigZag& right);

/// Chain concatenation; requires target(a) == source(b) as step lists
/// (ErrorCode::cell_chain_mismatch).
RewriteZigZag rz_compose(const RewritingSystem& sys, const RewriteZigZag& a,
                         const RewriteZigZag& b);

/// Reverses the chain and flips every cell's direction.
RewriteZigZag rz_invert(const RewriteZigZag& a);

/// The rewrite zig-zag from u.u⁻¹ to the empty zig-zag at start(u), built
/// from one whiskered rinv/linv cell per step, innermost pair first.
RewriteZigZag inv_cancellation(const RewritingSystem& sys, const ZigZag& u);

/// Validates a rewrite zig-zag: every cell internally valid (contexts
/// composable, atomic cell known to the system, diamonds matching the
/// validated structure), the chain condition end to end, and the stored
/// target. Reports the first violation with its cell index.
Report check_rewrite_zigzag(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                            const RewriteZigZag& rz);

}  // namespace polybasis
