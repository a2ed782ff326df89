// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "polybasis/coherence.hpp"
#include "polybasis/local_confluence.hpp"
#include "polybasis/report.hpp"
#include "polybasis/system.hpp"
#include "polybasis/types.hpp"

namespace polybasis {

/// A derivation tree over the six closure rules for properties of closed
/// zig-zags. Every node concludes a closed zig-zag, recomputable locally
/// from the node's stored data:
///   empty_fill(x)            |- e_x
///   inv_pair(u)              |- u.u⁻¹
///   rotate(child; u, v)      child |- u.v,    node |- v.u
///   paste(a, b; u, v, w)     a |- u.v⁻¹, b |- v.w⁻¹, node |- u.w⁻¹
///   invert(child; u)         child |- u,      node |- u⁻¹
///   diamond_fill(peak)       |- peak.valley⁻¹ for the chosen diamond
/// Nodes store full zig-zags (no sharing) so the checker stays node-local.
struct Certificate {
  enum class Kind { empty_fill, inv_pair, rotate, paste, invert, diamond_fill };

  Kind kind = Kind::empty_fill;
  Object object;                      // empty_fill
  ZigZag u, v, w;                     // inv_pair: u; rotate: u,v; paste: u,v,w; invert: u
  Object apex;                        // diamond_fill
  StepRef left, right;                // diamond_fill
  std::vector<Certificate> children;  // arity: rotate/invert 1, paste 2, leaves 0

  static Certificate empty_fill(Object x);
  static Certificate inv_pair(ZigZag u);
  static Certificate rotate(Certificate child, ZigZag u, ZigZag v);
  static Certificate paste(Certificate a, Certificate b, ZigZag u, ZigZag v, ZigZag w);
  static Certificate invert_node(Certificate child, ZigZag u);
  static Certificate diamond_fill(Object apex, StepRef left, StepRef right);
};

const char* certificate_kind_name(Certificate::Kind kind);
std::size_t expected_arity(Certificate::Kind kind);

/// The zig-zag this node claims to prove, computed from the node's own data
/// only (children are not consulted). Diamond conclusions consult the
/// validated structure.
ZigZag certificate_conclusion(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                              const Certificate& node);

std::size_t certificate_size(const Certificate& cert);
std::size_t count_leaves(const Certificate& cert, Certificate::Kind kind);

/// Compiles the contraction of a closed zig-zag into a derivation tree:
/// empty inputs and literal u.u⁻¹ shapes conclude directly by the first two
/// rules; otherwise every whiskered cell of the contraction witness is
/// translated into rotation/pasting around its atomic conclusion and the
/// chain is folded with paste.
Certificate certify_closed(const RewritingSystem& sys, const TerminationOrder& order,
                           const LocalConfluenceStructure& lc, const ZigZag& u,
                           CoherenceStats* stats = nullptr);

/// Validates a certificate against its claimed conclusion. Purely local per
/// node: well-formed stored zig-zags, premise shapes, children's conclusions
/// matching, root conclusion equal to `u`. Failures name the node path.
Report check_certificate(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                         const Certificate& cert, const ZigZag& u);

}  // namespace polybasis
