// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "polybasis/system.hpp"
#include "polybasis/types.hpp"

namespace polybasis {

std::size_t length(const ZigZag& u);

/// Endpoint of a zig-zag, walking every step (ErrorCode::no_match when some
/// step does not apply along the way).
Object zigzag_target(const RewritingSystem& sys, const ZigZag& u);

/// All visited objects including both endpoints; size() == length(u) + 1.
std::vector<Object> object_sequence(const RewritingSystem& sys, const ZigZag& u);

bool zigzag_wellformed(const RewritingSystem& sys, const ZigZag& u);

/// Concatenation. Requires target(u) == start(v) (ErrorCode::endpoint_mismatch).
ZigZag compose(const RewritingSystem& sys, const ZigZag& u, const ZigZag& v);
ZigZag compose(const RewritingSystem& sys, const ZigZag& u, const ZigZag& v, const ZigZag& w);

/// Reverses the step list and flips every direction.
ZigZag invert(const RewritingSystem& sys, const ZigZag& u);

/// Forward* then Backward*: no Backward step is followed by a Forward step.
bool is_valley(const ZigZag& u);

/// Index of the leftmost adjacent (Backward, Forward) pair, i.e. the leftmost
/// local peak; nullopt iff the zig-zag is a valley. Pure direction scan.
std::optional<std::size_t> local_peak_index(const ZigZag& u);

struct LocalPeakSplit {
  ZigZag prefix;       // start(u) .. left_target
  OrientedStep down;   // Backward step into the apex
  OrientedStep up;     // Forward step out of the apex
  ZigZag suffix;       // right_target .. target(u)
  Object apex;
  Object left_target;
  Object right_target;
};

/// Leftmost local peak with its context; compose(prefix, [down, up], suffix)
/// reassembles the input. Nullopt iff the input is a valley.
std::optional<LocalPeakSplit> find_local_peak(const RewritingSystem& sys, const ZigZag& u);

}  // namespace polybasis
