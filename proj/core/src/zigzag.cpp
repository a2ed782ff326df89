// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/zigzag.hpp"

#include "polybasis/error.hpp"

namespace polybasis {

std::size_t length(const ZigZag& u) { return u.steps.size(); }

Object zigzag_target(const RewritingSystem& sys, const ZigZag& u) {
  Object at = u.start;
  for (const OrientedStep& s : u.steps) at = sys.traverse(at, s);
  return at;
}

std::vector<Object> object_sequence(const RewritingSystem& sys, const ZigZag& u) {
  std::vector<Object> seq;
  seq.reserve(u.steps.size() + 1);
  seq.push_back(u.start);
  for (const OrientedStep& s : u.steps) seq.push_back(sys.traverse(seq.back(), s));
  return seq;
}

bool zigzag_wellformed(const RewritingSystem& sys, const ZigZag& u) {
  if (!sys.valid_object(u.start)) return false;
  Object at = u.start;
  for (const OrientedStep& s : u.steps) {
    auto next = sys.try_traverse(at, s);
    if (!next) return false;
    at = std::move(*next);
  }
  return true;
}

ZigZag compose(const RewritingSystem& sys, const ZigZag& u, const ZigZag& v) {
  if (zigzag_target(sys, u) != v.start)
    raise(ErrorCode::endpoint_mismatch, "compose: target(u) = " +
                                            sys.show_object(zigzag_target(sys, u)) +
                                            " but start(v) = " + sys.show_object(v.start));
  ZigZag out;
  out.start = u.start;
  out.steps.reserve(u.steps.size() + v.steps.size());
  out.steps = u.steps;
  out.steps.insert(out.steps.end(), v.steps.begin(), v.steps.end());
  return out;
}

ZigZag compose(const RewritingSystem& sys, const ZigZag& u, const ZigZag& v, const ZigZag& w) {
  return compose(sys, compose(sys, u, v), w);
}

ZigZag invert(const RewritingSystem& sys, const ZigZag& u) {
  ZigZag out;
  out.start = zigzag_target(sys, u);
  out.steps.reserve(u.steps.size());
  for (auto it = u.steps.rbegin(); it != u.steps.rend(); ++it) out.steps.push_back(invert(*it));
  return out;
}

bool is_valley(const ZigZag& u) { return !local_peak_index(u).has_value(); }

std::optional<std::size_t> local_peak_index(const ZigZag& u) {
  for (std::size_t i = 0; i + 1 < u.steps.size(); ++i)
    if (u.steps[i].dir == Direction::backward && u.steps[i + 1].dir == Direction::forward)
      return i;
  return std::nullopt;
}

std::optional<LocalPeakSplit> find_local_peak(const RewritingSystem& sys, const ZigZag& u) {
  auto idx = local_peak_index(u);
  if (!idx) return std::nullopt;
  std::vector<Object> seq = object_sequence(sys, u);
  LocalPeakSplit split;
  split.prefix.start = u.start;
  split.prefix.steps.assign(u.steps.begin(), u.steps.begin() + static_cast<long>(*idx));
  split.down = u.steps[*idx];
  split.up = u.steps[*idx + 1];
  split.left_target = seq[*idx];
  split.apex = seq[*idx + 1];
  split.right_target = seq[*idx + 2];
  split.suffix.start = split.right_target;
  split.suffix.steps.assign(u.steps.begin() + static_cast<long>(*idx) + 2, u.steps.end());
  return split;
}

}  // namespace polybasis
