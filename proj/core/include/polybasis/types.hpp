// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace polybasis {

/// Interned name: an object name in graph mode, a letter in string mode.
using Symbol = std::int32_t;

enum class Direction : std::uint8_t { forward, backward };

inline Direction flip(Direction d) {
  return d == Direction::forward ? Direction::backward : Direction::forward;
}

/// One application of a reduction-step generator. `generator` indexes the
/// system's step table (graph mode) or rule table (string mode); `position`
/// is the letter index where the rule's left-hand side fires and is always 0
/// in graph mode. Two applications of the same rule at different positions
/// are distinct steps.
struct StepRef {
  std::uint32_t generator = 0;
  std::uint32_t position = 0;

  friend bool operator==(const StepRef&, const StepRef&) = default;
  friend auto operator<=>(const StepRef&, const StepRef&) = default;
};

struct OrientedStep {
  StepRef step;
  Direction dir = Direction::forward;

  friend bool operator==(const OrientedStep&, const OrientedStep&) = default;
  friend auto operator<=>(const OrientedStep&, const OrientedStep&) = default;
};

inline OrientedStep forward(StepRef s) { return {s, Direction::forward}; }
inline OrientedStep backward(StepRef s) { return {s, Direction::backward}; }

inline OrientedStep invert(const OrientedStep& s) { return {s.step, flip(s.dir)}; }

/// An object of the rewriting system: a single symbol in graph mode, a word
/// over the alphabet in string mode. Equality is letterwise.
struct Object {
  std::vector<Symbol> syms;

  static Object node(Symbol s) { return Object{{s}}; }
  static Object word(std::vector<Symbol> letters) { return Object{std::move(letters)}; }

  std::size_t size() const { return syms.size(); }
  bool empty() const { return syms.empty(); }

  friend bool operator==(const Object&, const Object&) = default;
  friend auto operator<=>(const Object&, const Object&) = default;
};

/// A composable sequence of oriented steps. The start object is stored
/// explicitly so the trivial zig-zag at any object is representable; the
/// endpoint and the visited objects are derived by walking the steps.
struct ZigZag {
  Object start;
  std::vector<OrientedStep> steps;

  friend bool operator==(const ZigZag&, const ZigZag&) = default;
};

inline ZigZag empty_zigzag(Object at) { return ZigZag{std::move(at), {}}; }

}  // namespace polybasis
