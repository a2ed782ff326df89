// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <set>
#include <vector>

#include "polybasis/coherence.hpp"
#include "polybasis/local_confluence.hpp"
#include "polybasis/order.hpp"
#include "polybasis/srs.hpp"
#include "polybasis/system.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis::test {

/// A validated system bundle ready for the coherence operations.
struct Workbench {
  RewritingSystem system;
  TerminationOrder order;
  LocalConfluenceStructure lc;
};

inline Workbench free_group_bench(std::size_t generators) {
  static const std::vector<std::string> names = {"a", "b", "c", "d"};
  std::vector<std::string> gens(names.begin(), names.begin() + static_cast<long>(generators));
  SystemWithOrder fg = free_group_system(gens);
  Report report = check_noetherian(fg.system, fg.order);
  if (!report.ok) throw std::runtime_error("free group failed termination: " + report.summary);
  LcSynthesis lc = synthesize_lc(fg.system, fg.order);
  if (!lc.ok()) throw std::runtime_error("free group failed confluence");
  return Workbench{std::move(fg.system), std::move(fg.order), std::move(*lc.structure)};
}

/// All oriented steps leaving `at` (forward applications plus backward
/// un-applications), in deterministic order.
inline std::vector<OrientedStep> all_moves(const RewritingSystem& sys, const Object& at) {
  std::vector<OrientedStep> moves;
  for (const StepRef& s : sys.forward_steps(at)) moves.push_back(forward(s));
  if (sys.mode() == SystemMode::srs) {
    for (std::uint32_t pos = 0; pos <= at.size(); ++pos)
      for (std::uint32_t g = 0; g < sys.rules().size(); ++g)
        if (sys.backward_applies(at, StepRef{g, pos})) moves.push_back(backward(StepRef{g, pos}));
  } else {
    for (std::uint32_t g = 0; g < sys.steps().size(); ++g)
      if (sys.backward_applies(at, StepRef{g, 0})) moves.push_back(backward(StepRef{g, 0}));
  }
  return moves;
}

/// Random zig-zag by a bounded random walk; word lengths stay within
/// `max_word_len` in srs mode.
inline ZigZag random_walk(const RewritingSystem& sys, std::mt19937& rng, const Object& start,
                          std::size_t steps, std::size_t max_word_len = 12) {
  ZigZag zz = empty_zigzag(start);
  Object at = start;
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<OrientedStep> moves = all_moves(sys, at);
    std::erase_if(moves, [&](const OrientedStep& m) {
      if (sys.mode() != SystemMode::srs || m.dir == Direction::forward) return false;
      const StringRule& r = sys.rule(m.step.generator);
      return at.size() - r.rhs.size() + r.lhs.size() > max_word_len;
    });
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const OrientedStep move = moves[pick(rng)];
    zz.steps.push_back(move);
    at = sys.traverse(at, move);
  }
  return zz;
}

/// Random word over the system alphabet.
inline Object random_word(const RewritingSystem& sys, std::mt19937& rng, std::size_t len) {
  Object w;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(sys.symbol_count()) - 1);
  for (std::size_t i = 0; i < len; ++i) w.syms.push_back(static_cast<Symbol>(pick(rng)));
  return w;
}

/// Move-sequence oracle for the list extension on small ints: breadth-first
/// search over single replacement moves, bounded in depth and list length.
/// Complete for the pairs it is used on: a positive instance always has a
/// witness whose intermediate lists stay within |xs| + |ys| elements, built
/// by replacing the non-identity blocks left to right.
inline bool list_ext_oracle(const std::vector<int>& xs, const std::vector<int>& ys,
                            std::size_t max_depth = 6, std::size_t max_len = 10) {
  if (xs == ys) return false;
  std::set<std::vector<int>> seen{xs};
  std::vector<std::vector<int>> frontier{xs};
  for (std::size_t depth = 0; depth < max_depth; ++depth) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& cur : frontier) {
      for (std::size_t i = 0; i < cur.size(); ++i) {
        // all replacement lists over values strictly below cur[i]
        std::vector<std::vector<int>> repls{{}};
        for (std::size_t r = 0; r < repls.size(); ++r) {
          std::vector<int> base = repls[r];
          std::vector<int> candidate(cur.begin(), cur.begin() + static_cast<long>(i));
          candidate.insert(candidate.end(), base.begin(), base.end());
          candidate.insert(candidate.end(), cur.begin() + static_cast<long>(i) + 1, cur.end());
          if (candidate == ys) return true;
          if (candidate.size() <= max_len && seen.insert(candidate).second)
            next.push_back(candidate);
          if (base.size() + cur.size() <= max_len)
            for (int v = 0; v < cur[i]; ++v) {
              std::vector<int> extended = base;
              extended.push_back(v);
              repls.push_back(std::move(extended));
            }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return false;
}

}  // namespace polybasis::test
