// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace polybasis {

/// Decides the list extension of a strict transitive order: xs >L ys iff ys
/// is obtainable from xs by one or more moves, each replacing one element by
/// a finite (possibly empty) list of strictly smaller elements.
///
/// Decision procedure: ys must split into |xs| consecutive (possibly empty)
/// blocks where block i is either the singleton [xs_i] or a list of elements
/// all below xs_i, with at least one non-identity block. Iterated moves are
/// absorbed: an element produced by a move stays strictly below the original
/// it descends from, so any move sequence flattens into such a partition.
/// Matching is left-to-right with backtracking, memoized on (i, j, moved).
template <class T, class Gt>
bool list_ext_gt(Gt&& gt, const std::vector<T>& xs, const std::vector<T>& ys) {
  const std::size_t n = xs.size();
  const std::size_t m = ys.size();

  // memo[i][j][moved]: 0 unknown, 1 false, 2 true
  std::vector<unsigned char> memo((n + 1) * (m + 1) * 2, 0);
  auto slot = [&](std::size_t i, std::size_t j, bool moved) -> unsigned char& {
    return memo[(i * (m + 1) + j) * 2 + (moved ? 1 : 0)];
  };

  auto match = [&](auto&& self, std::size_t i, std::size_t j, bool moved) -> bool {
    if (i == n) return j == m && moved;
    unsigned char& cached = slot(i, j, moved);
    if (cached != 0) return cached == 2;
    bool result = false;
    // identity block
    if (j < m && ys[j] == xs[i] && self(self, i + 1, j + 1, moved)) result = true;
    // replacement block: a maximal run of elements below xs[i], any prefix of
    // which (including the empty one) may form the block
    if (!result) {
      for (std::size_t k = j; k <= m; ++k) {
        if (self(self, i + 1, k, true)) {
          result = true;
          break;
        }
        if (k == m || !gt(xs[i], ys[k])) break;
      }
    }
    cached = result ? 2 : 1;
    return result;
  };

  return match(match, 0, 0, false);
}

}  // namespace polybasis
