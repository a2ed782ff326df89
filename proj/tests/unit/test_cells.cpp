// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"
#include "polybasis/cells.hpp"
#include "polybasis/error.hpp"

using namespace polybasis;

namespace {

// A small closed witness to play with: one diamond around the aAa peak.
RewriteZigZag sample_diamond_rz(const test::Workbench& fg) {
  Object a = *fg.system.parse_word("a");
  ZigZag peak{a, {backward(StepRef{0, 0}), forward(StepRef{1, 1})}};
  RewriteZigZag rz;
  rz.source = peak;
  rz.target = empty_zigzag(a);
  WhiskeredCell cell;
  cell.left = empty_zigzag(a);
  cell.cell = AtomicCell::make_diamond(*fg.system.parse_word("aAa"), StepRef{0, 0}, StepRef{1, 1});
  cell.right = empty_zigzag(a);
  rz.cells.push_back(cell);
  return rz;
}

}  // namespace

TEST_CASE("whisker with empty contexts is the identity") {
  test::Workbench fg = test::free_group_bench(1);
  RewriteZigZag rz = sample_diamond_rz(fg);
  Object a = *fg.system.parse_word("a");
  RewriteZigZag same = whisker(fg.system, empty_zigzag(a), rz, empty_zigzag(a));
  CHECK(same == rz);
}

TEST_CASE("whiskering an empty chain relocates its anchor") {
  test::Workbench fg = test::free_group_bench(1);
  Object aa = *fg.system.parse_word("aA");
  ZigZag down{aa, {forward(StepRef{0, 0})}};
  ZigZag up = invert(fg.system, down);

  RewriteZigZag empty_chain = empty_rewrite_zigzag(empty_zigzag(Object{}));
  RewriteZigZag moved = whisker(fg.system, down, empty_chain, up);
  CHECK(moved.cells.empty());
  CHECK(moved.source == compose(fg.system, down, up));
  CHECK(moved.target == moved.source);
}

TEST_CASE("whiskering a diamond shifts its contexts") {
  test::Workbench fg = test::free_group_bench(1);
  RewriteZigZag rz = sample_diamond_rz(fg);
  Object a = *fg.system.parse_word("a");

  ZigZag ctx{*fg.system.parse_word("aaA"), {forward(StepRef{0, 1})}};  // aaA -> a
  RewriteZigZag shifted = whisker(fg.system, ctx, rz, empty_zigzag(a));
  CHECK(shifted.cells.size() == 1);
  CHECK(shifted.cells[0].left == ctx);
  CHECK(shifted.source == compose(fg.system, ctx, rz.source));
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, shifted).ok);

  CHECK_THROWS_AS(whisker(fg.system, ctx, rz, ctx), EngineError);  // endpoint mismatch
}

TEST_CASE("whisker distributes over chain composition") {
  test::Workbench fg = test::free_group_bench(1);
  Object a = *fg.system.parse_word("a");
  RewriteZigZag first = sample_diamond_rz(fg);
  RewriteZigZag second = rz_invert(first);
  RewriteZigZag chained = rz_compose(fg.system, first, second);

  ZigZag ctx{*fg.system.parse_word("aaA"), {forward(StepRef{0, 1})}};
  RewriteZigZag lhs = whisker(fg.system, ctx, chained, empty_zigzag(a));
  RewriteZigZag rhs = rz_compose(fg.system, whisker(fg.system, ctx, first, empty_zigzag(a)),
                                 whisker(fg.system, ctx, second, empty_zigzag(a)));
  CHECK(lhs == rhs);
}

TEST_CASE("rz_invert is an involution and anti-homomorphism") {
  test::Workbench fg = test::free_group_bench(1);
  RewriteZigZag first = sample_diamond_rz(fg);
  RewriteZigZag second = rz_invert(first);

  CHECK(rz_invert(rz_invert(first)) == first);
  RewriteZigZag chained = rz_compose(fg.system, first, second);
  CHECK(rz_invert(chained) ==
        rz_compose(fg.system, rz_invert(second), rz_invert(first)));

  // a backward diamond checks out: source and target swap
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, second).ok);
  CHECK(second.cells[0].dir == Direction::backward);
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, chained).ok);

  RewriteZigZag bad = sample_diamond_rz(fg);
  CHECK_THROWS_AS(rz_compose(fg.system, bad, bad), EngineError);
}

TEST_CASE("inv_cancellation base cases") {
  test::Workbench fg = test::free_group_bench(1);
  Object x = *fg.system.parse_word("aA");

  RewriteZigZag none = inv_cancellation(fg.system, empty_zigzag(x));
  CHECK(none.cells.empty());
  CHECK(none.source == empty_zigzag(x));
  CHECK(none.target == empty_zigzag(x));

  ZigZag fwd{x, {forward(StepRef{0, 0})}};
  RewriteZigZag rinv = inv_cancellation(fg.system, fwd);
  REQUIRE(rinv.cells.size() == 1);
  CHECK(rinv.cells[0].cell.kind == AtomicCell::Kind::rinv);
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, rinv).ok);

  ZigZag bwd{Object{}, {backward(StepRef{0, 0})}};
  RewriteZigZag linv = inv_cancellation(fg.system, bwd);
  REQUIRE(linv.cells.size() == 1);
  CHECK(linv.cells[0].cell.kind == AtomicCell::Kind::linv);
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, linv).ok);
}

TEST_CASE("inv_cancellation collapses the innermost pair first") {
  test::Workbench fg = test::free_group_bench(2);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    ZigZag u = test::random_walk(fg.system, rng, test::random_word(fg.system, rng, 3), 3);
    RewriteZigZag cancel = inv_cancellation(fg.system, u);
    CHECK(cancel.cells.size() == length(u));
    CHECK(cancel.source == compose(fg.system, u, invert(fg.system, u)));
    CHECK(cancel.target == empty_zigzag(u.start));
    CHECK(length(cancel.target) == 0);
    if (!cancel.cells.empty()) {
      // first cell's contexts are the length-(n-1) prefix and its inverse
      CHECK(cancel.cells.front().left.steps.size() == length(u) - 1);
      CHECK(cancel.cells.back().left.steps.empty());
    }
    CHECK(check_rewrite_zigzag(fg.system, fg.lc, cancel).ok);
  }
}

TEST_CASE("check_rewrite_zigzag catches broken chains") {
  test::Workbench fg = test::free_group_bench(1);
  Object a = *fg.system.parse_word("a");

  RewriteZigZag empty_ok = empty_rewrite_zigzag(empty_zigzag(a));
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, empty_ok).ok);

  // two copies of the same diamond cell cannot chain: the second cell's
  // source is the peak again, but the chain is already at the valley
  RewriteZigZag broken = sample_diamond_rz(fg);
  broken.cells.push_back(broken.cells[0]);
  Report report = check_rewrite_zigzag(fg.system, fg.lc, broken);
  CHECK(!report.ok);
  CHECK(report.summary.find("cell 1") != std::string::npos);

  // stored target must match the final cell target
  RewriteZigZag lying = sample_diamond_rz(fg);
  lying.target = lying.source;
  CHECK(!check_rewrite_zigzag(fg.system, fg.lc, lying).ok);

  // diamonds must reference genuine peaks
  RewriteZigZag bogus = sample_diamond_rz(fg);
  bogus.cells[0].cell.apex = *fg.system.parse_word("aa");
  CHECK(!check_rewrite_zigzag(fg.system, fg.lc, bogus).ok);
}

TEST_CASE("declared 2-cell generators participate in chains") {
  SystemWithOrder fg = free_group_system({"a"});
  // declare a 2-cell from the aA-peak zig-zag to its empty valley
  ZigZag peak{*fg.system.parse_word(""), {backward(StepRef{0, 0}), forward(StepRef{0, 0})}};
  CellDecl decl{"alpha", peak, empty_zigzag(Object{})};
  fg.system.add_cell(decl);
  REQUIRE(check_noetherian(fg.system, fg.order).ok);
  LcSynthesis lc = synthesize_lc(fg.system, fg.order);
  REQUIRE(lc.ok());

  RewriteZigZag rz;
  rz.source = peak;
  rz.target = empty_zigzag(Object{});
  WhiskeredCell cell;
  cell.left = empty_zigzag(Object{});
  cell.cell = AtomicCell::make_generator(0);
  cell.right = empty_zigzag(Object{});
  rz.cells.push_back(cell);
  CHECK(check_rewrite_zigzag(fg.system, *lc.structure, rz).ok);

  rz.cells[0].cell.generator = 7;
  CHECK(!check_rewrite_zigzag(fg.system, *lc.structure, rz).ok);
}
