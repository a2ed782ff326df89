// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>
#include <set>

#include "helpers.hpp"
#include "polybasis/certify.hpp"
#include "polybasis/coherence.hpp"
#include "polybasis/error.hpp"
#include "polybasis/io.hpp"

using namespace polybasis;

namespace {

std::size_t count_kind(const RewriteZigZag& rz, AtomicCell::Kind kind) {
  std::size_t n = 0;
  for (const WhiskeredCell& c : rz.cells)
    if (c.cell.kind == kind) ++n;
  return n;
}

// All forward reduction sequences from a word (the reduction graph of a
// shortening system is finite below any word).
void enumerate_reductions(const RewritingSystem& sys, const ZigZag& prefix,
                          std::vector<ZigZag>& out) {
  Object at = zigzag_target(sys, prefix);
  std::vector<StepRef> steps = sys.forward_steps(at);
  if (steps.empty()) out.push_back(prefix);
  for (const StepRef& s : steps) {
    ZigZag longer = prefix;
    longer.steps.push_back(forward(s));
    enumerate_reductions(sys, longer, out);
  }
}

}  // namespace

TEST_CASE("rewrite_to_valley leaves valleys untouched") {
  test::Workbench fg = test::free_group_bench(1);
  Object x = *fg.system.parse_word("aA");
  ZigZag valley{x, {forward(StepRef{0, 0}), backward(StepRef{1, 0})}};
  ValleyResult res = rewrite_to_valley(fg.system, fg.order, fg.lc, valley);
  CHECK(res.witness.cells.empty());
  CHECK(res.valley == valley);
}

TEST_CASE("the aAa peak resolves in one diamond step") {
  test::Workbench fg = test::free_group_bench(1);
  Object a = *fg.system.parse_word("a");
  ZigZag peak{a, {backward(StepRef{0, 0}), forward(StepRef{1, 1})}};

  CoherenceStats stats;
  ValleyResult res = rewrite_to_valley(fg.system, fg.order, fg.lc, peak, &stats);
  CHECK(res.witness.cells.size() == 1);
  CHECK(res.witness.cells[0].cell.kind == AtomicCell::Kind::diamond);
  CHECK(res.valley == empty_zigzag(a));  // both legs collapse through "a"
  CHECK(stats.peak_rewrites == 1);
  CHECK(stats.measure_checks == 1);
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, res.witness).ok);
}

TEST_CASE("random zig-zags always reach checkable valleys") {
  test::Workbench fg = test::free_group_bench(2);
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    ZigZag z = test::random_walk(fg.system, rng, test::random_word(fg.system, rng, 3), 6);
    CoherenceStats stats;
    ValleyResult res = rewrite_to_valley(fg.system, fg.order, fg.lc, z, &stats);
    CHECK(is_valley(res.valley));
    CHECK(!find_local_peak(fg.system, res.valley).has_value());
    CHECK(res.witness.source == z);
    CHECK(res.witness.target == res.valley);
    CHECK(stats.measure_checks == stats.peak_rewrites);
    CHECK(check_rewrite_zigzag(fg.system, fg.lc, res.witness).ok);
  }
}

TEST_CASE("contract_closed on the trivial zig-zag") {
  test::Workbench fg = test::free_group_bench(1);
  Object x = *fg.system.parse_word("aA");
  RewriteZigZag witness = contract_closed(fg.system, fg.order, fg.lc, empty_zigzag(x));
  CHECK(witness.cells.empty());
  CHECK(witness.target == empty_zigzag(x));
}

TEST_CASE("contract_closed on apply-then-unapply") {
  // aA ~> "" <~ aA: one full-overlap diamond, then cancellations
  test::Workbench fg = test::free_group_bench(1);
  Object x = *fg.system.parse_word("aA");
  ZigZag closed{x, {forward(StepRef{0, 0}), backward(StepRef{0, 0})}};

  RewriteZigZag witness = contract_closed(fg.system, fg.order, fg.lc, closed);
  CHECK(witness.source == closed);
  CHECK(witness.target == empty_zigzag(x));
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, witness).ok);
  CHECK(count_kind(witness, AtomicCell::Kind::diamond) == 1);
  CHECK(count_kind(witness, AtomicCell::Kind::rinv) == 2);
  CHECK(witness.cells.size() == 3);
}

TEST_CASE("contract_closed requires a closed input") {
  test::Workbench fg = test::free_group_bench(1);
  ZigZag open{*fg.system.parse_word("aA"), {forward(StepRef{0, 0})}};
  CHECK_THROWS_AS(contract_closed(fg.system, fg.order, fg.lc, open), EngineError);
}

TEST_CASE("exhaustive small closed zig-zags contract to the trivial one") {
  test::Workbench fg = test::free_group_bench(1);
  // enumerate closed zig-zags of length <= 4 with every visited word of
  // length <= 4
  std::vector<ZigZag> closed;
  std::function<void(const ZigZag&, const Object&, std::size_t)> extend =
      [&](const ZigZag& z, const Object& at, std::size_t budget) {
        if (!z.steps.empty() && at == z.start) closed.push_back(z);
        if (budget == 0) return;
        for (const OrientedStep& move : test::all_moves(fg.system, at)) {
          Object next = fg.system.traverse(at, move);
          if (next.size() > 4) continue;
          ZigZag longer = z;
          longer.steps.push_back(move);
          extend(longer, next, budget - 1);
        }
      };
  std::vector<Object> words{Object{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() >= 4) continue;
    for (std::size_t s = 0; s < fg.system.symbol_count(); ++s) {
      Object w = words[i];
      w.syms.push_back(static_cast<Symbol>(s));
      words.push_back(std::move(w));
    }
  }
  for (const Object& w : words) extend(empty_zigzag(w), w, 4);

  CHECK(closed.size() > 50);
  for (const ZigZag& z : closed) {
    RewriteZigZag witness = contract_closed(fg.system, fg.order, fg.lc, z);
    CHECK(witness.source == z);
    CHECK(witness.target == empty_zigzag(z.start));
    CHECK(check_rewrite_zigzag(fg.system, fg.lc, witness).ok);
  }
}

TEST_CASE("basis_witness trivial cases") {
  test::Workbench fg = test::free_group_bench(1);
  Object x = *fg.system.parse_word("aA");

  BasisWitness same = basis_witness(fg.system, fg.order, fg.lc, empty_zigzag(x), empty_zigzag(x));
  CHECK(same.witness.source == empty_zigzag(x));
  CHECK(same.witness.target == empty_zigzag(x));
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, same.witness).ok);

  ZigZag u{x, {forward(StepRef{0, 0})}};
  BasisWitness self = basis_witness(fg.system, fg.order, fg.lc, u, u);
  CHECK(self.witness.source == u);
  CHECK(self.witness.target == u);
  CHECK(check_rewrite_zigzag(fg.system, fg.lc, self.witness).ok);
}

TEST_CASE("basis_witness links enumerated reductions to the empty word") {
  test::Workbench fg = test::free_group_bench(2);

  // "abBA" funnels through a single maximal reduction; "aAbB" genuinely forks
  Object funnel = *fg.system.parse_word("abBA");
  std::vector<ZigZag> funnel_reductions;
  enumerate_reductions(fg.system, empty_zigzag(funnel), funnel_reductions);
  CHECK(funnel_reductions.size() == 1);

  Object forked = *fg.system.parse_word("aAbB");
  std::vector<ZigZag> reductions;
  enumerate_reductions(fg.system, empty_zigzag(forked), reductions);
  REQUIRE(reductions.size() >= 2);
  reductions.push_back(funnel_reductions[0]);  // exercise the funnel too
  for (const ZigZag& r : reductions) CHECK(zigzag_target(fg.system, r) == Object{});

  for (std::size_t i = 0; i < reductions.size(); ++i)
    for (std::size_t j = 0; j < reductions.size(); ++j) {
      if (reductions[i].start != reductions[j].start) continue;
      BasisWitness bw =
          basis_witness(fg.system, fg.order, fg.lc, reductions[i], reductions[j]);
      CHECK(bw.witness.source == reductions[i]);
      CHECK(bw.witness.target == reductions[j]);
      CHECK(check_rewrite_zigzag(fg.system, fg.lc, bw.witness).ok);
    }
}

TEST_CASE("basis totality over an exhaustive enumeration of parallel pairs") {
  // free group on one generator: every zig-zag of length <= 3 whose words
  // stay within length 3, all parallel pairs
  test::Workbench fg = test::free_group_bench(1);
  std::vector<ZigZag> zigzags;
  std::function<void(const ZigZag&, const Object&, std::size_t)> extend =
      [&](const ZigZag& z, const Object& at, std::size_t budget) {
        zigzags.push_back(z);
        if (budget == 0) return;
        for (const OrientedStep& move : test::all_moves(fg.system, at)) {
          Object next = fg.system.traverse(at, move);
          if (next.size() > 3) continue;
          ZigZag longer = z;
          longer.steps.push_back(move);
          extend(longer, next, budget - 1);
        }
      };
  std::vector<Object> words{Object{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() >= 3) continue;
    for (std::size_t s = 0; s < fg.system.symbol_count(); ++s) {
      Object w = words[i];
      w.syms.push_back(static_cast<Symbol>(s));
      words.push_back(std::move(w));
    }
  }
  for (const Object& w : words) extend(empty_zigzag(w), w, 3);

  std::map<std::pair<Object, Object>, std::vector<const ZigZag*>> groups;
  for (const ZigZag& z : zigzags)
    groups[{z.start, zigzag_target(fg.system, z)}].push_back(&z);

  std::size_t pairs = 0;
  for (const auto& [endpoints, members] : groups)
    for (const ZigZag* u : members)
      for (const ZigZag* v : members) {
        BasisWitness bw = basis_witness(fg.system, fg.order, fg.lc, *u, *v);
        REQUIRE(check_rewrite_zigzag(fg.system, fg.lc, bw.witness).ok);
        ++pairs;
      }
  CHECK(pairs > 1000);
}

TEST_CASE("basis totality on a graph-mode system") {
  RewritingSystem sys = RewritingSystem::make_graph("diamond");
  Symbol a = sys.intern("a"), b = sys.intern("b"), c = sys.intern("c"), d = sys.intern("d");
  sys.add_step("ab", a, b);
  sys.add_step("ac", a, c);
  sys.add_step("bd", b, d);
  sys.add_step("cd", c, d);
  TerminationOrder order = TerminationOrder::graph_reachability();
  REQUIRE(check_noetherian(sys, order).ok);
  LcSynthesis lc = synthesize_lc(sys, order);
  REQUIRE(lc.ok());

  std::vector<ZigZag> zigzags;
  std::function<void(const ZigZag&, const Object&, std::size_t)> extend =
      [&](const ZigZag& z, const Object& at, std::size_t budget) {
        zigzags.push_back(z);
        if (budget == 0) return;
        for (const OrientedStep& move : test::all_moves(sys, at)) {
          ZigZag longer = z;
          longer.steps.push_back(move);
          extend(longer, sys.traverse(at, move), budget - 1);
        }
      };
  for (Symbol v : {a, b, c, d}) extend(empty_zigzag(Object::node(v)), Object::node(v), 4);

  std::map<std::pair<Object, Object>, std::vector<const ZigZag*>> groups;
  for (const ZigZag& z : zigzags) groups[{z.start, zigzag_target(sys, z)}].push_back(&z);
  std::size_t pairs = 0;
  for (const auto& [endpoints, members] : groups)
    for (const ZigZag* u : members)
      for (const ZigZag* v : members) {
        if (pairs > 4000) break;  // plenty of coverage
        BasisWitness bw = basis_witness(sys, order, *lc.structure, *u, *v);
        REQUIRE(check_rewrite_zigzag(sys, *lc.structure, bw.witness).ok);
        ++pairs;
      }
  CHECK(pairs > 500);
}

TEST_CASE("basis_witness rejects non-parallel inputs") {
  test::Workbench fg = test::free_group_bench(1);
  ZigZag u{*fg.system.parse_word("aA"), {forward(StepRef{0, 0})}};
  ZigZag v = empty_zigzag(*fg.system.parse_word("aA"));
  CHECK_THROWS_AS(basis_witness(fg.system, fg.order, fg.lc, u, v), EngineError);
}

TEST_CASE("identical inputs produce byte-identical witnesses") {
  test::Workbench fg = test::free_group_bench(2);
  std::mt19937 rng(73);
  ZigZag u = test::random_walk(fg.system, rng, *fg.system.parse_word("abBA"), 5);
  ZigZag v = compose(fg.system, u, empty_zigzag(zigzag_target(fg.system, u)));

  BasisWitness first = basis_witness(fg.system, fg.order, fg.lc, u, v);
  BasisWitness second = basis_witness(fg.system, fg.order, fg.lc, u, v);
  CHECK(serialize_witness(fg.system, first) == serialize_witness(fg.system, second));
}

TEST_CASE("witnesses over a system with non-erasing rules") {
  // two rules with a shared one-letter result; all overlaps are disjoint
  RewritingSystem sys = RewritingSystem::make_srs("absorb");
  Symbol a = sys.intern("a"), b = sys.intern("b"), c = sys.intern("c");
  sys.add_rule("ab", {a, b}, {a});
  sys.add_rule("ac", {a, c}, {a});
  TerminationOrder order = TerminationOrder::rule_length_decreasing();
  REQUIRE(check_noetherian(sys, order).ok);
  LcSynthesis lc = synthesize_lc(sys, order);
  REQUIRE(lc.ok());

  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    ZigZag u = test::random_walk(sys, rng, test::random_word(sys, rng, 4), 6, 8);
    ValleyResult res = rewrite_to_valley(sys, order, *lc.structure, u);
    CHECK(is_valley(res.valley));
    CHECK(check_rewrite_zigzag(sys, *lc.structure, res.witness).ok);

    ZigZag closed = compose(sys, u, invert(sys, u));
    RewriteZigZag contraction = contract_closed(sys, order, *lc.structure, closed);
    CHECK(check_rewrite_zigzag(sys, *lc.structure, contraction).ok);
    CHECK(contraction.target == empty_zigzag(closed.start));
    Certificate cert = certify_closed(sys, order, *lc.structure, closed);
    CHECK(check_certificate(sys, *lc.structure, cert, closed).ok);
  }
}

TEST_CASE("nonempty overlap valleys embed into context") {
  // aab -> b and ab -> b overlap on "aab"; the chosen valley needs a real
  // step on one leg
  RewritingSystem sys = RewritingSystem::make_srs("overlap");
  Symbol a = sys.intern("a"), b = sys.intern("b");
  std::uint32_t r1 = sys.add_rule("r1", {a, a, b}, {b});
  std::uint32_t r2 = sys.add_rule("r2", {a, b}, {b});
  TerminationOrder order = TerminationOrder::rule_length_decreasing();
  REQUIRE(check_noetherian(sys, order).ok);
  LcSynthesis lc = synthesize_lc(sys, order);
  REQUIRE(lc.ok());

  // the overlap template resolves through a one-step valley leg
  PeakResolution tmpl = lc.structure->resolve(sys, Object{{a, a, b}}, StepRef{r1, 0},
                                              StepRef{r2, 1});
  CHECK(tmpl.path.steps.size() == 1);
  CHECK(is_valley(tmpl.path));

  // the same peak inside a context shifts by the prefix length
  Object apex{{b, a, a, b, a}};
  PeakResolution shifted =
      lc.structure->resolve(sys, apex, StepRef{r1, 1}, StepRef{r2, 2});
  CHECK(shifted.path.start == sys.apply_forward(apex, StepRef{r1, 1}));
  CHECK(zigzag_target(sys, shifted.path) == sys.apply_forward(apex, StepRef{r2, 2}));
  CHECK(shifted.path.steps.size() == 1);
  CHECK(shifted.path.steps[0].step.position == tmpl.path.steps[0].step.position + 1);

  // the closed outline of the overlap diamond certifies through the general
  // compilation path, with the diamond itself as a leaf
  ZigZag outline = compose(sys, ZigZag{Object{{b}}, {backward(StepRef{r1, 0}), forward(StepRef{r2, 1})}},
                           invert(sys, tmpl.path));
  Certificate outline_cert = certify_closed(sys, order, *lc.structure, outline);
  CHECK(check_certificate(sys, *lc.structure, outline_cert, outline).ok);
  // the overlap diamond, plus the same-step diamond where the valley leg
  // meets the outline's return step
  CHECK(count_leaves(outline_cert, Certificate::Kind::diamond_fill) == 2);

  std::mt19937 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    ZigZag u = test::random_walk(sys, rng, test::random_word(sys, rng, 4), 6, 8);
    ValleyResult res = rewrite_to_valley(sys, order, *lc.structure, u);
    CHECK(is_valley(res.valley));
    CHECK(check_rewrite_zigzag(sys, *lc.structure, res.witness).ok);

    ZigZag closed = compose(sys, u, invert(sys, u));
    Certificate cert = certify_closed(sys, order, *lc.structure, closed);
    CHECK(check_certificate(sys, *lc.structure, cert, closed).ok);
  }
}

TEST_CASE("relaxed resolutions still drive the valley loop") {
  // a graph whose chosen resolution is itself a zig-zag with a peak, all
  // strictly below the apex
  RewritingSystem sys = RewritingSystem::make_graph("relaxed");
  Symbol a = sys.intern("a"), b = sys.intern("b"), c = sys.intern("c"), d = sys.intern("d"),
         e = sys.intern("e");
  std::uint32_t ab = sys.add_step("ab", a, b);
  std::uint32_t ac = sys.add_step("ac", a, c);
  std::uint32_t bd = sys.add_step("bd", b, d);
  std::uint32_t cd = sys.add_step("cd", c, d);
  std::uint32_t de = sys.add_step("de", d, e);
  TerminationOrder order = TerminationOrder::graph_reachability();
  REQUIRE(check_noetherian(sys, order).ok);

  // resolution for the (ab, ac) peak: not a valley, but every inner object
  // (d, b, d) sits strictly below the apex a
  ZigZag detour{Object::node(b),
                {forward(StepRef{bd, 0}), backward(StepRef{bd, 0}), forward(StepRef{bd, 0}),
                 backward(StepRef{cd, 0})}};
  (void)de;
  std::map<std::tuple<Symbol, std::uint32_t, std::uint32_t>, PeakResolution> table;
  table[{a, ab, ac}] = PeakResolution{detour, Object::node(d)};
  LocalConfluenceStructure lc = LocalConfluenceStructure::from_graph_table(table, true);
  CHECK(lc.relaxed());

  ZigZag peak{Object::node(b), {backward(StepRef{ab, 0}), forward(StepRef{ac, 0})}};
  ValleyResult res = rewrite_to_valley(sys, order, lc, peak);
  CHECK(is_valley(res.valley));
  CHECK(res.witness.cells.size() == 2);  // the detour introduces one more peak
  CHECK(check_rewrite_zigzag(sys, lc, res.witness).ok);
}
