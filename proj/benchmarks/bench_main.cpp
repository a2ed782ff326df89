// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "polybasis/certify.hpp"
#include "polybasis/coherence.hpp"
#include "polybasis/list_extension.hpp"
#include "polybasis/local_confluence.hpp"
#include "polybasis/srs.hpp"

using namespace polybasis;

namespace {

struct Bench {
  RewritingSystem system;
  TerminationOrder order;
  LocalConfluenceStructure lc;
};

Bench make_bench(std::size_t m) {
  static const std::vector<std::string> names = {"a", "b", "c"};
  SystemWithOrder fg =
      free_group_system(std::vector<std::string>(names.begin(), names.begin() + m));
  check_noetherian(fg.system, fg.order);
  LcSynthesis lc = synthesize_lc(fg.system, fg.order);
  return Bench{std::move(fg.system), std::move(fg.order), std::move(*lc.structure)};
}

Object random_word(const RewritingSystem& sys, std::mt19937& rng, std::size_t len) {
  Object w;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(sys.symbol_count()) - 1);
  for (std::size_t i = 0; i < len; ++i) w.syms.push_back(static_cast<Symbol>(pick(rng)));
  return w;
}

ZigZag random_zigzag(const Bench& fg, std::mt19937& rng, const Object& start, std::size_t steps) {
  ZigZag zz = empty_zigzag(start);
  Object at = start;
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<OrientedStep> moves;
    for (const StepRef& s : fg.system.forward_steps(at)) moves.push_back(forward(s));
    if (at.size() + 2 <= 16)
      for (std::uint32_t pos = 0; pos <= at.size(); ++pos)
        for (std::uint32_t g = 0; g < fg.system.rules().size(); ++g)
          moves.push_back(backward(StepRef{g, pos}));
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    OrientedStep move = moves[pick(rng)];
    zz.steps.push_back(move);
    at = fg.system.traverse(at, move);
  }
  return zz;
}

void BM_NormalizeFreeGroup(benchmark::State& state) {
  Bench fg = make_bench(2);
  std::mt19937 rng(1);
  std::vector<Object> words;
  for (int i = 0; i < 64; ++i)
    words.push_back(random_word(fg.system, rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(fg.system, words[i++ % words.size()]));
  }
}
BENCHMARK(BM_NormalizeFreeGroup)->Arg(8)->Arg(32)->Arg(128);

void BM_RewriteToValley(benchmark::State& state) {
  Bench fg = make_bench(2);
  std::mt19937 rng(2);
  std::vector<ZigZag> inputs;
  for (int i = 0; i < 32; ++i)
    inputs.push_back(random_zigzag(fg, rng, random_word(fg.system, rng, 4),
                                   static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rewrite_to_valley(fg.system, fg.order, fg.lc, inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_RewriteToValley)->Arg(4)->Arg(8)->Arg(16);

void BM_BasisWitness(benchmark::State& state) {
  Bench fg = make_bench(2);
  std::mt19937 rng(3);
  std::vector<std::pair<ZigZag, ZigZag>> pairs;
  while (pairs.size() < 32) {
    Object start = random_word(fg.system, rng, 3);
    ZigZag u = random_zigzag(fg, rng, start, static_cast<std::size_t>(state.range(0)));
    NormalizeResult nu = normalize(fg.system, zigzag_target(fg.system, u));
    NormalizeResult ns = normalize(fg.system, start);
    ZigZag v = compose(fg.system, ns.path, invert(fg.system, nu.path));
    pairs.emplace_back(std::move(u), std::move(v));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(basis_witness(fg.system, fg.order, fg.lc, u, v));
  }
}
BENCHMARK(BM_BasisWitness)->Arg(4)->Arg(8);

void BM_CertifyClosed(benchmark::State& state) {
  Bench fg = make_bench(1);
  std::mt19937 rng(4);
  std::vector<ZigZag> closed;
  while (closed.size() < 16) {
    Object start = random_word(fg.system, rng, 2);
    ZigZag u = random_zigzag(fg, rng, start, static_cast<std::size_t>(state.range(0)));
    ZigZag t = random_zigzag(fg, rng, start, static_cast<std::size_t>(state.range(0)));
    ZigZag loop = compose(fg.system, compose(fg.system, u, invert(fg.system, u)),
                          compose(fg.system, t, invert(fg.system, t)));
    closed.push_back(std::move(loop));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        certify_closed(fg.system, fg.order, fg.lc, closed[i++ % closed.size()]));
  }
}
BENCHMARK(BM_CertifyClosed)->Arg(2)->Arg(4);

void BM_ListExtension(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> value(0, 5);
  std::vector<std::vector<int>> lists;
  for (int i = 0; i < 64; ++i) {
    std::vector<int> l;
    for (long j = 0; j < state.range(0); ++j) l.push_back(value(rng));
    lists.push_back(std::move(l));
  }
  auto gt = [](int a, int b) { return a > b; };
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& xs = lists[i % lists.size()];
    const auto& ys = lists[(i + 1) % lists.size()];
    ++i;
    benchmark::DoNotOptimize(list_ext_gt(gt, xs, ys));
  }
}
BENCHMARK(BM_ListExtension)->Arg(8)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
