// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/coherence.hpp"

#include <cstdlib>

#include "polybasis/error.hpp"

namespace polybasis {

std::size_t max_engine_steps() {
  static const std::size_t cached = [] {
    const char* env = std::getenv("POLYBASIS_MAX_STEPS");
    if (!env) return static_cast<std::size_t>(1000000);
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || parsed == 0) return static_cast<std::size_t>(1000000);
    return static_cast<std::size_t>(parsed);
  }();
  return cached;
}

ValleyResult rewrite_to_valley(const RewritingSystem& sys, const TerminationOrder& order,
                               const LocalConfluenceStructure& lc, const ZigZag& u,
                               CoherenceStats* stats) {
  RewriteZigZag witness = empty_rewrite_zigzag(u);
  ZigZag current = u;
  std::vector<Object> measure = zigzag_measure(sys, current);
  const std::size_t fuel = max_engine_steps();

  for (std::size_t iter = 0;; ++iter) {
    auto peak = find_local_peak(sys, current);
    if (!peak) break;
    if (iter >= fuel)
      raise(ErrorCode::measure_violation,
            "rewrite_to_valley exceeded POLYBASIS_MAX_STEPS (" + std::to_string(fuel) + ")");

    PeakResolution resolution = lc.resolve(sys, peak->apex, peak->down.step, peak->up.step);

    WhiskeredCell cell;
    cell.left = peak->prefix;
    cell.cell = AtomicCell::make_diamond(peak->apex, peak->down.step, peak->up.step);
    cell.right = peak->suffix;
    cell.dir = Direction::forward;

    ZigZag next = compose(sys, peak->prefix, resolution.path, peak->suffix);
    std::vector<Object> next_measure = zigzag_measure(sys, next);
    if (!object_list_ext_gt(order, measure, next_measure))
      raise(ErrorCode::measure_violation,
            "rewrite_to_valley: visited-object measure did not strictly decrease when resolving "
            "the peak at " +
                sys.show_object(peak->apex));
    if (stats) {
      ++stats->peak_rewrites;
      ++stats->measure_checks;
    }

    RewriteZigZag step;
    step.source = current;
    step.cells.push_back(std::move(cell));
    step.target = next;
    witness = rz_compose(sys, witness, step);
    current = std::move(next);
    measure = std::move(next_measure);
  }
  return ValleyResult{std::move(witness), std::move(current)};
}

namespace {

// Splits a valley into its forward leg (anchored at the valley start) and
// the remaining backward part (anchored at the reduct).
struct ValleySplit {
  ZigZag ascent;   // forward leg v: start .. reduct
  ZigZag descent;  // backward part w⁻¹: reduct .. end
  Object reduct;
};

ValleySplit split_valley(const RewritingSystem& sys, const ZigZag& valley) {
  std::size_t cut = 0;
  while (cut < valley.steps.size() && valley.steps[cut].dir == Direction::forward) ++cut;
  ValleySplit split;
  split.ascent.start = valley.start;
  split.ascent.steps.assign(valley.steps.begin(), valley.steps.begin() + static_cast<long>(cut));
  split.reduct = zigzag_target(sys, split.ascent);
  split.descent.start = split.reduct;
  split.descent.steps.assign(valley.steps.begin() + static_cast<long>(cut), valley.steps.end());
  return split;
}

}  // namespace

RewriteZigZag contract_closed(const RewritingSystem& sys, const TerminationOrder& order,
                              const LocalConfluenceStructure& lc, const ZigZag& u,
                              CoherenceStats* stats) {
  if (zigzag_target(sys, u) != u.start)
    raise(ErrorCode::not_parallel,
          "contract_closed requires a closed zig-zag, got endpoints " +
              sys.show_object(u.start) + " and " + sys.show_object(zigzag_target(sys, u)));

  struct Frame {
    RewriteZigZag to_valley;
    ZigZag ascent;   // v
    ZigZag descent;  // w⁻¹
  };

  // descend, peeling one reduct per round; the apex strictly decreases
  std::vector<Frame> frames;
  ZigZag current = u;
  const std::size_t fuel = max_engine_steps();
  RewriteZigZag witness;
  for (;;) {
    if (frames.size() > fuel)
      raise(ErrorCode::measure_violation,
            "contract_closed exceeded POLYBASIS_MAX_STEPS recursion frames");
    ValleyResult vr = rewrite_to_valley(sys, order, lc, current, stats);
    ValleySplit split = split_valley(sys, vr.valley);
    const bool ascent_empty = split.ascent.steps.empty();
    const bool descent_empty = split.descent.steps.empty();
    if (ascent_empty != descent_empty)
      raise(ErrorCode::measure_violation,
            "contract_closed: valley of a closed zig-zag has exactly one empty leg, which "
            "contradicts a strict termination order (forward cycle at " +
                sys.show_object(current.start) + ")");
    if (ascent_empty && descent_empty) {
      witness = std::move(vr.witness);  // valley is literally the empty zig-zag
      break;
    }
    if (!order.gt(current.start, split.reduct))
      raise(ErrorCode::measure_violation,
            "contract_closed: reduct " + sys.show_object(split.reduct) +
                " is not strictly below the basepoint " + sys.show_object(current.start));
    if (stats) ++stats->apex_descents;
    ZigZag next = compose(sys, split.descent, split.ascent);  // w⁻¹.v, closed at the reduct
    frames.push_back(Frame{std::move(vr.witness), std::move(split.ascent), std::move(split.descent)});
    current = std::move(next);
  }

  // unwind: u ⇛ v.w⁻¹ ⇛ v.w⁻¹.v.v⁻¹ ⇛ v.v⁻¹ ⇛ ε
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    const ZigZag& v = it->ascent;
    const ZigZag valley = it->to_valley.target;
    RewriteZigZag insert_vv =
        whisker(sys, valley, rz_invert(inv_cancellation(sys, v)), empty_zigzag(valley.start));
    RewriteZigZag inner = whisker(sys, v, witness, invert(sys, v));
    RewriteZigZag cancel_vv = inv_cancellation(sys, v);
    witness = rz_compose(sys, rz_compose(sys, rz_compose(sys, it->to_valley, insert_vv), inner),
                         cancel_vv);
  }
  return witness;
}

BasisWitness basis_witness(const RewritingSystem& sys, const TerminationOrder& order,
                           const LocalConfluenceStructure& lc, const ZigZag& u, const ZigZag& v,
                           CoherenceStats* stats) {
  if (u.start != v.start || zigzag_target(sys, u) != zigzag_target(sys, v))
    raise(ErrorCode::not_parallel, "basis_witness requires parallel zig-zags");

  const ZigZag v_inverse = invert(sys, v);
  const Object end = v_inverse.start;  // shared target of u and v

  // u ⇛ u.v⁻¹.v by the inverted cancellation of v⁻¹
  RewriteZigZag insert =
      whisker(sys, u, rz_invert(inv_cancellation(sys, v_inverse)), empty_zigzag(end));

  // u.v⁻¹.v ⇛ v by contracting the closed zig-zag u.v⁻¹, whiskered by v
  ZigZag closed = compose(sys, u, v_inverse);
  RewriteZigZag contraction = contract_closed(sys, order, lc, closed, stats);
  RewriteZigZag finish = whisker(sys, empty_zigzag(u.start), contraction, v);

  BasisWitness out;
  out.witness = rz_compose(sys, insert, finish);
  out.u = u;
  out.v = v;
  return out;
}

}  // namespace polybasis
