// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/cells.hpp"

#include "polybasis/error.hpp"

namespace polybasis {

AtomicCell AtomicCell::make_generator(std::uint32_t cell_index) {
  AtomicCell c;
  c.kind = Kind::generator;
  c.generator = cell_index;
  return c;
}

AtomicCell AtomicCell::make_diamond(Object apex, StepRef left, StepRef right) {
  AtomicCell c;
  c.kind = Kind::diamond;
  c.apex = std::move(apex);
  c.left = left;
  c.right = right;
  return c;
}

AtomicCell AtomicCell::make_rinv(StepRef step, Object source_of_step) {
  AtomicCell c;
  c.kind = Kind::rinv;
  c.step = step;
  c.at = std::move(source_of_step);
  return c;
}

AtomicCell AtomicCell::make_linv(StepRef step, Object target_of_step) {
  AtomicCell c;
  c.kind = Kind::linv;
  c.step = step;
  c.at = std::move(target_of_step);
  return c;
}

RewriteZigZag empty_rewrite_zigzag(ZigZag at) {
  RewriteZigZag rz;
  rz.source = at;
  rz.target = std::move(at);
  return rz;
}

ZigZag cell_source(const RewritingSystem& sys, const AtomicCell& cell) {
  switch (cell.kind) {
    case AtomicCell::Kind::generator:
      if (cell.generator >= sys.cells().size())
        raise(ErrorCode::unknown_object, "no such 2-cell generator");
      return sys.cells()[cell.generator].source;
    case AtomicCell::Kind::diamond: {
      Object left_target = sys.apply_forward(cell.apex, cell.left);
      return ZigZag{left_target, {backward(cell.left), forward(cell.right)}};
    }
    case AtomicCell::Kind::rinv:
      return ZigZag{cell.at, {forward(cell.step), backward(cell.step)}};
    case AtomicCell::Kind::linv:
      return ZigZag{cell.at, {backward(cell.step), forward(cell.step)}};
  }
  raise(ErrorCode::invalid_system, "unhandled cell kind");
}

ZigZag cell_target(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                   const AtomicCell& cell) {
  switch (cell.kind) {
    case AtomicCell::Kind::generator:
      if (cell.generator >= sys.cells().size())
        raise(ErrorCode::unknown_object, "no such 2-cell generator");
      return sys.cells()[cell.generator].target;
    case AtomicCell::Kind::diamond:
      return lc.resolve(sys, cell.apex, cell.left, cell.right).path;
    case AtomicCell::Kind::rinv:
    case AtomicCell::Kind::linv:
      return empty_zigzag(cell.at);
  }
  raise(ErrorCode::invalid_system, "unhandled cell kind");
}

namespace {

ZigZag whiskered_end(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                     const WhiskeredCell& cell, bool want_source) {
  const bool use_cell_source = (cell.dir == Direction::forward) == want_source;
  ZigZag middle = use_cell_source ? cell_source(sys, cell.cell) : cell_target(sys, lc, cell.cell);
  return compose(sys, cell.left, middle, cell.right);
}

}  // namespace

ZigZag whiskered_source(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                        const WhiskeredCell& cell) {
  return whiskered_end(sys, lc, cell, true);
}

ZigZag whiskered_target(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                        const WhiskeredCell& cell) {
  return whiskered_end(sys, lc, cell, false);
}

RewriteZigZag whisker(const RewritingSystem& sys, const ZigZag& left, const RewriteZigZag& rz,
                      const ZigZag& right) {
  // compose() checks both junctions
  RewriteZigZag out;
  out.source = compose(sys, left, rz.source, right);
  out.target = compose(sys, left, rz.target, right);
  out.cells.reserve(rz.cells.size());
  for (const WhiskeredCell& cell : rz.cells) {
    WhiskeredCell extended = cell;
    extended.left = compose(sys, left, cell.left);
    extended.right = compose(sys, cell.right, right);
    out.cells.push_back(std::move(extended));
  }
  return out;
}

RewriteZigZag rz_compose(const RewritingSystem& sys, const RewriteZigZag& a,
                         const RewriteZigZag& b) {
  if (a.target != b.source)
    raise(ErrorCode::cell_chain_mismatch,
          "rz_compose: target of first chain is not the source of the second");
  RewriteZigZag out;
  out.source = a.source;
  out.target = b.target;
  out.cells.reserve(a.cells.size() + b.cells.size());
  out.cells = a.cells;
  out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
  (void)sys;
  return out;
}

RewriteZigZag rz_invert(const RewriteZigZag& a) {
  RewriteZigZag out;
  out.source = a.target;
  out.target = a.source;
  out.cells.reserve(a.cells.size());
  for (auto it = a.cells.rbegin(); it != a.cells.rend(); ++it) {
    WhiskeredCell flipped = *it;
    flipped.dir = flip(flipped.dir);
    out.cells.push_back(std::move(flipped));
  }
  return out;
}

RewriteZigZag inv_cancellation(const RewritingSystem& sys, const ZigZag& u) {
  // u.u⁻¹ collapses one step pair per cell, innermost first: at round k the
  // chain is u_k.u_k⁻¹ for the prefix u_k of length n-k, and the whiskered
  // rinv/linv cell for its last step cancels the middle pair.
  std::vector<Object> seq = object_sequence(sys, u);
  const std::size_t n = u.steps.size();

  RewriteZigZag out;
  out.source = compose(sys, u, invert(sys, u));
  out.target = empty_zigzag(u.start);

  ZigZag prefix = u;  // u_k, shrinking from the right
  for (std::size_t k = 0; k < n; ++k) {
    const OrientedStep last = prefix.steps.back();
    prefix.steps.pop_back();
    const Object& before_last = seq[prefix.steps.size()];

    AtomicCell cell = last.dir == Direction::forward
                          ? AtomicCell::make_rinv(last.step, before_last)
                          : AtomicCell::make_linv(last.step, before_last);
    WhiskeredCell wc;
    wc.left = prefix;
    wc.cell = std::move(cell);
    wc.right = invert(sys, prefix);
    wc.dir = Direction::forward;
    out.cells.push_back(std::move(wc));
  }
  return out;
}

Report check_rewrite_zigzag(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                            const RewriteZigZag& rz) {
  if (!zigzag_wellformed(sys, rz.source))
    return Report::fail("source is not a well-formed zig-zag");
  ZigZag current = rz.source;
  for (std::size_t i = 0; i < rz.cells.size(); ++i) {
    const WhiskeredCell& cell = rz.cells[i];
    const std::string where = "cell " + std::to_string(i);
    if (!zigzag_wellformed(sys, cell.left) || !zigzag_wellformed(sys, cell.right))
      return Report::fail(where + ": context is not a well-formed zig-zag");
    if (cell.cell.kind == AtomicCell::Kind::generator &&
        cell.cell.generator >= sys.cells().size())
      return Report::fail(where + ": unknown 2-cell generator");
    ZigZag source, target;
    try {
      source = whiskered_source(sys, lc, cell);
      target = whiskered_target(sys, lc, cell);
    } catch (const EngineError& e) {
      return Report::fail(where + ": " + e.what());
    }
    if (source != current)
      return Report::fail(where + ": chain broken, cell source does not match the previous target",
                          {"expected: " + sys.show_object(current.start) +
                           " zig-zag of length " + std::to_string(current.steps.size())});
    if (!zigzag_wellformed(sys, target))
      return Report::fail(where + ": cell target is not a well-formed zig-zag");
    current = std::move(target);
  }
  if (current != rz.target)
    return Report::fail("stored target does not match the final cell target");
  return Report::pass("rewrite zig-zag valid (" + std::to_string(rz.cells.size()) + " cells)");
}

}  // namespace polybasis
