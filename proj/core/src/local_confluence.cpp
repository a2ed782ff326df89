// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/local_confluence.hpp"

#include <algorithm>

#include "polybasis/error.hpp"

namespace polybasis {

namespace {

// Canonical occurrence order of two steps out of a common apex.
bool canonical_order(const StepRef& a, const StepRef& b) {
  return std::make_pair(a.position, a.generator) <= std::make_pair(b.position, b.generator);
}

std::string peak_text(const RewritingSystem& sys, const Object& apex, const StepRef& a,
                      const StepRef& b) {
  return sys.show_object(apex) + " via (" + sys.describe_step(a) + ", " + sys.describe_step(b) +
         ")";
}

// Every object strictly between the endpoints of `path` must lie below the
// apex; this is the Winkler-Buchberger condition the constructions rely on.
void check_below_apex(const RewritingSystem& sys, const TerminationOrder& order,
                      const Object& apex, const ZigZag& path) {
  std::vector<Object> seq = object_sequence(sys, path);
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (!order.gt(apex, seq[i]))
      raise(ErrorCode::invalid_system,
            "peak resolution visits " + sys.show_object(seq[i]) + " which is not below apex " +
                sys.show_object(apex));
  }
}

}  // namespace

LocalConfluenceStructure LocalConfluenceStructure::from_graph_table(
    std::map<std::tuple<Symbol, std::uint32_t, std::uint32_t>, PeakResolution> table,
    bool relaxed) {
  LocalConfluenceStructure lc;
  lc.mode_ = SystemMode::graph;
  lc.relaxed_ = relaxed;
  lc.graph_table_ = std::move(table);
  return lc;
}

PeakResolution LocalConfluenceStructure::resolve(const RewritingSystem& sys, const Object& apex,
                                                 const StepRef& a, const StepRef& b) const {
  if (sys.mode() != mode_)
    raise(ErrorCode::mode_mismatch, "local-confluence structure built for another system mode");
  if (!sys.forward_applies(apex, a) || !sys.forward_applies(apex, b))
    raise(ErrorCode::unresolved_peak, "not a local peak: " + peak_text(sys, apex, a, b));

  if (a == b) {
    Object target = sys.apply_forward(apex, a);
    return PeakResolution{empty_zigzag(target), target};
  }
  if (!canonical_order(a, b)) {
    PeakResolution mirrored = resolve(sys, apex, b, a);
    return PeakResolution{invert(sys, mirrored.path), mirrored.reduct};
  }

  if (mode_ == SystemMode::graph) {
    auto it = graph_table_.find({apex.syms[0], a.generator, b.generator});
    if (it == graph_table_.end())
      raise(ErrorCode::unresolved_peak, "no resolution for peak " + peak_text(sys, apex, a, b));
    return it->second;
  }

  const StringRule& rule_a = sys.rule(a.generator);
  Object left_target = sys.apply_forward(apex, a);
  if (a.position + rule_a.lhs.size() <= b.position) {
    // disjoint redexes: fire the other redex on each side
    const long shift =
        static_cast<long>(rule_a.rhs.size()) - static_cast<long>(rule_a.lhs.size());
    StepRef other{b.generator, static_cast<std::uint32_t>(static_cast<long>(b.position) + shift)};
    ZigZag path{left_target, {forward(other), backward(StepRef{a.generator, a.position})}};
    Object reduct = sys.apply_forward(left_target, other);
    return PeakResolution{std::move(path), std::move(reduct)};
  }

  // overlapping redexes: embed the critical-peak template into context
  auto it = template_index_.find(
      {a.generator, 0, b.generator, b.position - a.position});
  if (it == template_index_.end())
    raise(ErrorCode::unresolved_peak, "no template for peak " + peak_text(sys, apex, a, b));
  const TemplateResolution& tmpl = templates_[it->second];

  const std::uint32_t offset = a.position;
  const std::size_t window = tmpl.peak.word.size();
  std::vector<Symbol> prefix(apex.syms.begin(), apex.syms.begin() + offset);
  std::vector<Symbol> suffix(apex.syms.begin() + offset + static_cast<long>(window),
                             apex.syms.end());
  auto embed_word = [&](const Object& w) {
    Object out;
    out.syms.reserve(prefix.size() + w.size() + suffix.size());
    out.syms = prefix;
    out.syms.insert(out.syms.end(), w.syms.begin(), w.syms.end());
    out.syms.insert(out.syms.end(), suffix.begin(), suffix.end());
    return out;
  };
  ZigZag path;
  path.start = embed_word(tmpl.valley.start);
  path.steps.reserve(tmpl.valley.steps.size());
  for (const OrientedStep& s : tmpl.valley.steps)
    path.steps.push_back(OrientedStep{StepRef{s.step.generator, s.step.position + offset}, s.dir});
  return PeakResolution{std::move(path), embed_word(tmpl.reduct)};
}

struct LcBuilder {
  static LcSynthesis graph(const RewritingSystem& sys, const TerminationOrder& order);
  static LcSynthesis srs(const RewritingSystem& sys, const TerminationOrder& order);
};

LcSynthesis LcBuilder::graph(const RewritingSystem& sys, const TerminationOrder& order) {
  std::map<std::tuple<Symbol, std::uint32_t, std::uint32_t>, PeakResolution> table;

  for (Symbol v = 0; static_cast<std::size_t>(v) < sys.symbol_count(); ++v) {
    Object apex = Object::node(v);
    std::vector<StepRef> out = sys.forward_steps(apex);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        NormalizeResult nl = normalize(sys, sys.apply_forward(apex, out[i]));
        NormalizeResult nr = normalize(sys, sys.apply_forward(apex, out[j]));
        if (nl.normal_form != nr.normal_form) {
          ConfluenceFailure fail;
          fail.apex = apex;
          fail.left = out[i];
          fail.right = out[j];
          fail.left_result = nl.normal_form;
          fail.right_result = nr.normal_form;
          fail.message = "peak " + sys.show_object(nl.path.start) + " <~ " +
                         sys.show_object(apex) + " ~> " + sys.show_object(nr.path.start) +
                         " is not joinable: normal forms " + sys.show_object(nl.normal_form) +
                         " and " + sys.show_object(nr.normal_form) + " differ";
          return LcSynthesis{std::nullopt, std::move(fail)};
        }
        ZigZag path = compose(sys, nl.path, invert(sys, nr.path));
        check_below_apex(sys, order, apex, path);
        table[{v, out[i].generator, out[j].generator}] =
            PeakResolution{std::move(path), nl.normal_form};
      }
    }
  }
  return LcSynthesis{LocalConfluenceStructure::from_graph_table(std::move(table)), std::nullopt};
}

LcSynthesis LcBuilder::srs(const RewritingSystem& sys, const TerminationOrder& order) {
  LocalConfluenceStructure lc;
  lc.mode_ = SystemMode::srs;

  for (const CriticalPeak& peak : critical_peaks(sys)) {
    Object left_target = sys.apply_forward(peak.word, peak.left);
    Object right_target = sys.apply_forward(peak.word, peak.right);
    ZigZag valley;
    Object reduct;
    switch (peak.kind) {
      case PeakKind::full_overlap:
        valley = empty_zigzag(left_target);
        reduct = left_target;
        break;
      case PeakKind::peiffer: {
        const StringRule& rule_l = sys.rule(peak.left.generator);
        const long shift =
            static_cast<long>(rule_l.rhs.size()) - static_cast<long>(rule_l.lhs.size());
        StepRef other{peak.right.generator,
                      static_cast<std::uint32_t>(static_cast<long>(peak.right.position) + shift)};
        valley = ZigZag{left_target, {forward(other), backward(peak.left)}};
        reduct = sys.apply_forward(left_target, other);
        break;
      }
      case PeakKind::partial_overlap: {
        if (left_target == right_target) {
          valley = empty_zigzag(left_target);
          reduct = left_target;
          break;
        }
        NormalizeResult nl = normalize(sys, left_target);
        NormalizeResult nr = normalize(sys, right_target);
        if (nl.normal_form != nr.normal_form) {
          ConfluenceFailure fail;
          fail.apex = peak.word;
          fail.left = peak.left;
          fail.right = peak.right;
          fail.left_result = nl.normal_form;
          fail.right_result = nr.normal_form;
          fail.message = "critical peak " + sys.show_object(left_target) + " <~ " +
                         sys.show_object(peak.word) + " ~> " + sys.show_object(right_target) +
                         " is not joinable: normal forms " + sys.show_object(nl.normal_form) +
                         " and " + sys.show_object(nr.normal_form) + " differ";
          return LcSynthesis{std::nullopt, std::move(fail)};
        }
        valley = compose(sys, nl.path, invert(sys, nr.path));
        reduct = nl.normal_form;
        break;
      }
    }
    check_below_apex(sys, order, peak.word, valley);
    lc.template_index_[{peak.left.generator, peak.left.position, peak.right.generator,
                        peak.right.position}] = lc.templates_.size();
    lc.templates_.push_back(
        LocalConfluenceStructure::TemplateResolution{peak, std::move(valley), std::move(reduct)});
  }
  return LcSynthesis{std::move(lc), std::nullopt};
}

LcSynthesis synthesize_lc(const RewritingSystem& sys, const TerminationOrder& order) {
  if (!order.validated())
    raise(ErrorCode::invalid_system, "synthesize_lc requires a check_noetherian-validated order");
  return sys.mode() == SystemMode::graph ? LcBuilder::graph(sys, order)
                                         : LcBuilder::srs(sys, order);
}

}  // namespace polybasis
