// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/srs.hpp"

#include <algorithm>
#include <cctype>

#include "polybasis/coherence.hpp"
#include "polybasis/error.hpp"

namespace polybasis {

const char* peak_kind_name(PeakKind kind) {
  switch (kind) {
    case PeakKind::full_overlap: return "FullOverlap";
    case PeakKind::partial_overlap: return "PartialOverlap";
    case PeakKind::peiffer: return "Peiffer";
  }
  return "?";
}

Object apply_rule(const RewritingSystem& sys, const Object& word, std::uint32_t rule,
                  std::uint32_t position) {
  return sys.apply_forward(word, StepRef{rule, position});
}

NormalizeResult normalize(const RewritingSystem& sys, const Object& word) {
  NormalizeResult result;
  result.path = empty_zigzag(word);
  Object at = word;
  const std::size_t fuel = max_engine_steps();
  for (std::size_t iter = 0;; ++iter) {
    if (iter > fuel)
      raise(ErrorCode::measure_violation,
            "normalize exceeded POLYBASIS_MAX_STEPS at " + sys.show_object(at));
    std::vector<StepRef> out = sys.forward_steps(at);
    if (out.empty()) break;
    const StepRef& s = out.front();  // leftmost position, first matching rule
    result.path.steps.push_back(forward(s));
    at = sys.apply_forward(at, s);
  }
  result.normal_form = std::move(at);
  return result;
}

namespace {

// Apex of two left-hand sides placed at offsets 0 and d, when they agree on
// the shared window; nullopt otherwise.
std::optional<std::vector<Symbol>> merge_lhs(const std::vector<Symbol>& a,
                                             const std::vector<Symbol>& b, std::size_t d) {
  std::vector<Symbol> out(std::max(a.size(), d + b.size()), -1);
  std::copy(a.begin(), a.end(), out.begin());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Symbol& slot = out[d + i];
    if (slot >= 0 && slot != b[i]) return std::nullopt;
    slot = b[i];
  }
  return out;
}

}  // namespace

std::vector<CriticalPeak> critical_peaks(const RewritingSystem& sys, std::size_t max_window) {
  if (sys.mode() != SystemMode::srs)
    raise(ErrorCode::mode_mismatch, "critical peaks are defined for srs-mode systems");
  std::vector<CriticalPeak> peaks;
  const auto& rules = sys.rules();
  for (std::uint32_t i = 0; i < rules.size(); ++i) {
    for (std::uint32_t j = 0; j < rules.size(); ++j) {
      const auto& lhsL = rules[i].lhs;
      const auto& lhsR = rules[j].lhs;
      // offset 0 (both redexes starting together) only for i <= j; the
      // mirrored pair would duplicate the same apex
      const std::size_t d_min = (i <= j) ? 0 : 1;
      for (std::size_t d = d_min; d <= lhsL.size(); ++d) {
        auto apex = merge_lhs(lhsL, lhsR, d);
        if (!apex) continue;
        if (max_window > 0 && apex->size() > max_window) continue;
        PeakKind kind;
        if (d == lhsL.size())
          kind = PeakKind::peiffer;  // canonical adjacent placement
        else if (d == 0 && i == j)
          kind = PeakKind::full_overlap;
        else
          kind = PeakKind::partial_overlap;
        peaks.push_back(CriticalPeak{Object::word(std::move(*apex)), StepRef{i, 0},
                                     StepRef{j, static_cast<std::uint32_t>(d)}, kind});
      }
    }
  }
  return peaks;
}

std::string inverse_letter_name(const std::string& name) {
  if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0])))
    return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
  if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0])))
    return std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(name[0]))));
  return name + "^-";
}

SystemWithOrder free_group_system(const std::vector<std::string>& generators) {
  RewritingSystem sys = RewritingSystem::make_srs(
      "free-group-" + std::to_string(generators.size()));
  std::vector<std::pair<Symbol, Symbol>> letter_pairs;
  for (const std::string& g : generators) {
    Symbol pos = sys.intern(g);
    Symbol neg = sys.intern(inverse_letter_name(g));
    letter_pairs.emplace_back(pos, neg);
  }
  for (auto [pos, neg] : letter_pairs) {
    sys.add_rule(sys.symbol_name(pos) + sys.symbol_name(neg), {pos, neg}, {});
    sys.add_rule(sys.symbol_name(neg) + sys.symbol_name(pos), {neg, pos}, {});
  }
  return SystemWithOrder{std::move(sys), TerminationOrder::rule_length_decreasing()};
}

}  // namespace polybasis
