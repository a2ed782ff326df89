// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/system.hpp"

#include <algorithm>
#include <sstream>

#include "polybasis/error.hpp"

namespace polybasis {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::endpoint_mismatch: return "EndpointMismatch";
    case ErrorCode::cell_chain_mismatch: return "CellChainMismatch";
    case ErrorCode::measure_violation: return "MeasureViolation";
    case ErrorCode::unresolved_peak: return "UnresolvedPeak";
    case ErrorCode::not_parallel: return "NotParallel";
    case ErrorCode::mode_mismatch: return "ModeMismatch";
    case ErrorCode::unknown_object: return "UnknownObject";
    case ErrorCode::no_match: return "NoMatch";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_system: return "InvalidSystem";
  }
  return "Error";
}

RewritingSystem::RewritingSystem(SystemMode mode, std::string name)
    : mode_(mode), name_(std::move(name)) {}

RewritingSystem RewritingSystem::make_graph(std::string name) {
  return RewritingSystem(SystemMode::graph, std::move(name));
}

RewritingSystem RewritingSystem::make_srs(std::string name) {
  return RewritingSystem(SystemMode::srs, std::move(name));
}

namespace {

// Names appear bare in literals and report lines; keep the delimiter
// characters out of them.
void validate_name(const std::string& text, const char* what) {
  if (text.empty()) raise(ErrorCode::invalid_system, std::string("empty ") + what + " name");
  if (text.find_first_of(" \t\r\n;,@!|\"#") != std::string::npos)
    raise(ErrorCode::invalid_system,
          std::string(what) + " name '" + text + "' contains a reserved character");
}

}  // namespace

Symbol RewritingSystem::intern(const std::string& text) {
  validate_name(text, "symbol");
  auto it = symbol_index_.find(text);
  if (it != symbol_index_.end()) return it->second;
  Symbol s = static_cast<Symbol>(symbols_.size());
  symbols_.push_back(text);
  symbol_index_.emplace(text, s);
  if (text.size() != 1) single_char_alphabet_ = false;
  return s;
}

std::optional<Symbol> RewritingSystem::find_symbol(const std::string& text) const {
  auto it = symbol_index_.find(text);
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

const std::string& RewritingSystem::symbol_name(Symbol s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= symbols_.size())
    raise(ErrorCode::unknown_object, "symbol index out of range");
  return symbols_[static_cast<std::size_t>(s)];
}

std::uint32_t RewritingSystem::add_step(std::string name, Symbol source, Symbol target) {
  if (mode_ != SystemMode::graph)
    raise(ErrorCode::mode_mismatch, "steps belong to graph-mode systems");
  validate_name(name, "step");
  if (generator_index_.count(name))
    raise(ErrorCode::invalid_system, "duplicate step name '" + name + "'");
  symbol_name(source);
  symbol_name(target);
  auto id = static_cast<std::uint32_t>(steps_.size());
  generator_index_.emplace(name, id);
  steps_.push_back(GraphStep{std::move(name), source, target});
  return id;
}

std::uint32_t RewritingSystem::add_rule(std::string name, std::vector<Symbol> lhs,
                                        std::vector<Symbol> rhs) {
  if (mode_ != SystemMode::srs)
    raise(ErrorCode::mode_mismatch, "rules belong to srs-mode systems");
  validate_name(name, "rule");
  if (lhs.empty()) raise(ErrorCode::invalid_system, "rule '" + name + "' has empty lhs");
  if (generator_index_.count(name))
    raise(ErrorCode::invalid_system, "duplicate rule name '" + name + "'");
  for (Symbol s : lhs) symbol_name(s);
  for (Symbol s : rhs) symbol_name(s);
  auto id = static_cast<std::uint32_t>(rules_.size());
  generator_index_.emplace(name, id);
  rules_.push_back(StringRule{std::move(name), std::move(lhs), std::move(rhs)});
  return id;
}

void RewritingSystem::add_cell(CellDecl cell) {
  validate_name(cell.name, "cell");
  if (cell_index_.count(cell.name))
    raise(ErrorCode::invalid_system, "duplicate cell name '" + cell.name + "'");
  cell_index_.emplace(cell.name, static_cast<std::uint32_t>(cells_.size()));
  cells_.push_back(std::move(cell));
}

std::size_t RewritingSystem::generator_count() const {
  return mode_ == SystemMode::graph ? steps_.size() : rules_.size();
}

const std::string& RewritingSystem::generator_name(std::uint32_t generator) const {
  if (mode_ == SystemMode::graph) return step(generator).name;
  return rule(generator).name;
}

std::optional<std::uint32_t> RewritingSystem::find_generator(const std::string& name) const {
  auto it = generator_index_.find(name);
  if (it == generator_index_.end()) return std::nullopt;
  return it->second;
}

const GraphStep& RewritingSystem::step(std::uint32_t generator) const {
  if (mode_ != SystemMode::graph || generator >= steps_.size())
    raise(ErrorCode::unknown_object, "no such step generator");
  return steps_[generator];
}

const StringRule& RewritingSystem::rule(std::uint32_t generator) const {
  if (mode_ != SystemMode::srs || generator >= rules_.size())
    raise(ErrorCode::unknown_object, "no such rule generator");
  return rules_[generator];
}

std::optional<std::uint32_t> RewritingSystem::find_cell(const std::string& name) const {
  auto it = cell_index_.find(name);
  if (it == cell_index_.end()) return std::nullopt;
  return it->second;
}

bool RewritingSystem::valid_object(const Object& obj) const {
  if (mode_ == SystemMode::graph) {
    return obj.size() == 1 && obj.syms[0] >= 0 &&
           static_cast<std::size_t>(obj.syms[0]) < symbols_.size();
  }
  return std::all_of(obj.syms.begin(), obj.syms.end(), [&](Symbol s) {
    return s >= 0 && static_cast<std::size_t>(s) < symbols_.size();
  });
}

std::string RewritingSystem::show_object(const Object& obj) const {
  if (mode_ == SystemMode::graph) {
    if (obj.size() != 1) return "<invalid>";
    return symbol_name(obj.syms[0]);
  }
  std::string out;
  for (std::size_t i = 0; i < obj.syms.size(); ++i) {
    if (i > 0 && !single_char_alphabet_) out += ' ';
    out += symbol_name(obj.syms[i]);
  }
  return out;
}

std::optional<Object> RewritingSystem::parse_word(const std::string& text) const {
  Object result;
  if (text.empty()) return result;
  if (text.find(' ') != std::string::npos) {
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      auto s = find_symbol(token);
      if (!s) return std::nullopt;
      result.syms.push_back(*s);
    }
    return result;
  }
  // greedy longest-match tokenization
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    Symbol match = -1;
    for (Symbol s = 0; static_cast<std::size_t>(s) < symbols_.size(); ++s) {
      const std::string& name = symbols_[static_cast<std::size_t>(s)];
      if (name.size() > best && text.compare(pos, name.size(), name) == 0) {
        best = name.size();
        match = s;
      }
    }
    if (match < 0) return std::nullopt;
    result.syms.push_back(match);
    pos += best;
  }
  return result;
}

bool RewritingSystem::forward_applies(const Object& at, const StepRef& s) const {
  if (mode_ == SystemMode::graph) {
    if (s.generator >= steps_.size() || s.position != 0) return false;
    return at.size() == 1 && at.syms[0] == steps_[s.generator].source;
  }
  if (s.generator >= rules_.size()) return false;
  const StringRule& r = rules_[s.generator];
  if (s.position + r.lhs.size() > at.size()) return false;
  return std::equal(r.lhs.begin(), r.lhs.end(), at.syms.begin() + s.position);
}

bool RewritingSystem::backward_applies(const Object& at, const StepRef& s) const {
  if (mode_ == SystemMode::graph) {
    if (s.generator >= steps_.size() || s.position != 0) return false;
    return at.size() == 1 && at.syms[0] == steps_[s.generator].target;
  }
  if (s.generator >= rules_.size()) return false;
  const StringRule& r = rules_[s.generator];
  if (s.position + r.rhs.size() > at.size()) return false;
  return std::equal(r.rhs.begin(), r.rhs.end(), at.syms.begin() + s.position);
}

Object RewritingSystem::apply_forward(const Object& at, const StepRef& s) const {
  if (!forward_applies(at, s))
    raise(ErrorCode::no_match,
          "step " + describe_step(s) + " does not apply at " + show_object(at));
  if (mode_ == SystemMode::graph) return Object::node(steps_[s.generator].target);
  const StringRule& r = rules_[s.generator];
  Object out;
  out.syms.reserve(at.size() - r.lhs.size() + r.rhs.size());
  out.syms.assign(at.syms.begin(), at.syms.begin() + s.position);
  out.syms.insert(out.syms.end(), r.rhs.begin(), r.rhs.end());
  out.syms.insert(out.syms.end(), at.syms.begin() + s.position + r.lhs.size(), at.syms.end());
  return out;
}

Object RewritingSystem::apply_backward(const Object& at, const StepRef& s) const {
  if (!backward_applies(at, s))
    raise(ErrorCode::no_match,
          "step " + describe_step(s) + " does not un-apply at " + show_object(at));
  if (mode_ == SystemMode::graph) return Object::node(steps_[s.generator].source);
  const StringRule& r = rules_[s.generator];
  Object out;
  out.syms.reserve(at.size() - r.rhs.size() + r.lhs.size());
  out.syms.assign(at.syms.begin(), at.syms.begin() + s.position);
  out.syms.insert(out.syms.end(), r.lhs.begin(), r.lhs.end());
  out.syms.insert(out.syms.end(), at.syms.begin() + s.position + r.rhs.size(), at.syms.end());
  return out;
}

std::optional<Object> RewritingSystem::try_traverse(const Object& at,
                                                    const OrientedStep& s) const {
  if (s.dir == Direction::forward) {
    if (!forward_applies(at, s.step)) return std::nullopt;
    return apply_forward(at, s.step);
  }
  if (!backward_applies(at, s.step)) return std::nullopt;
  return apply_backward(at, s.step);
}

Object RewritingSystem::traverse(const Object& at, const OrientedStep& s) const {
  return s.dir == Direction::forward ? apply_forward(at, s.step) : apply_backward(at, s.step);
}

std::vector<StepRef> RewritingSystem::forward_steps(const Object& at) const {
  std::vector<StepRef> out;
  if (mode_ == SystemMode::graph) {
    if (at.size() != 1) return out;
    for (std::uint32_t g = 0; g < steps_.size(); ++g)
      if (steps_[g].source == at.syms[0]) out.push_back(StepRef{g, 0});
    return out;
  }
  for (std::uint32_t pos = 0; pos < at.size(); ++pos)
    for (std::uint32_t g = 0; g < rules_.size(); ++g)
      if (forward_applies(at, StepRef{g, pos})) out.push_back(StepRef{g, pos});
  return out;
}

std::string RewritingSystem::describe_step(const StepRef& s) const {
  std::string name =
      s.generator < generator_count() ? generator_name(s.generator) : "<unknown>";
  if (mode_ == SystemMode::srs) name += "@" + std::to_string(s.position);
  return name;
}

}  // namespace polybasis
