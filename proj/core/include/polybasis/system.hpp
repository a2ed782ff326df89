// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polybasis/types.hpp"

namespace polybasis {

enum class SystemMode { graph, srs };

/// Graph-mode reduction step: a single directed edge between two objects.
struct GraphStep {
  std::string name;
  Symbol source = 0;
  Symbol target = 0;
};

/// String-mode reduction rule. The left-hand side is nonempty; the rule fires
/// at any position where the left-hand side occurs.
struct StringRule {
  std::string name;
  std::vector<Symbol> lhs;
  std::vector<Symbol> rhs;
};

/// Declared 2-cell generator between two parallel zig-zags.
struct CellDecl {
  std::string name;
  ZigZag source;
  ZigZag target;
};

/// A rewriting system in one of two modes: a finite directed graph of named
/// objects and steps, or a string rewriting system over a declared alphabet.
/// Values are immutable once built; all queries are const and thread-safe.
class RewritingSystem {
 public:
  static RewritingSystem make_graph(std::string name);
  static RewritingSystem make_srs(std::string name);

  SystemMode mode() const { return mode_; }
  const std::string& name() const { return name_; }

  // Symbols: objects (graph mode) or letters (string mode).
  Symbol intern(const std::string& text);
  std::optional<Symbol> find_symbol(const std::string& text) const;
  const std::string& symbol_name(Symbol s) const;
  std::size_t symbol_count() const { return symbols_.size(); }

  std::uint32_t add_step(std::string name, Symbol source, Symbol target);
  std::uint32_t add_rule(std::string name, std::vector<Symbol> lhs, std::vector<Symbol> rhs);
  void add_cell(CellDecl cell);

  std::size_t generator_count() const;
  const std::string& generator_name(std::uint32_t generator) const;
  std::optional<std::uint32_t> find_generator(const std::string& name) const;
  const GraphStep& step(std::uint32_t generator) const;
  const StringRule& rule(std::uint32_t generator) const;
  const std::vector<GraphStep>& steps() const { return steps_; }
  const std::vector<StringRule>& rules() const { return rules_; }
  const std::vector<CellDecl>& cells() const { return cells_; }
  std::optional<std::uint32_t> find_cell(const std::string& name) const;

  bool valid_object(const Object& obj) const;
  /// Renders an object for reports and serialization. Graph mode: the object
  /// name. String mode: the word, letters joined without separator when every
  /// alphabet letter is a single character, space-separated otherwise.
  std::string show_object(const Object& obj) const;
  /// Inverse of show_object for string mode words (used by parsers).
  std::optional<Object> parse_word(const std::string& text) const;

  bool forward_applies(const Object& at, const StepRef& s) const;
  bool backward_applies(const Object& at, const StepRef& s) const;
  Object apply_forward(const Object& at, const StepRef& s) const;
  Object apply_backward(const Object& at, const StepRef& s) const;

  /// Target of an oriented step taken from `at`; nullopt when the step does
  /// not apply there.
  std::optional<Object> try_traverse(const Object& at, const OrientedStep& s) const;
  /// Throwing variant of try_traverse (ErrorCode::no_match).
  Object traverse(const Object& at, const OrientedStep& s) const;

  /// All forward steps out of `at`, position-major then generator order
  /// (graph mode: declaration order). The first entry is the leftmost step
  /// used by normalization.
  std::vector<StepRef> forward_steps(const Object& at) const;

  std::string describe_step(const StepRef& s) const;

 private:
  explicit RewritingSystem(SystemMode mode, std::string name);

  SystemMode mode_;
  std::string name_;
  std::vector<std::string> symbols_;
  std::map<std::string, Symbol> symbol_index_;
  std::vector<GraphStep> steps_;
  std::vector<StringRule> rules_;
  std::map<std::string, std::uint32_t> generator_index_;
  std::vector<CellDecl> cells_;
  std::map<std::string, std::uint32_t> cell_index_;
  bool single_char_alphabet_ = true;
};

}  // namespace polybasis
