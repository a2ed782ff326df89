// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/order.hpp"

#include <algorithm>

#include "polybasis/error.hpp"
#include "polybasis/list_extension.hpp"

namespace polybasis {

TerminationOrder TerminationOrder::graph_reachability() {
  return TerminationOrder(Kind::graph_reachability);
}

TerminationOrder TerminationOrder::rule_length_decreasing() {
  return TerminationOrder(Kind::rule_length_decreasing);
}

TerminationOrder TerminationOrder::explicit_pairs(
    std::vector<std::pair<std::string, std::string>> pairs) {
  TerminationOrder order(Kind::explicit_pairs);
  order.pairs_ = std::move(pairs);
  return order;
}

const char* order_kind_name(TerminationOrder::Kind kind) {
  switch (kind) {
    case TerminationOrder::Kind::graph_reachability: return "graph-reachability";
    case TerminationOrder::Kind::rule_length_decreasing: return "rule-length-decreasing";
    case TerminationOrder::Kind::explicit_pairs: return "explicit";
  }
  return "?";
}

bool TerminationOrder::gt(const Object& x, const Object& y) const {
  if (!validated_)
    raise(ErrorCode::invalid_system, "termination order used before check_noetherian");
  switch (kind_) {
    case Kind::rule_length_decreasing:
      return x.size() > y.size();
    case Kind::graph_reachability:
    case Kind::explicit_pairs: {
      if (x.size() != 1 || y.size() != 1) return false;
      auto it = closure_.find(x.syms[0]);
      return it != closure_.end() && it->second.count(y.syms[0]) > 0;
    }
  }
  return false;
}

namespace {

// DFS cycle search; on success returns the cycle as a symbol path a -> ... -> a.
std::optional<std::vector<Symbol>> find_cycle(const RewritingSystem& sys) {
  const std::size_t n = sys.symbol_count();
  std::vector<std::vector<Symbol>> succ(n);
  for (const GraphStep& s : sys.steps()) succ[static_cast<std::size_t>(s.source)].push_back(s.target);

  enum class Color : unsigned char { white, grey, black };
  std::vector<Color> color(n, Color::white);
  std::vector<Symbol> stack;

  auto dfs = [&](auto&& self, Symbol v) -> std::optional<std::vector<Symbol>> {
    color[static_cast<std::size_t>(v)] = Color::grey;
    stack.push_back(v);
    for (Symbol w : succ[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(w)] == Color::grey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        std::vector<Symbol> cycle(it, stack.end());
        cycle.push_back(w);
        return cycle;
      }
      if (color[static_cast<std::size_t>(w)] == Color::white) {
        if (auto found = self(self, w)) return found;
      }
    }
    stack.pop_back();
    color[static_cast<std::size_t>(v)] = Color::black;
    return std::nullopt;
  };

  for (Symbol v = 0; static_cast<std::size_t>(v) < n; ++v)
    if (color[static_cast<std::size_t>(v)] == Color::white)
      if (auto found = dfs(dfs, v)) return found;
  return std::nullopt;
}

std::map<Symbol, std::set<Symbol>> reachability_closure(const RewritingSystem& sys) {
  std::map<Symbol, std::set<Symbol>> closure;
  const std::size_t n = sys.symbol_count();
  std::vector<std::vector<Symbol>> succ(n);
  for (const GraphStep& s : sys.steps()) succ[static_cast<std::size_t>(s.source)].push_back(s.target);
  for (Symbol v = 0; static_cast<std::size_t>(v) < n; ++v) {
    std::set<Symbol>& reach = closure[v];
    std::vector<Symbol> todo = succ[static_cast<std::size_t>(v)];
    while (!todo.empty()) {
      Symbol w = todo.back();
      todo.pop_back();
      if (!reach.insert(w).second) continue;
      for (Symbol x : succ[static_cast<std::size_t>(w)]) todo.push_back(x);
    }
  }
  return closure;
}

std::string cycle_text(const RewritingSystem& sys, const std::vector<Symbol>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += " -> ";
    out += sys.symbol_name(cycle[i]);
  }
  return out;
}

}  // namespace

Report check_noetherian(const RewritingSystem& sys, TerminationOrder& order) {
  switch (order.kind_) {
    case TerminationOrder::Kind::graph_reachability: {
      if (sys.mode() != SystemMode::graph)
        raise(ErrorCode::mode_mismatch, "graph-reachability order needs a graph-mode system");
      if (auto cycle = find_cycle(sys))
        return Report::fail("reduction graph has a directed cycle",
                            {"cycle: " + cycle_text(sys, *cycle)});
      order.closure_ = reachability_closure(sys);
      order.validated_ = true;
      return Report::pass("terminating: reduction graph is acyclic");
    }

    case TerminationOrder::Kind::rule_length_decreasing: {
      if (sys.mode() != SystemMode::srs)
        raise(ErrorCode::mode_mismatch, "rule-length-decreasing order needs an srs-mode system");
      for (const StringRule& r : sys.rules()) {
        if (r.lhs.size() <= r.rhs.size())
          return Report::fail("rule does not strictly shorten",
                              {"rule '" + r.name + "': |lhs| = " + std::to_string(r.lhs.size()) +
                               ", |rhs| = " + std::to_string(r.rhs.size())});
      }
      order.validated_ = true;
      return Report::pass("terminating: every rule strictly shortens");
    }

    case TerminationOrder::Kind::explicit_pairs: {
      if (sys.mode() != SystemMode::graph)
        raise(ErrorCode::mode_mismatch,
              "explicit order needs a graph-mode system (a finite pair list cannot cover the "
              "word set of an srs)");
      std::map<Symbol, std::set<Symbol>> closure;
      for (const auto& [bigger, smaller] : order.pairs_) {
        auto b = sys.find_symbol(bigger);
        auto s = sys.find_symbol(smaller);
        if (!b || !s)
          return Report::fail("order pair mentions an unknown object",
                              {"pair: " + bigger + " > " + smaller});
        closure[*b].insert(*s);
      }
      // saturate transitively
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [x, below] : closure) {
          std::vector<Symbol> add;
          for (Symbol y : below) {
            auto it = closure.find(y);
            if (it == closure.end()) continue;
            for (Symbol z : it->second)
              if (!below.count(z)) add.push_back(z);
          }
          for (Symbol z : add) below.insert(z);
          changed = changed || !add.empty();
        }
      }
      for (const auto& [x, below] : closure)
        if (below.count(x))
          return Report::fail("explicit order is cyclic after transitive closure",
                              {"object: " + sys.symbol_name(x)});
      for (const GraphStep& s : sys.steps()) {
        auto it = closure.find(s.source);
        if (it == closure.end() || !it->second.count(s.target))
          return Report::fail("step does not decrease in the declared order",
                              {"step '" + s.name + "': " + sys.symbol_name(s.source) + " -> " +
                               sys.symbol_name(s.target)});
      }
      order.closure_ = std::move(closure);
      order.validated_ = true;
      return Report::pass("terminating: declared order covers every step");
    }
  }
  raise(ErrorCode::invalid_system, "unhandled order kind");
}

std::vector<Object> zigzag_measure(const RewritingSystem& sys, const ZigZag& u) {
  return object_sequence(sys, u);
}

bool object_list_ext_gt(const TerminationOrder& order, const std::vector<Object>& xs,
                        const std::vector<Object>& ys) {
  return list_ext_gt([&](const Object& a, const Object& b) { return order.gt(a, b); }, xs, ys);
}

}  // namespace polybasis
