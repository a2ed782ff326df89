// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "polybasis/error.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis {

const char* const kWitnessHeader = "POLYBASIS-WITNESS 1";
const char* const kCertificateHeader = "POLYBASIS-CERT 1";

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  raise(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message);
}

// digit-string to number with an overflow guard
std::size_t parse_number(const std::string& digits, std::size_t line) {
  if (digits.empty() || digits.size() > 9 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(line, "malformed number '" + digits + "'");
  return std::stoul(digits);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// ---------------------------------------------------------------------------
// TOML-subset reader for system files

using TomlValue = std::variant<std::string, std::vector<std::string>,
                               std::vector<std::vector<std::string>>>;

struct TomlTable {
  std::string section;
  std::size_t line = 0;
  std::map<std::string, std::pair<TomlValue, std::size_t>> entries;

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  const std::string& str(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) parse_fail(line, "section [" + section + "] needs key '" + key + "'");
    if (auto* s = std::get_if<std::string>(&it->second.first)) return *s;
    parse_fail(it->second.second, "key '" + key + "' must be a string");
  }

  const std::vector<std::string>& list(const std::string& key) const {
    static const std::vector<std::string> empty;
    auto it = entries.find(key);
    if (it == entries.end()) return empty;
    if (auto* v = std::get_if<std::vector<std::string>>(&it->second.first)) return *v;
    parse_fail(it->second.second, "key '" + key + "' must be a list of strings");
  }

  const std::vector<std::vector<std::string>>& pair_list(const std::string& key) const {
    static const std::vector<std::vector<std::string>> empty;
    auto it = entries.find(key);
    if (it == entries.end()) return empty;
    if (auto* v = std::get_if<std::vector<std::vector<std::string>>>(&it->second.first)) return *v;
    parse_fail(it->second.second, "key '" + key + "' must be a list of pairs");
  }
};

struct TomlDoc {
  std::vector<TomlTable> tables;

  const TomlTable* find(const std::string& section) const {
    for (const TomlTable& t : tables)
      if (t.section == section) return &t;
    return nullptr;
  }

  std::vector<const TomlTable*> all(const std::string& section) const {
    std::vector<const TomlTable*> out;
    for (const TomlTable& t : tables)
      if (t.section == section) out.push_back(&t);
    return out;
  }
};

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

// value := "str" | [ value, ... ]   (one nesting level, for pair lists)
TomlValue parse_toml_value(const std::string& text, std::size_t line) {
  std::string v = trim(text);
  if (v.empty()) parse_fail(line, "missing value");
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"') parse_fail(line, "unterminated string");
    return v.substr(1, v.size() - 2);
  }
  if (v.front() != '[') parse_fail(line, "value must be a string or a list");
  if (v.back() != ']') parse_fail(line, "unterminated list");
  std::string inner = trim(v.substr(1, v.size() - 2));
  bool nested = !inner.empty() && inner.front() == '[';
  std::vector<std::string> flat;
  std::vector<std::vector<std::string>> pairs;
  std::size_t i = 0;
  while (i < inner.size()) {
    while (i < inner.size() && (inner[i] == ' ' || inner[i] == '\t' || inner[i] == ',')) ++i;
    if (i >= inner.size()) break;
    if (inner[i] == '[') {
      std::size_t close = inner.find(']', i);
      if (close == std::string::npos) parse_fail(line, "unterminated inner list");
      auto sub = parse_toml_value(inner.substr(i, close - i + 1), line);
      pairs.push_back(std::get<std::vector<std::string>>(sub));
      i = close + 1;
    } else if (inner[i] == '"') {
      std::size_t close = inner.find('"', i + 1);
      if (close == std::string::npos) parse_fail(line, "unterminated string in list");
      flat.push_back(inner.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      parse_fail(line, "list items must be quoted strings or inner lists");
    }
  }
  if (nested) return pairs;
  return flat;
}

TomlDoc parse_toml(const std::string& text) {
  TomlDoc doc;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  TomlTable* current = nullptr;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      bool array = line.size() > 1 && line[1] == '[';
      std::string close = array ? "]]" : "]";
      if (line.substr(line.size() - close.size()) != close)
        parse_fail(lineno, "malformed section header");
      std::string name = trim(line.substr(array ? 2 : 1, line.size() - 2 * close.size()));
      if (name.empty()) parse_fail(lineno, "empty section name");
      if (!array && doc.find(name)) parse_fail(lineno, "duplicate section [" + name + "]");
      doc.tables.push_back(TomlTable{name, lineno, {}});
      current = &doc.tables.back();
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
    if (!current) parse_fail(lineno, "key outside any section");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) parse_fail(lineno, "empty key");
    if (current->entries.count(key)) parse_fail(lineno, "duplicate key '" + key + "'");
    current->entries.emplace(key,
                             std::make_pair(parse_toml_value(line.substr(eq + 1), lineno), lineno));
  }
  return doc;
}

Symbol lookup_symbol(const RewritingSystem& sys, const std::string& name, std::size_t line) {
  auto s = sys.find_symbol(name);
  if (!s) parse_fail(line, "unknown name '" + name + "'");
  return *s;
}

std::vector<Symbol> lookup_word(const RewritingSystem& sys, const std::vector<std::string>& letters,
                                std::size_t line) {
  std::vector<Symbol> out;
  out.reserve(letters.size());
  for (const std::string& l : letters) out.push_back(lookup_symbol(sys, l, line));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// zig-zag literals

ZigZag parse_zigzag_literal(const RewritingSystem& sys, const std::string& text) {
  std::string body = trim(text);
  std::string start_text = body;
  std::string steps_text;
  std::size_t semi = body.find(';');
  if (semi != std::string::npos) {
    start_text = trim(body.substr(0, semi));
    steps_text = trim(body.substr(semi + 1));
  }

  ZigZag zz;
  if (sys.mode() == SystemMode::srs) {
    if (start_text.size() < 2 || start_text.front() != '"' || start_text.back() != '"')
      raise(ErrorCode::parse_error, "zig-zag literal: srs start object must be a quoted word");
    auto word = sys.parse_word(start_text.substr(1, start_text.size() - 2));
    if (!word)
      raise(ErrorCode::parse_error,
            "zig-zag literal: cannot read word " + start_text + " over this alphabet");
    zz.start = *word;
  } else {
    auto s = sys.find_symbol(start_text);
    if (!s) raise(ErrorCode::parse_error, "zig-zag literal: unknown object '" + start_text + "'");
    zz.start = Object::node(*s);
  }

  Object at = zz.start;
  std::size_t index = 0;
  std::size_t i = 0;
  while (i < steps_text.size()) {
    std::size_t comma = steps_text.find(',', i);
    std::string token = trim(steps_text.substr(i, comma == std::string::npos ? std::string::npos
                                                                             : comma - i));
    i = comma == std::string::npos ? steps_text.size() : comma + 1;
    if (token.empty()) continue;

    Direction dir = Direction::forward;
    if (token.back() == '!') {
      dir = Direction::backward;
      token = trim(token.substr(0, token.size() - 1));
    }
    std::uint32_t position = 0;
    std::size_t atpos = token.rfind('@');
    if (atpos != std::string::npos) {
      std::string digits = token.substr(atpos + 1);
      if (digits.empty() || digits.size() > 9 ||
          digits.find_first_not_of("0123456789") != std::string::npos)
        raise(ErrorCode::parse_error,
              "zig-zag literal: step " + std::to_string(index) + " has a malformed position");
      position = static_cast<std::uint32_t>(std::stoul(digits));
      token = token.substr(0, atpos);
    }
    auto gen = sys.find_generator(token);
    if (!gen)
      raise(ErrorCode::parse_error, "zig-zag literal: step " + std::to_string(index) +
                                        " names unknown generator '" + token + "'");
    OrientedStep step{StepRef{*gen, position}, dir};
    auto next = sys.try_traverse(at, step);
    if (!next)
      raise(ErrorCode::parse_error, "zig-zag literal: step " + std::to_string(index) + " (" +
                                        sys.describe_step(step.step) +
                                        (dir == Direction::backward ? "!" : "") +
                                        ") does not apply at " + sys.show_object(at));
    zz.steps.push_back(step);
    at = std::move(*next);
    ++index;
  }
  return zz;
}

std::string zigzag_literal(const RewritingSystem& sys, const ZigZag& u) {
  std::string out;
  if (sys.mode() == SystemMode::srs)
    out = "\"" + sys.show_object(u.start) + "\"";
  else
    out = sys.show_object(u.start);
  out += " ;";
  for (std::size_t i = 0; i < u.steps.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += sys.generator_name(u.steps[i].step.generator);
    if (sys.mode() == SystemMode::srs) out += "@" + std::to_string(u.steps[i].step.position);
    if (u.steps[i].dir == Direction::backward) out += "!";
  }
  return out;
}

// ---------------------------------------------------------------------------
// system files

SystemWithOrder parse_system_file(const std::string& text) {
  TomlDoc doc = parse_toml(text);
  const TomlTable* sys_table = doc.find("system");
  if (!sys_table) raise(ErrorCode::parse_error, "missing [system] section");

  const std::string mode = sys_table->str("mode");
  const std::string name = sys_table->has("name") ? sys_table->str("name") : "unnamed";

  if (mode != "graph" && mode != "srs")
    parse_fail(sys_table->line, "mode must be \"graph\" or \"srs\"");

  RewritingSystem sys = mode == "graph" ? RewritingSystem::make_graph(name)
                                        : RewritingSystem::make_srs(name);

  if (mode == "graph") {
    for (const std::string& obj : sys_table->list("objects")) sys.intern(obj);
    for (const TomlTable* t : doc.all("steps")) {
      Symbol src = lookup_symbol(sys, t->str("src"), t->line);
      Symbol tgt = lookup_symbol(sys, t->str("tgt"), t->line);
      sys.add_step(t->str("name"), src, tgt);
    }
    if (!doc.all("rules").empty())
      parse_fail(doc.all("rules").front()->line, "[[rules]] sections belong to srs mode");
  } else {
    for (const std::string& letter : sys_table->list("alphabet")) sys.intern(letter);
    for (const TomlTable* t : doc.all("rules")) {
      sys.add_rule(t->str("name"), lookup_word(sys, t->list("lhs"), t->line),
                   lookup_word(sys, t->list("rhs"), t->line));
    }
    if (!doc.all("steps").empty())
      parse_fail(doc.all("steps").front()->line, "[[steps]] sections belong to graph mode");
  }

  const TomlTable* order_table = doc.find("order");
  if (!order_table) raise(ErrorCode::parse_error, "missing [order] section");
  const std::string kind = order_table->str("kind");
  TerminationOrder order = TerminationOrder::rule_length_decreasing();
  if (kind == "graph-reachability") {
    order = TerminationOrder::graph_reachability();
  } else if (kind == "rule-length-decreasing") {
    order = TerminationOrder::rule_length_decreasing();
  } else if (kind == "explicit") {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : order_table->pair_list("pairs")) {
      if (p.size() != 2) parse_fail(order_table->line, "order pairs must have two entries");
      pairs.emplace_back(p[0], p[1]);
    }
    order = TerminationOrder::explicit_pairs(std::move(pairs));
  } else {
    parse_fail(order_table->line, "unknown order kind '" + kind + "'");
  }

  for (const TomlTable* t : doc.all("cells")) {
    try {
      CellDecl cell;
      cell.name = t->str("name");
      cell.source = parse_zigzag_literal(sys, t->str("source"));
      cell.target = parse_zigzag_literal(sys, t->str("target"));
      if (cell.source.start != cell.target.start ||
          zigzag_target(sys, cell.source) != zigzag_target(sys, cell.target))
        parse_fail(t->line, "cell '" + cell.name + "': source and target are not parallel");
      sys.add_cell(std::move(cell));
    } catch (const EngineError& e) {
      if (e.code() == ErrorCode::parse_error) throw;
      parse_fail(t->line, e.what());
    }
  }

  return SystemWithOrder{std::move(sys), std::move(order)};
}

std::string serialize_system(const RewritingSystem& sys, const TerminationOrder& order) {
  std::ostringstream out;
  out << "[system]\n";
  out << "name = \"" << sys.name() << "\"\n";
  out << "mode = \"" << (sys.mode() == SystemMode::graph ? "graph" : "srs") << "\"\n";
  auto emit_symbols = [&](const char* key) {
    out << key << " = [";
    for (std::size_t i = 0; i < sys.symbol_count(); ++i) {
      if (i > 0) out << ", ";
      out << '"' << sys.symbol_name(static_cast<Symbol>(i)) << '"';
    }
    out << "]\n";
  };
  if (sys.mode() == SystemMode::graph) {
    emit_symbols("objects");
    for (const GraphStep& s : sys.steps()) {
      out << "\n[[steps]]\n";
      out << "name = \"" << s.name << "\"\n";
      out << "src = \"" << sys.symbol_name(s.source) << "\"\n";
      out << "tgt = \"" << sys.symbol_name(s.target) << "\"\n";
    }
  } else {
    emit_symbols("alphabet");
    for (const StringRule& r : sys.rules()) {
      out << "\n[[rules]]\n";
      out << "name = \"" << r.name << "\"\n";
      auto emit_word = [&](const char* key, const std::vector<Symbol>& word) {
        out << key << " = [";
        for (std::size_t i = 0; i < word.size(); ++i) {
          if (i > 0) out << ", ";
          out << '"' << sys.symbol_name(word[i]) << '"';
        }
        out << "]\n";
      };
      emit_word("lhs", r.lhs);
      emit_word("rhs", r.rhs);
    }
  }
  out << "\n[order]\n";
  out << "kind = \"" << order_kind_name(order.kind()) << "\"\n";
  if (order.kind() == TerminationOrder::Kind::explicit_pairs) {
    out << "pairs = [";
    const auto& pairs = order.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0) out << ", ";
      out << "[\"" << pairs[i].first << "\", \"" << pairs[i].second << "\"]";
    }
    out << "]\n";
  }
  for (const CellDecl& cell : sys.cells()) {
    out << "\n[[cells]]\n";
    out << "name = \"" << cell.name << "\"\n";
    out << "source = \"" << zigzag_literal(sys, cell.source) << "\"\n";
    out << "target = \"" << zigzag_literal(sys, cell.target) << "\"\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// witness and certificate files

namespace {

std::string object_literal(const RewritingSystem& sys, const Object& obj) {
  if (sys.mode() == SystemMode::srs) return "\"" + sys.show_object(obj) + "\"";
  return sys.show_object(obj);
}

Object parse_object_literal(const RewritingSystem& sys, const std::string& text,
                            std::size_t line) {
  std::string t = trim(text);
  if (sys.mode() == SystemMode::srs) {
    if (t.size() < 2 || t.front() != '"' || t.back() != '"')
      parse_fail(line, "expected a quoted word, got '" + t + "'");
    auto word = sys.parse_word(t.substr(1, t.size() - 2));
    if (!word) parse_fail(line, "cannot read word " + t + " over this alphabet");
    return *word;
  }
  auto s = sys.find_symbol(t);
  if (!s) parse_fail(line, "unknown object '" + t + "'");
  return Object::node(*s);
}

std::string step_literal(const RewritingSystem& sys, const StepRef& s) {
  std::string out = sys.generator_name(s.generator);
  if (sys.mode() == SystemMode::srs) out += "@" + std::to_string(s.position);
  return out;
}

StepRef parse_step_literal(const RewritingSystem& sys, const std::string& text,
                           std::size_t line) {
  std::string t = trim(text);
  std::uint32_t position = 0;
  std::size_t atpos = t.rfind('@');
  if (atpos != std::string::npos) {
    position = static_cast<std::uint32_t>(parse_number(t.substr(atpos + 1), line));
    t = t.substr(0, atpos);
  }
  auto gen = sys.find_generator(t);
  if (!gen) parse_fail(line, "unknown generator '" + t + "'");
  return StepRef{*gen, position};
}

std::string atom_literal(const RewritingSystem& sys, const AtomicCell& cell) {
  switch (cell.kind) {
    case AtomicCell::Kind::generator:
      return "gen " + sys.cells()[cell.generator].name;
    case AtomicCell::Kind::diamond:
      return "diamond " + step_literal(sys, cell.left) + " " + step_literal(sys, cell.right) +
             " at " + object_literal(sys, cell.apex);
    case AtomicCell::Kind::rinv:
      return "rinv " + step_literal(sys, cell.step) + " at " + object_literal(sys, cell.at);
    case AtomicCell::Kind::linv:
      return "linv " + step_literal(sys, cell.step) + " at " + object_literal(sys, cell.at);
  }
  raise(ErrorCode::invalid_system, "unhandled cell kind");
}

AtomicCell parse_atom_literal(const RewritingSystem& sys, const std::string& text,
                              std::size_t line) {
  std::string t = trim(text);
  std::size_t space = t.find(' ');
  if (space == std::string::npos) parse_fail(line, "malformed cell atom '" + t + "'");
  std::string kind = t.substr(0, space);
  std::string rest = trim(t.substr(space + 1));

  if (kind == "gen") {
    auto idx = sys.find_cell(rest);
    if (!idx) parse_fail(line, "unknown 2-cell generator '" + rest + "'");
    return AtomicCell::make_generator(*idx);
  }

  std::size_t at_kw = rest.rfind(" at ");
  if (at_kw == std::string::npos) parse_fail(line, "cell atom needs an 'at <object>' anchor");
  std::string steps_part = trim(rest.substr(0, at_kw));
  Object anchor = parse_object_literal(sys, rest.substr(at_kw + 4), line);

  if (kind == "diamond") {
    std::size_t sep = steps_part.find(' ');
    if (sep == std::string::npos) parse_fail(line, "diamond atom needs two steps");
    StepRef left = parse_step_literal(sys, steps_part.substr(0, sep), line);
    StepRef right = parse_step_literal(sys, steps_part.substr(sep + 1), line);
    return AtomicCell::make_diamond(std::move(anchor), left, right);
  }
  if (kind == "rinv")
    return AtomicCell::make_rinv(parse_step_literal(sys, steps_part, line), std::move(anchor));
  if (kind == "linv")
    return AtomicCell::make_linv(parse_step_literal(sys, steps_part, line), std::move(anchor));
  parse_fail(line, "unknown cell atom kind '" + kind + "'");
}

std::vector<std::string> split_fields(const std::string& text, std::size_t line,
                                      std::size_t expected) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  for (;;) {
    std::size_t bar = text.find(" | ", i);
    if (bar == std::string::npos) {
      fields.push_back(trim(text.substr(i)));
      break;
    }
    fields.push_back(trim(text.substr(i, bar - i)));
    i = bar + 3;
  }
  if (fields.size() != expected)
    parse_fail(line, "expected " + std::to_string(expected) + " fields, got " +
                         std::to_string(fields.size()));
  return fields;
}

struct LineReader {
  std::vector<std::string> lines;
  std::size_t next = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  bool done() {
    while (next < lines.size() && trim(lines[next]).empty()) ++next;
    return next >= lines.size();
  }

  std::pair<std::string, std::size_t> take() {
    while (next < lines.size()) {
      std::string line = trim(lines[next]);
      ++next;
      if (!line.empty()) return {line, next};
    }
    parse_fail(lines.size(), "unexpected end of file");
  }

  // "key: value" line
  std::string field(const std::string& key) {
    auto [line, lineno] = take();
    std::string prefix = key + ":";
    if (line.rfind(prefix, 0) != 0) parse_fail(lineno, "expected '" + key + ":' line");
    return trim(line.substr(prefix.size()));
  }
};

}  // namespace

std::string serialize_witness(const RewritingSystem& sys, const BasisWitness& witness) {
  std::ostringstream out;
  out << kWitnessHeader << "\n";
  out << "system: " << sys.name() << "\n";
  out << "u: " << zigzag_literal(sys, witness.u) << "\n";
  out << "v: " << zigzag_literal(sys, witness.v) << "\n";
  out << "cells: " << witness.witness.cells.size() << "\n";
  for (const WhiskeredCell& cell : witness.witness.cells) {
    out << "cell: " << (cell.dir == Direction::forward ? "+" : "-") << " | "
        << zigzag_literal(sys, cell.left) << " | " << atom_literal(sys, cell.cell) << " | "
        << zigzag_literal(sys, cell.right) << "\n";
  }
  return out.str();
}

BasisWitness parse_witness(const RewritingSystem& sys, const std::string& text) {
  LineReader reader(text);
  auto [header, header_line] = reader.take();
  if (header != kWitnessHeader) parse_fail(header_line, "not a witness file (bad header)");
  std::string system_name = reader.field("system");
  if (system_name != sys.name())
    parse_fail(header_line + 1, "witness was produced for system '" + system_name + "'");

  BasisWitness out;
  out.u = parse_zigzag_literal(sys, reader.field("u"));
  out.v = parse_zigzag_literal(sys, reader.field("v"));
  parse_number(reader.field("cells"), 0);  // count is informational but must be a number

  // The declared count is informational. Every remaining line must be a
  // cell; a missing cell surfaces as a chain break in the checker rather
  // than a parse error.
  out.witness.source = out.u;
  out.witness.target = out.v;
  while (!reader.done()) {
    auto [line, lineno] = reader.take();
    if (line.rfind("cell:", 0) != 0) parse_fail(lineno, "expected 'cell:' line");
    auto fields = split_fields(trim(line.substr(5)), lineno, 4);
    WhiskeredCell cell;
    if (fields[0] == "+")
      cell.dir = Direction::forward;
    else if (fields[0] == "-")
      cell.dir = Direction::backward;
    else
      parse_fail(lineno, "cell direction must be + or -");
    cell.left = parse_zigzag_literal(sys, fields[1]);
    cell.cell = parse_atom_literal(sys, fields[2], lineno);
    cell.right = parse_zigzag_literal(sys, fields[3]);
    out.witness.cells.push_back(std::move(cell));
  }
  return out;
}

std::string serialize_certificate(const RewritingSystem& sys, const Certificate& cert,
                                  const ZigZag& subject) {
  std::ostringstream out;
  out << kCertificateHeader << "\n";
  out << "system: " << sys.name() << "\n";
  out << "subject: " << zigzag_literal(sys, subject) << "\n";
  out << "nodes: " << certificate_size(cert) << "\n";

  auto emit = [&](auto&& self, const Certificate& node) -> void {
    switch (node.kind) {
      case Certificate::Kind::empty_fill:
        out << "empty-fill " << object_literal(sys, node.object) << "\n";
        break;
      case Certificate::Kind::inv_pair:
        out << "inv-pair " << zigzag_literal(sys, node.u) << "\n";
        break;
      case Certificate::Kind::rotate:
        out << "rotate " << zigzag_literal(sys, node.u) << " | " << zigzag_literal(sys, node.v)
            << "\n";
        break;
      case Certificate::Kind::paste:
        out << "paste " << zigzag_literal(sys, node.u) << " | " << zigzag_literal(sys, node.v)
            << " | " << zigzag_literal(sys, node.w) << "\n";
        break;
      case Certificate::Kind::invert:
        out << "invert " << zigzag_literal(sys, node.u) << "\n";
        break;
      case Certificate::Kind::diamond_fill:
        out << "diamond-fill " << step_literal(sys, node.left) << " "
            << step_literal(sys, node.right) << " at " << object_literal(sys, node.apex) << "\n";
        break;
    }
    for (const Certificate& child : node.children) self(self, child);
  };
  emit(emit, cert);
  return out.str();
}

std::pair<Certificate, ZigZag> parse_certificate(const RewritingSystem& sys,
                                                 const std::string& text) {
  LineReader reader(text);
  auto [header, header_line] = reader.take();
  if (header != kCertificateHeader) parse_fail(header_line, "not a certificate file (bad header)");
  std::string system_name = reader.field("system");
  if (system_name != sys.name())
    parse_fail(header_line + 1, "certificate was produced for system '" + system_name + "'");
  ZigZag subject = parse_zigzag_literal(sys, reader.field("subject"));
  const std::size_t declared = parse_number(reader.field("nodes"), 0);

  std::size_t seen = 0;
  auto read_node = [&](auto&& self) -> Certificate {
    auto [line, lineno] = reader.take();
    ++seen;
    std::size_t space = line.find(' ');
    std::string kind = space == std::string::npos ? line : line.substr(0, space);
    std::string rest = space == std::string::npos ? "" : trim(line.substr(space + 1));

    if (kind == "empty-fill")
      return Certificate::empty_fill(parse_object_literal(sys, rest, lineno));
    if (kind == "inv-pair") return Certificate::inv_pair(parse_zigzag_literal(sys, rest));
    if (kind == "rotate") {
      auto fields = split_fields(rest, lineno, 2);
      ZigZag u = parse_zigzag_literal(sys, fields[0]);
      ZigZag v = parse_zigzag_literal(sys, fields[1]);
      Certificate child = self(self);
      return Certificate::rotate(std::move(child), std::move(u), std::move(v));
    }
    if (kind == "paste") {
      auto fields = split_fields(rest, lineno, 3);
      ZigZag u = parse_zigzag_literal(sys, fields[0]);
      ZigZag v = parse_zigzag_literal(sys, fields[1]);
      ZigZag w = parse_zigzag_literal(sys, fields[2]);
      Certificate a = self(self);
      Certificate b = self(self);
      return Certificate::paste(std::move(a), std::move(b), std::move(u), std::move(v),
                                std::move(w));
    }
    if (kind == "invert") {
      ZigZag u = parse_zigzag_literal(sys, rest);
      Certificate child = self(self);
      return Certificate::invert_node(std::move(child), std::move(u));
    }
    if (kind == "diamond-fill") {
      std::size_t at_kw = rest.rfind(" at ");
      if (at_kw == std::string::npos) parse_fail(lineno, "diamond-fill needs an 'at <object>'");
      std::string steps_part = trim(rest.substr(0, at_kw));
      Object apex = parse_object_literal(sys, rest.substr(at_kw + 4), lineno);
      std::size_t sep = steps_part.find(' ');
      if (sep == std::string::npos) parse_fail(lineno, "diamond-fill needs two steps");
      StepRef left = parse_step_literal(sys, steps_part.substr(0, sep), lineno);
      StepRef right = parse_step_literal(sys, steps_part.substr(sep + 1), lineno);
      Certificate node = Certificate::diamond_fill(std::move(apex), left, right);
      return node;
    }
    parse_fail(lineno, "unknown certificate node kind '" + kind + "'");
  };

  Certificate root = read_node(read_node);
  if (seen != declared)
    raise(ErrorCode::parse_error, "certificate declares " + std::to_string(declared) +
                                      " nodes but the tree has " + std::to_string(seen));
  return {std::move(root), std::move(subject)};
}

// ---------------------------------------------------------------------------
// DOT export

std::string reduction_graph_dot(const RewritingSystem& sys, std::size_t max_word_len) {
  std::ostringstream out;
  out << "digraph reduction {\n";
  out << "  rankdir=TB;\n";
  if (sys.mode() == SystemMode::graph) {
    for (std::size_t i = 0; i < sys.symbol_count(); ++i)
      out << "  n" << i << " [label=\"" << sys.symbol_name(static_cast<Symbol>(i)) << "\"];\n";
    for (const GraphStep& s : sys.steps())
      out << "  n" << s.source << " -> n" << s.target << " [label=\"" << s.name << "\"];\n";
  } else {
    // all words up to the length cap, in (length, lexicographic) order
    std::vector<Object> words{Object{}};
    std::map<Object, std::size_t> index;
    index.emplace(Object{}, 0);
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_word_len; ++len) {
      std::size_t end = words.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t s = 0; s < sys.symbol_count(); ++s) {
          Object w = words[i];
          w.syms.push_back(static_cast<Symbol>(s));
          index.emplace(w, words.size());
          words.push_back(std::move(w));
        }
      }
      begin = end;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::string label = words[i].empty() ? "(empty)" : sys.show_object(words[i]);
      out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (const StepRef& s : sys.forward_steps(words[i])) {
        Object target = sys.apply_forward(words[i], s);
        auto it = index.find(target);
        if (it == index.end()) continue;  // target longer than the cap
        out << "  n" << i << " -> n" << it->second << " [label=\"" << sys.describe_step(s)
            << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace polybasis
