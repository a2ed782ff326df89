// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "cli_commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polybasis/certify.hpp"
#include "polybasis/coherence.hpp"
#include "polybasis/error.hpp"
#include "polybasis/io.hpp"
#include "polybasis/local_confluence.hpp"
#include "polybasis/srs.hpp"

namespace polybasis::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::parse_error, "cannot write " + path);
  out << content;
}

int exit_code_for(const EngineError& e) {
  return e.code() == ErrorCode::parse_error ? kExitParse : kExitFail;
}

// Shared front half of every command: parse, validate termination, choose
// the confluence structure.
struct LoadedSystem {
  RewritingSystem system;
  TerminationOrder order;
  LocalConfluenceStructure lc;
};

struct LoadOutcome {
  std::optional<LoadedSystem> loaded;
  int exit_code = kExitOk;
};

LoadOutcome load_checked(const std::string& path, std::ostream& out, std::ostream& err,
                         bool verbose) {
  SystemWithOrder parsed = parse_system_file(read_file(path));
  Report termination = check_noetherian(parsed.system, parsed.order);
  if (verbose) {
    out << "termination: " << (termination.ok ? "PASS" : "FAIL") << " (" << termination.summary
        << ")\n";
    for (const std::string& d : termination.details) out << "  " << d << "\n";
  }
  if (!termination.ok) {
    if (!verbose) err << "termination failed: " << termination.summary << "\n";
    return LoadOutcome{std::nullopt, kExitFail};
  }

  if (verbose) {
    const RewritingSystem& sys = parsed.system;
    auto joinability = [&](const Object& left, const Object& right) -> std::string {
      NormalizeResult nl = normalize(sys, left);
      NormalizeResult nr = normalize(sys, right);
      if (nl.normal_form == nr.normal_form)
        return "joinable at \"" + sys.show_object(nl.normal_form) + "\"";
      return "NOT joinable (\"" + sys.show_object(nl.normal_form) + "\" vs \"" +
             sys.show_object(nr.normal_form) + "\")";
    };
    if (sys.mode() == SystemMode::srs) {
      out << "critical peaks:\n";
      for (const CriticalPeak& peak : critical_peaks(sys)) {
        out << "  " << peak_kind_name(peak.kind) << "  " << sys.show_object(peak.word) << "  ("
            << sys.describe_step(peak.left) << ", " << sys.describe_step(peak.right) << ")  "
            << joinability(sys.apply_forward(peak.word, peak.left),
                           sys.apply_forward(peak.word, peak.right))
            << "\n";
      }
    } else {
      out << "local peaks:\n";
      for (Symbol v = 0; static_cast<std::size_t>(v) < sys.symbol_count(); ++v) {
        Object apex = Object::node(v);
        std::vector<StepRef> steps = sys.forward_steps(apex);
        for (std::size_t i = 0; i < steps.size(); ++i)
          for (std::size_t j = i + 1; j < steps.size(); ++j)
            out << "  " << sys.show_object(apex) << "  (" << sys.describe_step(steps[i]) << ", "
                << sys.describe_step(steps[j]) << ")  "
                << joinability(sys.apply_forward(apex, steps[i]),
                               sys.apply_forward(apex, steps[j]))
                << "\n";
      }
    }
  }

  LcSynthesis lc = synthesize_lc(parsed.system, parsed.order);
  if (!lc.ok()) {
    (verbose ? out : err) << "local confluence: FAIL\n  " << lc.failure->message << "\n";
    return LoadOutcome{std::nullopt, kExitFail};
  }
  if (verbose) {
    out << "local confluence: PASS";
    if (parsed.system.mode() == SystemMode::srs)
      out << " (" << lc.structure->templates().size() << " critical peaks joinable)";
    out << "\n";
  }
  return LoadOutcome{LoadedSystem{std::move(parsed.system), std::move(parsed.order),
                                  std::move(*lc.structure)},
                     kExitOk};
}

}  // namespace

int cmd_check(const std::string& system_path, std::ostream& out, std::ostream& err) {
  try {
    LoadOutcome outcome = load_checked(system_path, out, err, /*verbose=*/true);
    if (!outcome.loaded) return outcome.exit_code;
    out << "system '" << outcome.loaded->system.name() << "': terminating and locally confluent\n";
    return kExitOk;
  } catch (const EngineError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_basis(const std::string& system_path, const std::string& u_literal,
              const std::string& v_literal, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  try {
    LoadOutcome outcome = load_checked(system_path, out, err, /*verbose=*/false);
    if (!outcome.loaded) return outcome.exit_code;
    LoadedSystem& ls = *outcome.loaded;
    ZigZag u = parse_zigzag_literal(ls.system, u_literal);
    ZigZag v = parse_zigzag_literal(ls.system, v_literal);
    BasisWitness witness = basis_witness(ls.system, ls.order, ls.lc, u, v);
    std::string text = serialize_witness(ls.system, witness);
    // the emitted file must re-validate on load
    Report check = check_rewrite_zigzag(ls.system, ls.lc, parse_witness(ls.system, text).witness);
    if (!check.ok) {
      err << "internal error: emitted witness does not re-validate: " << check.summary << "\n";
      return kExitFail;
    }
    write_file(out_path, text);
    out << "witness: " << witness.witness.cells.size() << " cells -> " << out_path << "\n";
    return kExitOk;
  } catch (const EngineError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_certify(const std::string& system_path, const std::string& u_literal,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  try {
    LoadOutcome outcome = load_checked(system_path, out, err, /*verbose=*/false);
    if (!outcome.loaded) return outcome.exit_code;
    LoadedSystem& ls = *outcome.loaded;
    ZigZag u = parse_zigzag_literal(ls.system, u_literal);
    Certificate cert = certify_closed(ls.system, ls.order, ls.lc, u);
    std::string text = serialize_certificate(ls.system, cert, u);
    auto [reparsed, subject] = parse_certificate(ls.system, text);
    Report check = check_certificate(ls.system, ls.lc, reparsed, subject);
    if (!check.ok) {
      err << "internal error: emitted certificate does not re-validate: " << check.summary
          << "\n";
      return kExitFail;
    }
    write_file(out_path, text);
    out << "certificate: " << certificate_size(cert) << " nodes -> " << out_path << "\n";
    return kExitOk;
  } catch (const EngineError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_verify(const std::string& system_path, const std::string& artifact_path, std::ostream& out,
               std::ostream& err) {
  try {
    LoadOutcome outcome = load_checked(system_path, out, err, /*verbose=*/false);
    if (!outcome.loaded) return outcome.exit_code;
    LoadedSystem& ls = *outcome.loaded;

    std::string content = read_file(artifact_path);
    std::istringstream first_line(content);
    std::string header;
    std::getline(first_line, header);

    Report report;
    if (header == kWitnessHeader) {
      BasisWitness witness = parse_witness(ls.system, content);
      report = check_rewrite_zigzag(ls.system, ls.lc, witness.witness);
    } else if (header == kCertificateHeader) {
      auto [cert, subject] = parse_certificate(ls.system, content);
      report = check_certificate(ls.system, ls.lc, cert, subject);
    } else {
      raise(ErrorCode::parse_error, artifact_path + ": unknown artifact header");
    }

    out << (report.ok ? "PASS" : "FAIL") << ": " << report.summary << "\n";
    for (const std::string& d : report.details) out << "  " << d << "\n";
    return report.ok ? kExitOk : kExitFail;
  } catch (const EngineError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_normalize(const std::string& system_path, const std::string& word, std::ostream& out,
                  std::ostream& err) {
  try {
    SystemWithOrder parsed = parse_system_file(read_file(system_path));
    Report termination = check_noetherian(parsed.system, parsed.order);
    if (!termination.ok) {
      err << "termination failed: " << termination.summary << "\n";
      return kExitFail;
    }
    Object obj;
    if (parsed.system.mode() == SystemMode::srs) {
      auto w = parsed.system.parse_word(word);
      if (!w) raise(ErrorCode::parse_error, "cannot read word '" + word + "' over this alphabet");
      obj = *w;
    } else {
      auto s = parsed.system.find_symbol(word);
      if (!s) raise(ErrorCode::parse_error, "unknown object '" + word + "'");
      obj = Object::node(*s);
    }
    NormalizeResult result = normalize(parsed.system, obj);
    out << "normal form: \"" << parsed.system.show_object(result.normal_form) << "\" ("
        << result.path.steps.size() << " steps)\n";
    return kExitOk;
  } catch (const EngineError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_graph(const std::string& system_path, bool dot, std::optional<std::size_t> max_word_len,
              std::ostream& out, std::ostream& err) {
  try {
    SystemWithOrder parsed = parse_system_file(read_file(system_path));
    if (!dot) raise(ErrorCode::parse_error, "graph currently only emits DOT; pass --dot");
    if (parsed.system.mode() == SystemMode::srs && !max_word_len)
      raise(ErrorCode::parse_error,
            "srs reduction graphs are infinite; --max-word-len N is required");
    out << reduction_graph_dot(parsed.system, max_word_len.value_or(0));
    return kExitOk;
  } catch (const EngineError& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"polybasis: termination, local confluence, and coherence witnesses for "
               "rewriting systems"};
  app.require_subcommand(1);

  std::string file, u_lit, v_lit, out_path, word, artifact;
  bool dot = false;
  std::size_t max_word_len = 0;
  bool has_max = false;

  CLI::App* check = app.add_subcommand("check", "termination and local-confluence report");
  check->add_option("file", file, "system definition file")->required();

  CLI::App* basis = app.add_subcommand("basis", "emit a homotopy-basis witness file");
  basis->add_option("file", file, "system definition file")->required();
  basis->add_option("-u", u_lit, "first zig-zag literal")->required();
  basis->add_option("-v", v_lit, "second (parallel) zig-zag literal")->required();
  basis->add_option("-o,--out", out_path, "output witness file")->required();

  CLI::App* certify = app.add_subcommand("certify", "emit a closed-zig-zag certificate file");
  certify->add_option("file", file, "system definition file")->required();
  certify->add_option("-u", u_lit, "closed zig-zag literal")->required();
  certify->add_option("-o,--out", out_path, "output certificate file")->required();

  CLI::App* verify = app.add_subcommand("verify", "validate a witness or certificate file");
  verify->add_option("file", file, "system definition file")->required();
  verify->add_option("artifact", artifact, "witness or certificate file")->required();

  CLI::App* normalize = app.add_subcommand("normalize", "reduce a word to its normal form");
  normalize->add_option("file", file, "system definition file")->required();
  normalize->add_option("word", word, "word (srs) or object name (graph)")->required();

  CLI::App* graph = app.add_subcommand("graph", "emit the reduction graph as DOT");
  graph->add_option("file", file, "system definition file")->required();
  graph->add_flag("--dot", dot, "emit DOT text");
  graph->add_option("--max-word-len", max_word_len, "word-length cap for srs graphs")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitParse;
  }

  has_max = graph->count("--max-word-len") > 0;

  try {
    if (check->parsed()) return cmd_check(file, out, err);
    if (basis->parsed()) return cmd_basis(file, u_lit, v_lit, out_path, out, err);
    if (certify->parsed()) return cmd_certify(file, u_lit, out_path, out, err);
    if (verify->parsed()) return cmd_verify(file, artifact, out, err);
    if (normalize->parsed()) return cmd_normalize(file, word, out, err);
    if (graph->parsed())
      return cmd_graph(file, dot,
                       has_max ? std::optional<std::size_t>(max_word_len) : std::nullopt, out,
                       err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  err << "no subcommand\n";
  return kExitParse;
}

}  // namespace polybasis::cli
