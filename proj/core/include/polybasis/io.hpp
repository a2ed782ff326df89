// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "polybasis/certify.hpp"
#include "polybasis/coherence.hpp"
#include "polybasis/order.hpp"
#include "polybasis/srs.hpp"
#include "polybasis/system.hpp"

namespace polybasis {

/// Parses a system definition document (TOML-style sections):
///   [system]   name, mode = "graph" | "srs", objects / alphabet
///   [[steps]]  name, src, tgt                       (graph mode)
///   [[rules]]  name, lhs, rhs as letter lists       (srs mode)
///   [order]    kind = "graph-reachability" | "rule-length-decreasing"
///              | "explicit" with pairs = [["x","y"], ...]
///   [[cells]]  name, source, target as zig-zag literals
/// Throws ErrorCode::parse_error with a line number on malformed input.
SystemWithOrder parse_system_file(const std::string& text);
std::string serialize_system(const RewritingSystem& sys, const TerminationOrder& order);

/// Zig-zag literal: `<start> ; step[@pos][!], step[@pos][!], ...` where the
/// start is an object name (graph mode) or a quoted word (srs mode), `@pos`
/// gives the rule position, and a trailing `!` marks a backward step. The
/// step list may be empty. Parse errors name the first bad step.
ZigZag parse_zigzag_literal(const RewritingSystem& sys, const std::string& text);
std::string zigzag_literal(const RewritingSystem& sys, const ZigZag& u);

// Witness files ("POLYBASIS-WITNESS 1") and certificate files
// ("POLYBASIS-CERT 1") are line-oriented text with a version header.
extern const char* const kWitnessHeader;
extern const char* const kCertificateHeader;

std::string serialize_witness(const RewritingSystem& sys, const BasisWitness& witness);
BasisWitness parse_witness(const RewritingSystem& sys, const std::string& text);

std::string serialize_certificate(const RewritingSystem& sys, const Certificate& cert,
                                  const ZigZag& subject);
std::pair<Certificate, ZigZag> parse_certificate(const RewritingSystem& sys,
                                                 const std::string& text);

/// DOT rendering of the reduction graph. Graph mode ignores `max_word_len`;
/// srs mode enumerates all words up to that length and the steps between
/// them. Node and edge order is deterministic.
std::string reduction_graph_dot(const RewritingSystem& sys, std::size_t max_word_len = 0);

}  // namespace polybasis
