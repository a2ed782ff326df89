// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace polybasis::cli {

// Exit code contract: 0 success, 1 semantic failure (non-terminating,
// non-confluent, invalid witness/certificate, non-parallel inputs),
// 2 parse or IO failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParse = 2;

int cmd_check(const std::string& system_path, std::ostream& out, std::ostream& err);

int cmd_basis(const std::string& system_path, const std::string& u_literal,
              const std::string& v_literal, const std::string& out_path, std::ostream& out,
              std::ostream& err);

int cmd_certify(const std::string& system_path, const std::string& u_literal,
                const std::string& out_path, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& system_path, const std::string& artifact_path,
               std::ostream& out, std::ostream& err);

int cmd_normalize(const std::string& system_path, const std::string& word, std::ostream& out,
                  std::ostream& err);

int cmd_graph(const std::string& system_path, bool dot, std::optional<std::size_t> max_word_len,
              std::ostream& out, std::ostream& err);

/// Full argv-level entry point used by the polybasis binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polybasis::cli
