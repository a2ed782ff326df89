// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace polybasis {

/// Outcome of a validation pass. Failures are values, not exceptions; the
/// summary names the first violation and `details` carries supporting lines
/// (an offending cycle, a cell index, a certificate node path, ...).
struct Report {
  bool ok = true;
  std::string summary;
  std::vector<std::string> details;

  static Report pass(std::string summary = "ok") {
    Report r;
    r.ok = true;
    r.summary = std::move(summary);
    return r;
  }

  static Report fail(std::string summary, std::vector<std::string> details = {}) {
    Report r;
    r.ok = false;
    r.summary = std::move(summary);
    r.details = std::move(details);
    return r;
  }
};

}  // namespace polybasis
