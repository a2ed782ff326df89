// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  return polybasis::cli::run(argc, argv, std::cout, std::cerr);
}
