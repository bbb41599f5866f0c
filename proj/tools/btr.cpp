//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include "btr/cli.h"

int main(int argc, char **argv) {
  return btr::cli::run(argc, argv, std::cout, std::cerr);
}
