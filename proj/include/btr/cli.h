//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_CLI_H_
#define BTR_CLI_H_

#include <ostream>

namespace btr::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoImprovement = 3;

// Entry point of the btr tool; argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace btr::cli

#endif  // BTR_CLI_H_
