// Command-line front end; `run_cli` is the whole program minus process setup.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zieschang::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kMalformed = 2;
constexpr int kInternal = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zieschang::cli
