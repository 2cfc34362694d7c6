#pragma once

namespace hopford {

/// Command-line entry point. Exit codes: 0 success, 1 a verification or
/// expectation failed, 2 usage or parameter errors.
int run_cli(int argc, const char* const* argv);

}  // namespace hopford
