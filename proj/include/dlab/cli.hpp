#pragma once

namespace dlab {

/// Full command-line entry point (subcommands exhaust | solve | wos |
/// verify | report). Returns the process exit code: 0 success, 1 failed
/// assertions or solver failure, 2 usage/config errors, 3 I/O errors.
/// Exposed so tests can drive the binary in-process.
int cli_main(int argc, const char* const* argv);

}  // namespace dlab
