// Command-line front end. Every subcommand writes one CSV dataset to the
// chosen output (file or stdout) and a one-line summary to stderr.
#ifndef ZETALOG_CLI_HPP
#define ZETALOG_CLI_HPP

namespace zetalog::cli {

// Exit codes: 0 success, 1 usage/domain error, 2 numerical failure.
int run(int argc, const char* const* argv);

} // namespace zetalog::cli

#endif
