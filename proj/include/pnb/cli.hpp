#ifndef PNB_CLI_HPP
#define PNB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pnb::cli {

/// Dispatches one command line (without the program name). Writes the
/// serialized OutputEnvelope (JSON by default, aligned text with
/// --format table or PNB_FORMAT=table) to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 1 failed verification report, 2 validation or
/// parse error, 64 unknown subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pnb::cli

#endif
