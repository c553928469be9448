#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nls {

// Whole command-line tool behind a testable seam: `args` excludes the
// program name; output streams are injected so tests can capture them.
// Exit codes: 0 success (or finite closure), 10 infinite closure, 11 round
// cap hit, 2 bad invocation or unreadable/invalid input, 1 runtime failure.
int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace nls
