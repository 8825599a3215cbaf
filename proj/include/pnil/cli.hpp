// Command line front end: count, list-rank2, catalog, ancestry-descend,
// ancestry-ancestors, ancestry-branch, verify-all.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnil::cli {

// args excludes the program name.  Returns the process exit code: 0 on
// success, 1 when a verification the command performs fails, 2 on usage or
// input errors.
int run_cli(std::vector<std::string> args, std::ostream& out);

}  // namespace pnil::cli
