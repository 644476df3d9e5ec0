#ifndef RELTHERMO_CLI_HPP
#define RELTHERMO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace relthermo {

// Full CLI behaviour behind the `thermo` binary; args excludes the program
// name, `out` receives the dataset or report when no --out path is given,
// `err` receives diagnostics. Returns the process exit code:
//   0 success, 2 usage error, 3 I/O error, 4 numerical failure.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relthermo

#endif
