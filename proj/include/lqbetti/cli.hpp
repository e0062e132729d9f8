#ifndef LQBETTI_CLI_HPP
#define LQBETTI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lqb {

// Runs the command-line driver on the given arguments (program name
// excluded). Returns the process exit code: 0 on success, 1 when a checked
// property is false or a comparison mismatches, 2 on input or usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

} // namespace lqb

#endif
