#ifndef LEIBNIZ_CLI_HPP
#define LEIBNIZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz {

/// Dispatches one command line (without the program name) and writes the
/// results to the given streams. Output is deterministic for a fixed input.
///
/// Exit codes: 0 success, 1 a structural verification failed, 2 invalid
/// input, 3 an enumeration guard tripped.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz

#endif
