#ifndef GRAFT_CLI_HPP
#define GRAFT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace graft {

// One CLI invocation; `args` excludes the program name. Returns the exit
// status: 0 success, 1 domain error, 2 usage or I/O error. Output is
// byte-deterministic for identical invocations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graft

#endif
