#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asigma {

// args excludes the program name. Exit status: 0 success, 1 a check failed or
// a runtime error occurred, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace asigma
