#pragma once

#include <ostream>

namespace gradix::cli {

// Exit status: 0 ok, 1 domain error, 2 I/O or parse error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gradix::cli
