#pragma once

#include <iosfwd>

namespace canonica {

// Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 size guard.
int run(int argc, char** argv);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace canonica
