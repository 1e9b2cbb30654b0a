// Command-line front end.  cli_main is the whole program minus the stream
// wiring, so tests can drive it with argv vectors and string streams.
#pragma once

#include <iosfwd>

namespace markov {

// Exit codes: 0 success, 2 usage or parse error, 3 domain error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace markov
