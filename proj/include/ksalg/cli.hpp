#pragma once

#include <ostream>

namespace ksalg {

// Exit codes: 0 ok, 1 a verification failed, 2 bad configuration or input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ksalg
