#pragma once

#include <iosfwd>

namespace coxflip::app {

/// Exit codes: 0 success, 1 failed verification, 2 usage or request error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace coxflip::app
