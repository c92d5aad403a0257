#pragma once

#include <iosfwd>

namespace eqhom {

/// Runs one command. Exit status: 0 on success, 1 when a verification
/// fails (cofib-check "no", missing certificate, unit not an iso), 2 on
/// input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqhom
