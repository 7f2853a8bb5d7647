#pragma once

#include <iosfwd>

namespace radonlike::cli {

/// Entry point of the command-line tool; reports go to `out`, JSON errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radonlike::cli
