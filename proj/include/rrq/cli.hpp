#pragma once

#include <ostream>

namespace rrq::cli {

// Exit codes.
enum Exit : int {
    ok = 0,
    usage = 1,
    unconverged = 2,
    divergence = 3,
    verification_failed = 4,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace rrq::cli
