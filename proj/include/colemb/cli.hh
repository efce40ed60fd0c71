#pragma once

#include <iosfwd>

namespace colemb
{
    /// Exit codes shared by every subcommand.
    namespace exit_code
    {
        constexpr int ok = 0;
        /// The question had a negative answer: certificate fails, no embedding found, invalid embedding.
        constexpr int negative = 2;
        /// Input outside the domain of the computation: degenerate dimensions, oversize searches.
        constexpr int domain = 3;
        constexpr int usage = 64;
        constexpr int io = 74;
    }

    /// Runs the command line tool with explicit streams so tests can drive it in-process.
    auto run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err)
        -> int;
}
