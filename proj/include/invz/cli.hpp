#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invz/rat.hpp"

namespace invz::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kUsageError = 2,
    kCheckFailed = 3,
};

/// Comma-separated rationals, e.g. "1,-2,3/4". Throws ParseError with the
/// offset into the whole list.
std::vector<Rat> parse_rational_list(std::string_view text);

/// Roots a_j from an explicit product z*(z-a_1)*...*(z-a_q). Each factor
/// must expand to a monic linear polynomial and z must occur exactly once.
std::vector<Rat> roots_from_factored(std::string_view text);

/// "z*(z-1)*(z+1/2)" for the given nonzero roots.
std::string format_factored(std::span<const Rat> roots);

/// Runs one subcommand; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace invz::cli
