#pragma once

// Command-line front end. Exit codes: 0 success (or CP for `check`),
// 1 `check` found a non-CP function, 2 usage or input error, 3 budget exceeded.

#include <cpf/modring.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCp = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses "v0,v1,..." (decimal, optional leading '-', no whitespace) and
/// reduces every entry into [0, m). Throws std::invalid_argument.
std::vector<u64> parse_values(std::string_view text, const Modulus& mod);

std::string join(std::span<const u64> values);

/// Runs one command; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cpf::cli
