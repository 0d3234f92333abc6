#pragma once

// Counting congruence preserving functions Z/nZ -> Z/mZ three ways:
// the product of subgroup orders lambda(m, k), the per-prime-power closed
// form, and the p^(en - sum min(e, floor(log_p k))) formula for m = p^e.
// A fourth, exhaustive, route classifies every table directly.

#include <cpf/modring.hpp>

#include <cstddef>
#include <optional>
#include <string_view>

namespace cpf {

/// Exact count of CP functions; always >= 1.
struct CpCount {
    BigNat value;

    friend bool operator==(const CpCount&, const CpCount&) = default;
};

enum class CountMethod { product, closed, exhaustive };

const char* to_string(CountMethod method) noexcept;
std::optional<CountMethod> parse_count_method(std::string_view name) noexcept;

inline constexpr u64 kDefaultExhaustiveBudget = 1'000'000;

/// prod_{k<n} lambda(m, k).
CpCount cp_count_product(std::size_t n, const Modulus& mod);

/// prod_i p_i^{M_i}, M_i = p + ... + p^e when n >= p^e, otherwise
/// p + ... + p^l + (e - l) n with l = floor(log_p n).
CpCount cp_count_closed(std::size_t n, const Modulus& mod);

/// p^(e n - sum_{k=1}^{n-1} min(e, floor(log_p k))). Throws std::invalid_argument
/// unless p is prime and e >= 1.
CpCount cp_count_bhargava(std::size_t n, u64 p, unsigned e);

/// Classifies all m^n tables with the direct check. Throws BudgetExceeded when
/// m^n > budget.
CpCount cp_count_exhaustive(std::size_t n, const Modulus& mod, u64 budget = kDefaultExhaustiveBudget);

CpCount cp_count(std::size_t n, const Modulus& mod, CountMethod method,
                 u64 budget = kDefaultExhaustiveBudget);

}  // namespace cpf
