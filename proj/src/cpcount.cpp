#include <cpf/cpcount.hpp>

#include <cpf/cpcheck.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpf {

namespace {

constexpr u64 kMaxExponent = std::numeric_limits<unsigned>::max();

BigNat power(u64 base, const BigNat& exponent) {
    if (exponent > kMaxExponent) {
        throw std::overflow_error("count exponent " + exponent.str() + " too large to materialize");
    }
    return boost::multiprecision::pow(BigNat(base), exponent.convert_to<unsigned>());
}

unsigned floor_log(u64 p, u64 k) {
    unsigned beta = 0;
    for (u64 power = p; power <= k; power *= p) {
        ++beta;
        if (power > k / p) break;
    }
    return beta;
}

}  // namespace

const char* to_string(CountMethod method) noexcept {
    switch (method) {
        case CountMethod::product:
            return "product";
        case CountMethod::closed:
            return "closed";
        case CountMethod::exhaustive:
            return "exhaustive";
    }
    return "?";
}

std::optional<CountMethod> parse_count_method(std::string_view name) noexcept {
    if (name == "product") return CountMethod::product;
    if (name == "closed") return CountMethod::closed;
    if (name == "exhaustive") return CountMethod::exhaustive;
    return std::nullopt;
}

CpCount cp_count_product(std::size_t n, const Modulus& mod) {
    // lambda(m, k) = 1 from k = mu(m) on.
    const u64 stop = std::min<u64>(n, mu(mod));
    BigNat total = 1;
    for (u64 k = 0; k < stop; ++k) total *= lambda(mod, k);
    return {total};
}

CpCount cp_count_closed(std::size_t n, const Modulus& mod) {
    BigNat total = 1;
    for (const auto& f : mod.factors()) {
        const u64 p = f.prime;
        const unsigned e = f.exponent;
        const u64 full = f.value();
        const unsigned l = n >= full ? e : floor_log(p, n);
        BigNat exponent = 0;
        u64 pj = 1;
        for (unsigned j = 1; j <= l; ++j) {
            pj *= p;
            exponent += pj;
        }
        exponent += BigNat(e - l) * n;
        total *= power(p, exponent);
    }
    return {total};
}

CpCount cp_count_bhargava(std::size_t n, u64 p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("exponent must be at least 1");
    BigNat deficit = 0;
    for (u64 k = 1; k < n; ++k) deficit += std::min(e, floor_log(p, k));
    return {power(p, BigNat(e) * n - deficit)};
}

CpCount cp_count_exhaustive(std::size_t n, const Modulus& mod, u64 budget) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    // Beyond 64 positions m^n > 2^64 > budget whenever m >= 2.
    const BigNat tables = mod.value() == 1 ? BigNat(1)
                          : n > 64         ? boost::multiprecision::pow(BigNat(2), 64)
                                           : boost::multiprecision::pow(BigNat(mod.value()), static_cast<unsigned>(n));
    if (tables > budget) {
        throw BudgetExceeded("exhaustive count over " + tables.str() + " tables exceeds budget " +
                                 std::to_string(budget),
                             tables, budget);
    }
    const DirectChecker checker(n, mod);
    const u64 m = mod.value();
    std::vector<u64> values(n, 0);
    u64 cp = 0;
    for (;;) {
        if (checker.holds(values)) ++cp;
        std::size_t i = 0;
        while (i < n && ++values[i] == m) values[i++] = 0;
        if (i == n) break;
    }
    return {BigNat(cp)};
}

CpCount cp_count(std::size_t n, const Modulus& mod, CountMethod method, u64 budget) {
    switch (method) {
        case CountMethod::product:
            return cp_count_product(n, mod);
        case CountMethod::closed:
            return cp_count_closed(n, mod);
        case CountMethod::exhaustive:
            return cp_count_exhaustive(n, mod, budget);
    }
    throw std::invalid_argument("unknown count method");
}

}  // namespace cpf
