#pragma once

/**
 * @file cpcheck.hpp
 * @brief Congruence preservation: two deciders, generators, enumeration.
 *
 * f : Z/nZ -> Z/mZ is congruence preserving (CP) when, for every d | m,
 * a = b (mod d) implies f(a) = f(b) (mod d) on the representatives
 * {0, ..., n-1}.
 *
 * is_cp_direct decides this from the value table. is_cp_coeff decides it
 * from the Newton coefficients: f is CP iff lcm(k) divides a_k in Z/mZ for
 * every k. The two never disagree, which the test suites check exhaustively.
 */

#include <cpf/modring.hpp>
#include <cpf/newton.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cpf {

enum class CpMethod { direct, coefficient };

const char* to_string(CpMethod method) noexcept;

/// a = b (mod divisor) but f(a) != f(b) (mod divisor).
struct DirectWitness {
    u64 divisor;
    std::size_t a;
    std::size_t b;
    u64 fa;
    u64 fb;

    friend bool operator==(const DirectWitness&, const DirectWitness&) = default;
};

/// lcm(index) mod m does not divide a_index in Z/mZ.
struct CoeffWitness {
    std::size_t index;
    u64 coeff;
    u64 lcm_mod;

    friend bool operator==(const CoeffWitness&, const CoeffWitness&) = default;
};

/// Verdict plus a witness exactly when the verdict is false.
class CpReport {
public:
    using Witness = std::variant<std::monostate, DirectWitness, CoeffWitness>;

    static CpReport pass(CpMethod method) { return CpReport(method, std::monostate{}); }
    static CpReport fail(DirectWitness w) { return CpReport(CpMethod::direct, w); }
    static CpReport fail(CoeffWitness w) { return CpReport(CpMethod::coefficient, w); }

    bool verdict() const noexcept { return std::holds_alternative<std::monostate>(witness_); }
    CpMethod method() const noexcept { return method_; }
    const Witness& witness() const noexcept { return witness_; }

    const DirectWitness* direct_witness() const noexcept { return std::get_if<DirectWitness>(&witness_); }
    const CoeffWitness* coeff_witness() const noexcept { return std::get_if<CoeffWitness>(&witness_); }

private:
    CpReport(CpMethod method, Witness w) : method_(method), witness_(w) {}

    CpMethod method_;
    Witness witness_;
};

/// A single requirement f(a) = f(b) (mod divisor).
struct Condition {
    u64 divisor;
    std::size_t a;
    std::size_t b;

    friend bool operator==(const Condition&, const Condition&) = default;
};

/**
 * Minimal pair set equivalent to the CP definition for tables of size n.
 *
 * Only prime-power divisors d = p^c are needed (CRT). At the top exponent
 * c = e every adjacent pair (a, a + d) is required; below it, the pairs with
 * a < (p - 1) p^c suffice, since the level above already ties each class mod
 * p^c together in steps of p^(c+1). Sorted by (divisor, a).
 */
std::vector<Condition> reduced_conditions(std::size_t n, const Modulus& mod);

/// Precomputed reduced conditions for repeated checks at a fixed (n, m).
class DirectChecker {
public:
    DirectChecker(std::size_t n, Modulus mod);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Condition>& conditions() const noexcept { return conditions_; }

    /// Verdict only. `values` must have length n.
    bool holds(std::span<const u64> values) const noexcept;

    /// Full report with the lexicographically least witness (divisor, then a, then b).
    CpReport check(const FunctionTable& f) const;

private:
    std::size_t n_;
    Modulus mod_;
    std::vector<Condition> conditions_;
    std::vector<u64> prime_power_divisors_;
};

CpReport is_cp_direct(const FunctionTable& f);

/// Decomposes f and tests lcm(k) | a_k for each k; the witness is the least failing k.
CpReport is_cp_coeff(const FunctionTable& f);

/// Tables of lcm(k) * P_k for 0 <= k < min(n, mu(m)).
std::vector<FunctionTable> generator_family(std::size_t n, const Modulus& mod);

/// True iff m has no prime factor p < min(n, m).
bool is_basis(std::size_t n, const Modulus& mod);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, BigNat required, BigNat budget);

    const BigNat& required() const noexcept { return required_; }
    const BigNat& budget() const noexcept { return budget_; }

private:
    BigNat required_;
    BigNat budget_;
};

/**
 * Stream of every CP function Z/nZ -> Z/mZ, each exactly once.
 *
 * Walks coefficient tuples with a_k in the multiples of lcm(k) mod m as an
 * odometer, a_0 fastest. Consecutive tables differ by gcd(lcm(k), m) * P_k for
 * each digit that moved, so each step costs O(n) per moved digit.
 */
class CpEnumeration {
public:
    CpEnumeration(std::size_t n, Modulus mod);

    /// Number of tables the stream yields in total.
    const BigNat& count() const noexcept { return count_; }

    std::optional<FunctionTable> next();

private:
    struct Digit {
        std::size_t index;
        u64 order;           // lambda(m, index)
        u64 value = 0;       // a_index / step
        std::vector<u64> step_table;  // x -> step * C(x, index) mod m
    };

    std::size_t n_;
    Modulus mod_;
    BigNat count_;
    std::vector<Digit> digits_;
    std::vector<u64> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Throws BudgetExceeded when the stream would exceed `budget` tables.
CpEnumeration enumerate_cp(std::size_t n, const Modulus& mod, u64 budget);

/**
 * SplitMix64: state += 0x9E3779B97F4A7C15, then
 * z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
 * z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
 * return z ^ (z >> 31).
 */
class SplitMix64 {
public:
    explicit SplitMix64(u64 seed) noexcept : state_(seed) {}

    u64 next() noexcept;

    /// Uniform in [0, bound) by rejecting draws below 2^64 mod bound.
    u64 below(u64 bound) noexcept;

private:
    u64 state_;
};

/// Deterministic in seed. Draws a_k uniformly from the multiples of lcm(k)
/// mod m for each k with lambda(m, k) > 1, in increasing k.
FunctionTable random_cp(std::size_t n, const Modulus& mod, u64 seed);

}  // namespace cpf
