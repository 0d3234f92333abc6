#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic in the residue ring Z/mZ.
 *
 * A Modulus carries m together with its prime factorization; every other
 * quantity here (unary lcm, mu, subgroup orders, canonical associates) is
 * read off that factorization, so no big integers are needed except in
 * unary_lcm itself.
 */

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpf {

using u64 = std::uint64_t;
using BigNat = boost::multiprecision::cpp_int;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    /// p^e as an integer.
    u64 value() const;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Residue;

/// Positive modulus m with its sorted prime factorization.
class Modulus {
public:
    /// Factorizes m by trial division; throws std::invalid_argument for m = 0.
    explicit Modulus(u64 m);

    u64 value() const noexcept { return m_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }

    /// x reduced into [0, m).
    Residue residue(u64 x) const;
    Residue residue_signed(std::int64_t x) const;

    u64 reduce(u64 x) const noexcept { return x % m_; }
    u64 add(u64 a, u64 b) const noexcept;
    u64 sub(u64 a, u64 b) const noexcept;
    u64 mul(u64 a, u64 b) const noexcept;
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : m_ - a; }

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.m_ == b.m_; }

private:
    u64 m_;
    std::vector<PrimePower> factors_;
};

/// Element of Z/mZ. Carries m so mixed-modulus arithmetic is caught.
class Residue {
public:
    Residue(u64 value, u64 modulus);

    u64 value() const noexcept { return value_; }
    u64 modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    u64 value_;
    u64 modulus_;
};

Modulus factorize(u64 m);

/// lcm(1, ..., k) as an exact integer; lcm(0) = 1.
BigNat unary_lcm(u64 k);

/// lcm(k) mod m, built from prime-power valuations of every prime q <= k.
Residue unary_lcm_mod(u64 k, const Modulus& mod);

/// lcm(0) mod m, ..., lcm(last) mod m in one pass.
std::vector<u64> unary_lcm_mod_table(u64 last, const Modulus& mod);

/// True iff a*t = x (mod m) is solvable, i.e. gcd(a, m) | x with gcd(0, m) = m.
/// Throws std::invalid_argument when the residues live in different rings.
bool divides_in_ring(const Residue& a, const Residue& x);

/// Largest prime power exactly dividing m; 1 when m = 1.
u64 mu(const Modulus& mod);

/// Least k >= 0 with m | k!.
u64 mu_prime(const Modulus& mod);

/// gcd(lcm(k), m) reduced mod m: the associate of lcm(k) with the unit stripped.
Residue canonical_associate(u64 k, const Modulus& mod);

/// Order of the additive subgroup generated by lcm(k) in Z/mZ.
u64 lambda(const Modulus& mod, u64 k);

/// The subgroup {0, g, 2g, ..., m - g} with g = gcd(a, m), ascending.
std::vector<Residue> multiples_of(const Residue& a);

/// Primes <= bound, ascending. Backed by a process-wide sieve that only grows.
std::vector<u64> primes_up_to(u64 bound);

bool is_prime(u64 p);

}  // namespace cpf
