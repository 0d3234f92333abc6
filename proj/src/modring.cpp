#include <cpf/modring.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cpf {

namespace {

__extension__ typedef unsigned __int128 u128;

// Largest beta with p^beta <= k (k >= 1).
unsigned floor_log(u64 p, u64 k) {
    unsigned beta = 0;
    u64 power = 1;
    while (power <= k / p) {
        power *= p;
        ++beta;
    }
    return beta;
}

u64 ipow(u64 base, unsigned exp) {
    u64 r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

u64 pow_mod(u64 base, u64 exp, const Modulus& mod) {
    u64 result = mod.reduce(1);
    base = mod.reduce(base);
    while (exp > 0) {
        if (exp & 1) result = mod.mul(result, base);
        base = mod.mul(base, base);
        exp >>= 1;
    }
    return result;
}

// Legendre: exponent of p in k!.
u64 factorial_valuation(u64 k, u64 p) {
    u64 v = 0;
    while (k > 0) {
        k /= p;
        v += k;
    }
    return v;
}

// gcd(lcm(k), m) as an integer in [1, m].
u64 lcm_gcd(u64 k, const Modulus& mod) {
    u64 g = 1;
    if (k < 2) return g;
    for (const auto& f : mod.factors()) {
        g *= ipow(f.prime, std::min(f.exponent, floor_log(f.prime, k)));
    }
    return g;
}

constexpr u64 kSieveLimit = u64{1} << 32;

struct PrimeCache {
    std::mutex lock;
    u64 bound = 0;
    std::shared_ptr<const std::vector<u64>> primes = std::make_shared<std::vector<u64>>();
};

PrimeCache& prime_cache() {
    static PrimeCache cache;
    return cache;
}

std::shared_ptr<const std::vector<u64>> sieve_snapshot(u64 bound) {
    if (bound > kSieveLimit) {
        throw std::length_error("prime sieve bound " + std::to_string(bound) + " exceeds 2^32");
    }
    auto& cache = prime_cache();
    std::lock_guard guard(cache.lock);
    if (bound > cache.bound) {
        const u64 target = std::min(kSieveLimit, std::max<u64>({bound, 2 * cache.bound, 1024}));
        std::vector<bool> composite(target + 1, false);
        auto primes = std::make_shared<std::vector<u64>>();
        for (u64 i = 2; i <= target; ++i) {
            if (composite[i]) continue;
            primes->push_back(i);
            if (i > target / i) continue;
            for (u64 j = i * i; j <= target; j += i) composite[j] = true;
        }
        cache.primes = std::move(primes);
        cache.bound = target;
    }
    return cache.primes;
}

}  // namespace

u64 PrimePower::value() const { return ipow(prime, exponent); }

Modulus::Modulus(u64 m) : m_(m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    for (u64 p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors_.push_back({p, e});
    }
    if (m > 1) factors_.push_back({m, 1});
}

Residue Modulus::residue(u64 x) const { return Residue(x % m_, m_); }

Residue Modulus::residue_signed(std::int64_t x) const {
    const auto m = static_cast<std::int64_t>(m_ > static_cast<u64>(INT64_MAX) ? 0 : m_);
    if (m == 0) {
        // m exceeds int64 range: every non-negative x is already reduced.
        return x >= 0 ? Residue(static_cast<u64>(x), m_)
                      : Residue(m_ - static_cast<u64>(-(x + 1)) - 1, m_);
    }
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return Residue(static_cast<u64>(r), m_);
}

u64 Modulus::add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;  // a, b < m <= 2^63
    return s >= m_ ? s - m_ : s;
}

u64 Modulus::sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (m_ - b); }

u64 Modulus::mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m_);
}

Residue::Residue(u64 value, u64 modulus) : value_(value), modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("residue modulus must be positive");
    if (value >= modulus) {
        throw std::invalid_argument("residue " + std::to_string(value) + " not reduced mod " +
                                    std::to_string(modulus));
    }
}

Modulus factorize(u64 m) { return Modulus(m); }

BigNat unary_lcm(u64 k) {
    BigNat result = 1;
    if (k < 2) return result;
    for (u64 q : *sieve_snapshot(k)) {
        if (q > k) break;
        u64 power = q;
        while (power <= k / q) power *= q;
        result *= power;
    }
    return result;
}

Residue unary_lcm_mod(u64 k, const Modulus& mod) {
    u64 acc = mod.reduce(1);
    if (k < 2 || acc == 0) return Residue(acc, mod.value());
    for (u64 q : *sieve_snapshot(k)) {
        if (q > k) break;
        acc = mod.mul(acc, pow_mod(q, floor_log(q, k), mod));
        if (acc == 0) break;
    }
    return Residue(acc, mod.value());
}

std::vector<u64> unary_lcm_mod_table(u64 last, const Modulus& mod) {
    // lcm(k) = lcm(k - 1) * p exactly when k is a power of the prime p.
    std::vector<u64> prime_of_power(last + 1, 0);
    if (last >= 2) {
        for (u64 p : *sieve_snapshot(last)) {
            if (p > last) break;
            for (u64 q = p;; q *= p) {
                prime_of_power[q] = p;
                if (q > last / p) break;
            }
        }
    }
    std::vector<u64> table(last + 1);
    table[0] = mod.reduce(1);
    for (u64 k = 1; k <= last; ++k) {
        table[k] = prime_of_power[k] != 0 ? mod.mul(table[k - 1], prime_of_power[k]) : table[k - 1];
    }
    return table;
}

bool divides_in_ring(const Residue& a, const Residue& x) {
    if (a.modulus() != x.modulus()) {
        throw std::invalid_argument("divides_in_ring: residues from Z/" + std::to_string(a.modulus()) +
                                    "Z and Z/" + std::to_string(x.modulus()) + "Z");
    }
    const u64 g = std::gcd(a.value(), a.modulus());
    return x.value() % g == 0;
}

u64 mu(const Modulus& mod) {
    u64 best = 1;
    for (const auto& f : mod.factors()) best = std::max(best, f.value());
    return best;
}

u64 mu_prime(const Modulus& mod) {
    u64 best = 0;
    for (const auto& f : mod.factors()) {
        // The least k is a multiple of p, and k = e*p always suffices.
        u64 k = f.prime;
        while (factorial_valuation(k, f.prime) < f.exponent) k += f.prime;
        best = std::max(best, k);
    }
    return best;
}

Residue canonical_associate(u64 k, const Modulus& mod) {
    return mod.residue(lcm_gcd(k, mod));
}

u64 lambda(const Modulus& mod, u64 k) { return mod.value() / lcm_gcd(k, mod); }

std::vector<Residue> multiples_of(const Residue& a) {
    const u64 m = a.modulus();
    const u64 g = std::gcd(a.value(), m);
    std::vector<Residue> out;
    out.reserve(m / g);
    for (u64 v = 0; v < m; v += g) out.emplace_back(v, m);
    return out;
}

std::vector<u64> primes_up_to(u64 bound) {
    if (bound < 2) return {};
    auto snapshot = sieve_snapshot(bound);
    auto end = std::upper_bound(snapshot->begin(), snapshot->end(), bound);
    return {snapshot->begin(), end};
}

bool is_prime(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d <= p / d; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace cpf
