#include <cpf/cpcheck.hpp>

#include <algorithm>

namespace cpf {

const char* to_string(CpMethod method) noexcept {
    switch (method) {
        case CpMethod::direct:
            return "direct";
        case CpMethod::coefficient:
            return "coeff";
    }
    return "?";
}

std::vector<Condition> reduced_conditions(std::size_t n, const Modulus& mod) {
    std::vector<Condition> out;
    for (const auto& f : mod.factors()) {
        u64 d = 1;
        for (unsigned c = 1; c <= f.exponent; ++c) {
            d *= f.prime;
            if (d >= n) break;
            const u64 span_end = n - d;
            const u64 limit = c < f.exponent ? std::min(span_end, (f.prime - 1) * d) : span_end;
            for (u64 a = 0; a < limit; ++a) out.push_back({d, a, a + d});
        }
    }
    std::sort(out.begin(), out.end(), [](const Condition& x, const Condition& y) {
        return x.divisor != y.divisor ? x.divisor < y.divisor : x.a < y.a;
    });
    return out;
}

DirectChecker::DirectChecker(std::size_t n, Modulus mod)
    : n_(n), mod_(std::move(mod)), conditions_(reduced_conditions(n_, mod_)) {
    for (const auto& f : mod_.factors()) {
        u64 d = 1;
        for (unsigned c = 1; c <= f.exponent; ++c) {
            d *= f.prime;
            if (d >= n_) break;
            prime_power_divisors_.push_back(d);
        }
    }
    std::sort(prime_power_divisors_.begin(), prime_power_divisors_.end());
}

bool DirectChecker::holds(std::span<const u64> values) const noexcept {
    for (const auto& c : conditions_) {
        if (values[c.a] % c.divisor != values[c.b] % c.divisor) return false;
    }
    return true;
}

CpReport DirectChecker::check(const FunctionTable& f) const {
    const auto values = f.values();
    if (holds(values)) return CpReport::pass(CpMethod::direct);
    // Some prime-power divisor fails whenever any divisor does, and a failing
    // composite divisor is never smaller than its failing prime-power part.
    for (u64 d : prime_power_divisors_) {
        for (std::size_t a = 0; a + d < n_; ++a) {
            for (std::size_t b = a + d; b < n_; b += d) {
                if (values[a] % d != values[b] % d) {
                    return CpReport::fail(DirectWitness{d, a, b, values[a], values[b]});
                }
            }
        }
    }
    return CpReport::pass(CpMethod::direct);  // unreachable: reduced set is exact
}

CpReport is_cp_direct(const FunctionTable& f) { return DirectChecker(f.size(), f.modulus()).check(f); }

CpReport is_cp_coeff(const FunctionTable& f) {
    const Modulus& mod = f.modulus();
    const NewtonCoeffs coeffs = decompose(f);
    const auto lcms = unary_lcm_mod_table(f.size() - 1, mod);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!divides_in_ring(Residue(lcms[k], mod.value()), coeffs.at(k))) {
            return CpReport::fail(CoeffWitness{k, coeffs[k], lcms[k]});
        }
    }
    return CpReport::pass(CpMethod::coefficient);
}

std::vector<FunctionTable> generator_family(std::size_t n, const Modulus& mod) {
    const std::size_t count = static_cast<std::size_t>(std::min<u64>(n, mu(mod)));
    const auto lcms = unary_lcm_mod_table(count - 1, mod);
    std::vector<std::vector<u64>> tables(count, std::vector<u64>(n));
    PascalRows rows(mod, count);
    for (std::size_t x = 0; x < n; ++x) {
        if (x > 0) rows.advance();
        for (std::size_t k = 0; k < count; ++k) tables[k][x] = mod.mul(lcms[k], rows.row()[k]);
    }
    std::vector<FunctionTable> out;
    out.reserve(count);
    for (auto& t : tables) out.emplace_back(mod, std::move(t));
    return out;
}

bool is_basis(std::size_t n, const Modulus& mod) {
    const u64 bound = std::min<u64>(n, mod.value());
    return std::none_of(mod.factors().begin(), mod.factors().end(),
                        [bound](const PrimePower& f) { return f.prime < bound; });
}

BudgetExceeded::BudgetExceeded(const std::string& what, BigNat required, BigNat budget)
    : std::runtime_error(what), required_(std::move(required)), budget_(std::move(budget)) {}

CpEnumeration::CpEnumeration(std::size_t n, Modulus mod)
    : n_(n), mod_(std::move(mod)), count_(1), current_(n, 0) {
    if (n == 0) throw std::invalid_argument("enumerate_cp: n must be positive");
    const std::size_t active = static_cast<std::size_t>(std::min<u64>(n, mu(mod_)));
    for (std::size_t k = 0; k < active; ++k) {
        const u64 order = lambda(mod_, k);
        count_ *= order;
        if (order > 1) digits_.push_back(Digit{k, order, 0, {}});
    }
    if (digits_.empty()) return;
    PascalRows rows(mod_, digits_.back().index + 1);
    for (auto& digit : digits_) digit.step_table.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (x > 0) rows.advance();
        for (auto& digit : digits_) {
            const u64 step = canonical_associate(digit.index, mod_).value();
            digit.step_table[x] = mod_.mul(step, rows.row()[digit.index]);
        }
    }
}

std::optional<FunctionTable> CpEnumeration::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        done_ = digits_.empty();
        return FunctionTable(mod_, current_);
    }
    for (auto& digit : digits_) {
        for (std::size_t x = 0; x < n_; ++x) current_[x] = mod_.add(current_[x], digit.step_table[x]);
        if (++digit.value < digit.order) return FunctionTable(mod_, current_);
        // order * step = 0 in Z/mZ, so the table has wrapped back with the digit.
        digit.value = 0;
    }
    done_ = true;
    return std::nullopt;
}

CpEnumeration enumerate_cp(std::size_t n, const Modulus& mod, u64 budget) {
    CpEnumeration stream(n, mod);
    if (stream.count() > budget) {
        throw BudgetExceeded("enumeration of " + stream.count().str() +
                                 " functions exceeds budget " + std::to_string(budget),
                             stream.count(), budget);
    }
    return stream;
}

u64 SplitMix64::next() noexcept {
    u64 z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

u64 SplitMix64::below(u64 bound) noexcept {
    const u64 threshold = (0 - bound) % bound;
    for (;;) {
        const u64 r = next();
        if (r >= threshold) return r % bound;
    }
}

FunctionTable random_cp(std::size_t n, const Modulus& mod, u64 seed) {
    SplitMix64 rng(seed);
    std::vector<u64> coeffs(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const u64 order = lambda(mod, k);
        if (order > 1) coeffs[k] = mod.mul(rng.below(order), canonical_associate(k, mod).value());
    }
    return evaluate_table(NewtonCoeffs(mod, std::move(coeffs)));
}

}  // namespace cpf
