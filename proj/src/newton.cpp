#include <cpf/newton.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cpf {

namespace {

void require_reduced(const Modulus& mod, std::span<const u64> xs, const char* what) {
    if (xs.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] >= mod.value()) {
            throw std::invalid_argument(std::string(what) + "[" + std::to_string(i) + "] = " +
                                        std::to_string(xs[i]) + " not in [0, " +
                                        std::to_string(mod.value()) + ")");
        }
    }
}

}  // namespace

FunctionTable::FunctionTable(Modulus mod, std::vector<u64> values)
    : mod_(std::move(mod)), values_(std::move(values)) {
    require_reduced(mod_, values_, "values");
}

Residue FunctionTable::at(std::size_t x) const { return Residue(values_.at(x), mod_.value()); }

NewtonCoeffs::NewtonCoeffs(Modulus mod, std::vector<u64> coeffs)
    : mod_(std::move(mod)), coeffs_(std::move(coeffs)) {
    require_reduced(mod_, coeffs_, "coeffs");
}

Residue NewtonCoeffs::at(std::size_t k) const { return Residue(coeffs_.at(k), mod_.value()); }

PascalRows::PascalRows(const Modulus& mod, std::size_t width) : mod_(mod), row_(width, 0) {
    if (width > 0) row_[0] = mod.reduce(1);
}

void PascalRows::advance() {
    // C(x+1, k) = C(x, k) + C(x, k-1), updated right to left in place.
    const std::size_t top = std::min<u64>(row_.size() - 1, x_ + 1);
    for (std::size_t k = top; k >= 1; --k) row_[k] = mod_.add(row_[k], row_[k - 1]);
    ++x_;
}

Residue binomial_mod(u64 x, u64 k, const Modulus& mod) {
    if (k > x) return Residue(0, mod.value());
    PascalRows rows(mod, static_cast<std::size_t>(std::min(k, x - k)) + 1);
    while (rows.index() < x) rows.advance();
    return Residue(rows.row().back(), mod.value());
}

Residue evaluate(const NewtonCoeffs& c, u64 x) {
    if (x >= c.size()) {
        throw std::out_of_range("evaluate: x = " + std::to_string(x) + " outside [0, " +
                                std::to_string(c.size()) + ")");
    }
    const Modulus& mod = c.modulus();
    PascalRows rows(mod, static_cast<std::size_t>(x) + 1);
    while (rows.index() < x) rows.advance();
    u64 acc = 0;
    for (std::size_t k = 0; k <= x; ++k) acc = mod.add(acc, mod.mul(c[k], rows.row()[k]));
    return Residue(acc, mod.value());
}

FunctionTable evaluate_table(const NewtonCoeffs& c) {
    const Modulus& mod = c.modulus();
    const std::size_t n = c.size();
    std::vector<u64> values(n);
    PascalRows rows(mod, n);
    for (std::size_t x = 0; x < n; ++x) {
        if (x > 0) rows.advance();
        u64 acc = 0;
        for (std::size_t k = 0; k <= x; ++k) acc = mod.add(acc, mod.mul(c[k], rows.row()[k]));
        values[x] = acc;
    }
    return FunctionTable(mod, std::move(values));
}

NewtonCoeffs decompose(const FunctionTable& f) {
    const Modulus& mod = f.modulus();
    const std::size_t n = f.size();
    std::vector<u64> coeffs(n);
    PascalRows rows(mod, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) rows.advance();
        u64 acc = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            const u64 term = mod.mul(rows.row()[i], f[i]);
            acc = ((k - i) % 2 == 0) ? mod.add(acc, term) : mod.sub(acc, term);
        }
        coeffs[k] = acc;
    }
    return NewtonCoeffs(mod, std::move(coeffs));
}

std::ptrdiff_t newton_degree(const NewtonCoeffs& c) {
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] != 0) return static_cast<std::ptrdiff_t>(k);
    }
    return -1;
}

}  // namespace cpf
