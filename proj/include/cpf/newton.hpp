#pragma once

// Binomial (Newton) basis P_k(x) = C(x, k) for functions Z/nZ -> Z/mZ.
//
// Domain representatives are always {0, ..., n-1}. P_k(x) is evaluated as an
// integer and only then reduced mod m; the coefficient multiplies the reduced
// value. With m = 8, 4 * P_2(3) is 4 * 3 = 4, never (4 * 3 * 2) / 2.

#include <cpf/modring.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace cpf {

/// Value table of f : Z/nZ -> Z/mZ. Entries must already lie in [0, m).
class FunctionTable {
public:
    /// Throws std::invalid_argument on an empty table or an unreduced entry.
    FunctionTable(Modulus mod, std::vector<u64> values);

    std::size_t size() const noexcept { return values_.size(); }
    const Modulus& modulus() const noexcept { return mod_; }
    std::span<const u64> values() const noexcept { return values_; }
    u64 operator[](std::size_t x) const { return values_[x]; }
    Residue at(std::size_t x) const;

    friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
        return a.mod_ == b.mod_ && a.values_ == b.values_;
    }

private:
    Modulus mod_;
    std::vector<u64> values_;
};

/// Coefficients (a_0, ..., a_{n-1}) with f = sum_k a_k P_k.
class NewtonCoeffs {
public:
    NewtonCoeffs(Modulus mod, std::vector<u64> coeffs);

    std::size_t size() const noexcept { return coeffs_.size(); }
    const Modulus& modulus() const noexcept { return mod_; }
    std::span<const u64> coeffs() const noexcept { return coeffs_; }
    u64 operator[](std::size_t k) const { return coeffs_[k]; }
    Residue at(std::size_t k) const;

    friend bool operator==(const NewtonCoeffs& a, const NewtonCoeffs& b) {
        return a.mod_ == b.mod_ && a.coeffs_ == b.coeffs_;
    }

private:
    Modulus mod_;
    std::vector<u64> coeffs_;
};

/// Rows of Pascal's triangle mod m, one at a time, truncated to `width` columns.
/// Row x holds C(x, 0), ..., C(x, width - 1) mod m. Borrows `mod`.
class PascalRows {
public:
    PascalRows(const Modulus& mod, std::size_t width);

    std::span<const u64> row() const noexcept { return row_; }
    u64 index() const noexcept { return x_; }
    void advance();

private:
    const Modulus& mod_;
    u64 x_ = 0;
    std::vector<u64> row_;
};

/// C(x, k) mod m via the additive recurrence; 0 when k > x.
Residue binomial_mod(u64 x, u64 k, const Modulus& mod);

/// sum_k a_k * (C(x, k) mod m) in Z/mZ. Throws std::out_of_range unless x < n.
Residue evaluate(const NewtonCoeffs& c, u64 x);

/// Evaluates at every x in {0, ..., n-1}.
FunctionTable evaluate_table(const NewtonCoeffs& c);

/// a_k = sum_{i<=k} (-1)^(k-i) C(k, i) f(i) mod m.
NewtonCoeffs decompose(const FunctionTable& f);

/// Largest k with a_k != 0, or -1 for the zero function.
std::ptrdiff_t newton_degree(const NewtonCoeffs& c);

}  // namespace cpf
