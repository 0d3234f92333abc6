#include <cpf/newton.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace cpf;

namespace {

std::vector<u64> to_vec(std::span<const u64> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("table validation") {
    CHECK_THROWS_AS(FunctionTable(Modulus(6), {}), std::invalid_argument);
    CHECK_THROWS_AS(FunctionTable(Modulus(6), {0, 6}), std::invalid_argument);
    CHECK_THROWS_AS(NewtonCoeffs(Modulus(6), {7}), std::invalid_argument);
}

TEST_CASE("binomial_mod examples") {
    CHECK(binomial_mod(3, 2, Modulus(12)).value() == 3);
    CHECK(binomial_mod(6, 2, Modulus(6)).value() == 3);
    CHECK(binomial_mod(0, 2, Modulus(6)).value() == 0);
    for (u64 x = 0; x < 20; ++x) CHECK(binomial_mod(x, 0, Modulus(7)).value() == 1);
    CHECK(binomial_mod(2, 5, Modulus(7)).value() == 0);
    CHECK(binomial_mod(5, 0, Modulus(1)).value() == 0);
}

TEST_CASE("binomial_mod equals exact binomial reduced") {
    for (u64 m = 1; m <= 64; ++m) {
        const Modulus mod(m);
        for (u64 x = 0; x <= 40; ++x) {
            for (u64 k = 0; k <= 40; ++k) CHECK(binomial_mod(x, k, mod).value() == oracle::binomial_mod(x, k, m));
        }
    }
}

TEST_CASE("evaluate follows reduce-then-multiply order") {
    const Modulus six(6);
    const NewtonCoeffs ex28(six, {0, 3, 4, 0, 0, 0});
    CHECK(evaluate(ex28, 2).value() == 4);

    // 4 * P_2(3) in Z/8Z is 4 * 3 = 4, not (4 * 3 * 2) / 2 = 0.
    const NewtonCoeffs single(Modulus(8), {0, 0, 4, 0, 0, 0, 0, 0});
    CHECK(evaluate(single, 3).value() == 4);

    const NewtonCoeffs zero(Modulus(5), std::vector<u64>(7, 0));
    for (u64 x = 0; x < 7; ++x) CHECK(evaluate(zero, x).value() == 0);
    CHECK_THROWS_AS(evaluate(zero, 7), std::out_of_range);
}

TEST_CASE("decompose examples") {
    const Modulus six(6), eight(8);
    CHECK(to_vec(decompose(FunctionTable(six, {0, 3, 4, 3, 0, 1})).coeffs()) == std::vector<u64>{0, 3, 4, 0, 0, 0});
    CHECK(to_vec(decompose(FunctionTable(eight, {0, 3, 4, 1, 4, 7})).coeffs()) ==
          std::vector<u64>{0, 3, 6, 6, 4, 4});
    CHECK(oracle::forward_differences({0, 3, 4, 1, 4, 7}, 8) == std::vector<u64>{0, 3, 6, 6, 4, 4});
    CHECK(to_vec(decompose(FunctionTable(eight, {5, 5, 5, 5})).coeffs()) == std::vector<u64>{5, 0, 0, 0});
}

TEST_CASE("the listed a_3 = 2 for the Z/6Z -> Z/8Z example does not reproduce f(3) = 1") {
    const NewtonCoeffs listed(Modulus(8), {0, 3, 6, 2, 4, 4});
    CHECK(evaluate(listed, 3).value() == 5);
    const NewtonCoeffs canonical(Modulus(8), {0, 3, 6, 6, 4, 4});
    CHECK(to_vec(evaluate_table(canonical).values()) == std::vector<u64>{0, 3, 4, 1, 4, 7});
}

TEST_CASE("newton_degree") {
    CHECK(newton_degree(NewtonCoeffs(Modulus(6), {0, 3, 4, 0, 0, 0})) == 2);
    CHECK(newton_degree(NewtonCoeffs(Modulus(6), {0, 0, 0})) == -1);
    CHECK(newton_degree(NewtonCoeffs(Modulus(6), {0, 0, 0, 1})) == 3);
}

TEST_CASE("decompose matches iterated differences, evaluation matches exact binomials") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 2000; ++trial) {
        const u64 n = 1 + rng() % 40;
        const u64 m = 1 + rng() % 64;
        std::vector<u64> values(n);
        for (auto& v : values) v = rng() % m;
        const FunctionTable f(Modulus(m), values);
        const auto coeffs = decompose(f);
        CHECK(to_vec(coeffs.coeffs()) == oracle::forward_differences(values, m));
        CHECK(oracle::evaluate_exact(to_vec(coeffs.coeffs()), m) == values);
        const u64 x = rng() % n;
        CHECK(evaluate(coeffs, x).value() == values[x]);
    }
}

TEST_CASE("round trip and uniqueness, exhaustive for n, m <= 4") {
    for (u64 n = 1; n <= 4; ++n) {
        for (u64 m = 1; m <= 4; ++m) {
            const Modulus mod(m);
            oracle::for_each_table(n, m, [&](const std::vector<u64>& t) {
                const FunctionTable f(mod, t);
                CHECK(evaluate_table(decompose(f)) == f);
                const NewtonCoeffs c(mod, t);
                CHECK(decompose(evaluate_table(c)) == c);
            });
        }
    }
}

TEST_CASE("decompose is linear") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const u64 n = 1 + rng() % 30;
        const u64 m = 1 + rng() % 64;
        const Modulus mod(m);
        std::vector<u64> f(n), g(n), sum(n);
        for (u64 i = 0; i < n; ++i) {
            f[i] = rng() % m;
            g[i] = rng() % m;
            sum[i] = (f[i] + g[i]) % m;
        }
        const auto cf = decompose(FunctionTable(mod, f));
        const auto cg = decompose(FunctionTable(mod, g));
        const auto cs = decompose(FunctionTable(mod, sum));
        for (u64 k = 0; k < n; ++k) CHECK(cs[k] == (cf[k] + cg[k]) % m);
    }
}
