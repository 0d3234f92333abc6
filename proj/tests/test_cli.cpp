#include <cpf/cli.hpp>
#include <cpf/cpcheck.hpp>

#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cpf;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_values") {
    CHECK(cli::parse_values("0,3,4", Modulus(8)) == std::vector<u64>{0, 3, 4});
    CHECK(cli::parse_values("-1,9,16", Modulus(8)) == std::vector<u64>{7, 1, 0});
    CHECK_THROWS_AS(cli::parse_values("", Modulus(8)), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_values("1,,2", Modulus(8)), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_values("1, 2", Modulus(8)), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_values("1,x", Modulus(8)), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_values("1,", Modulus(8)), std::invalid_argument);
}

TEST_CASE("number theory subcommands") {
    CHECK(run_cli({"factor", "12"}).out == "12 = 2^2 * 3\n");
    CHECK(run_cli({"factor", "1"}).out == "1 = 1\n");
    CHECK(run_cli({"factor", "12", "--json"}).out == "{\"m\":12,\"factors\":[{\"p\":2,\"e\":2},{\"p\":3,\"e\":1}]}\n");
    CHECK(run_cli({"mu", "12"}).out == "mu(12) = 4\n");
    CHECK(run_cli({"--json", "mu", "8"}).out == "{\"m\":8,\"mu\":8}\n");
    CHECK(run_cli({"mu-prime", "8"}).out == "mu'(8) = 4\n");
}

TEST_CASE("lcm-table golden") {
    const auto r = run_cli({"lcm-table", "12", "--max", "11"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "Z/12Z\n"
          "k:            1,2,3,4,5,6,7,8,9,10,11\n"
          "lcm(k) mod m: 1,2,6,0,0,0,0,0,0,0,0\n"
          "lcm(k) assoc: 1,2,6,0,0,0,0,0,0,0,0\n"
          "lambda(m,k):  12,6,2,1,1,1,1,1,1,1,1\n"
          "mu(12) = 4\n");
    CHECK(run_cli({"lcm-table", "8"}).out == run_cli({"lcm-table", "8", "--max", "8"}).out);
}

TEST_CASE("decompose and eval") {
    const auto d = run_cli({"decompose", "--n", "6", "--m", "6", "--values", "0,3,4,3,0,1"});
    CHECK(d.out == "coeffs: 0,3,4,0,0,0\ndegree: 2\n");
    CHECK(run_cli({"eval", "--n", "6", "--m", "6", "--coeffs", "0,3,4,0,0,0", "--at", "2"}).out == "f(2) = 4\n");
    CHECK(run_cli({"eval", "--n", "6", "--m", "8", "--coeffs", "0,3,6,6,4,4"}).out == "values: 0,3,4,1,4,7\n");
}

TEST_CASE("json round trip through the CLI alone") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const u64 n = 1 + rng() % 12, m = 1 + rng() % 30;
        std::vector<u64> values(n);
        for (auto& v : values) v = rng() % m;
        const auto d = run_cli({"decompose", "--json", "--n", std::to_string(n), "--m", std::to_string(m), "--values",
                            cli::join(values)});
        REQUIRE(d.code == 0);
        const auto doc = nlohmann::json::parse(d.out);
        CHECK(doc["n"] == n);
        CHECK(doc["m"] == m);
        const auto coeffs = doc["coeffs"].get<std::vector<u64>>();
        std::vector<u64> rebuilt;
        for (u64 x = 0; x < n; ++x) {
            const auto e = run_cli({"eval", "--json", "--n", std::to_string(n), "--m", std::to_string(m), "--coeffs",
                                cli::join(coeffs), "--at", std::to_string(x)});
            REQUIRE(e.code == 0);
            rebuilt.push_back(nlohmann::json::parse(e.out)["value"].get<u64>());
        }
        CHECK(rebuilt == values);
        const auto whole = run_cli({"eval", "--json", "--n", std::to_string(n), "--m", std::to_string(m), "--coeffs",
                                cli::join(coeffs)});
        CHECK(nlohmann::json::parse(whole.out)["values"].get<std::vector<u64>>() == values);
    }
}

TEST_CASE("check") {
    const auto ok = run_cli({"check", "--n", "6", "--m", "8", "--values", "0,3,4,1,4,7", "--method", "both"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "direct: true\ncoeff: true\n");

    const auto bad = run_cli({"check", "--n", "4", "--m", "4", "--values", "0,0,1,0"});
    CHECK(bad.code == 1);
    CHECK(bad.out ==
          "direct: false (d=2, a=0, b=2, f(a)=0, f(b)=1)\n"
          "coeff: false (k=2, a_k=1, lcm(k) mod m=2)\n");

    const auto j = run_cli({"check", "--json", "--n", "4", "--m", "4", "--values", "0,0,1,0", "--method", "coeff"});
    CHECK(j.code == 1);
    CHECK(j.out == "{\"n\":4,\"m\":4,\"cp\":false,\"coeff\":{\"verdict\":false,\"witness\":{\"k\":2,\"a_k\":1,"
                   "\"lcm_mod\":2}}}\n");
}

TEST_CASE("check exit code equals verdict") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const u64 n = 1 + rng() % 8, m = 1 + rng() % 16;
        std::vector<u64> values(n);
        if (trial % 2 == 0) {
            const auto f = random_cp(n, Modulus(m), rng());
            values.assign(f.values().begin(), f.values().end());
        } else {
            for (auto& v : values) v = rng() % m;
        }
        const auto r = run_cli({"check", "--n", std::to_string(n), "--m", std::to_string(m), "--values", cli::join(values)});
        CHECK(r.code == (oracle::naive_is_cp(values, m) ? 0 : 1));
    }
}

TEST_CASE("count output is method independent") {
    const auto exhaustive = run_cli({"count", "--n", "6", "--m", "8", "--method", "exhaustive"});
    const auto closed = run_cli({"count", "--n", "6", "--m", "8", "--method", "closed"});
    CHECK(exhaustive.code == 0);
    CHECK(exhaustive.out == "CP(6,8) = 4096\n");
    CHECK(exhaustive.out == closed.out);
    CHECK(run_cli({"count", "--json", "--n", "6", "--m", "8"}).out == "{\"n\":6,\"m\":8,\"count\":\"4096\"}\n");
}

TEST_CASE("enumerate, random, generators") {
    CHECK(run_cli({"enumerate", "--n", "1", "--m", "3"}).out == "0\n1\n2\n");
    const auto limited = run_cli({"enumerate", "--n", "6", "--m", "8", "--limit", "2"});
    CHECK(limited.out == "0,0,0,0,0,0\n1,1,1,1,1,1\n");
    const auto doc = nlohmann::json::parse(run_cli({"enumerate", "--json", "--n", "6", "--m", "3"}).out);
    CHECK(doc["count"] == "27");
    CHECK(doc["functions"].size() == 27);

    const auto r1 = run_cli({"random", "--n", "6", "--m", "8", "--seed", "5", "--count", "3"});
    const auto r2 = run_cli({"random", "--n", "6", "--m", "8", "--seed", "5", "--count", "3"});
    CHECK(r1.out == r2.out);
    const auto lines = std::count(r1.out.begin(), r1.out.end(), '\n');
    CHECK(lines == 3);
    const auto single = run_cli({"random", "--n", "6", "--m", "8", "--seed", "6"});
    CHECK(r1.out.find(single.out) != std::string::npos);

    CHECK(run_cli({"generators", "--n", "3", "--m", "4"}).out == "k=0 lcm=1: 1,1,1\nk=1 lcm=1: 0,1,2\nk=2 lcm=2: 0,0,2\nbasis: false\n");
    CHECK(run_cli({"generators", "--n", "4", "--m", "5"}).out.ends_with("basis: true\n"));
}

TEST_CASE("usage errors exit 2 with one line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"factor", "0"},
             {"factor", "abc"},
             {"check", "--n", "3", "--m", "4", "--values", "1,2"},
             {"check", "--n", "3", "--m", "4", "--values", "1,2,x"},
             {"check", "--n", "3", "--m", "4", "--values", "1,2,3", "--method", "psychic"},
             {"check", "--n", "0", "--m", "4", "--values", "1"},
             {"decompose", "--n", "3", "--m", "0", "--values", "1,2,3"},
             {"eval", "--n", "3", "--m", "4", "--coeffs", "1,2,3", "--at", "3"},
             {"count", "--n", "3", "--m", "4", "--method", "guess"},
             {"random", "--n", "3", "--m", "4"},
         }) {
        const auto r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("budget errors exit 3") {
    CHECK(run_cli({"count", "--n", "8", "--m", "8", "--method", "exhaustive"}).code == 3);
    CHECK(run_cli({"count", "--n", "6", "--m", "8", "--method", "exhaustive", "--budget", "100"}).code == 3);
    CHECK(run_cli({"enumerate", "--n", "20", "--m", "64"}).code == 3);
    CHECK(run_cli({"enumerate", "--n", "20", "--m", "64", "--limit", "5"}).code == 0);
}

TEST_CASE("output is byte stable") {
    const std::vector<std::vector<std::string>> commands{
        {"lcm-table", "8"},
        {"check", "--n", "6", "--m", "3", "--values", "0,1,2,1,1,2"},
        {"enumerate", "--json", "--n", "4", "--m", "6"},
        {"random", "--n", "10", "--m", "36", "--seed", "77", "--count", "4"},
        {"generators", "--json", "--n", "6", "--m", "12"},
    };
    for (const auto& c : commands) {
        const auto a = run_cli(c);
        const auto b = run_cli(c);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}
