#include <cpf/cli.hpp>

#include <cpf/cpcheck.hpp>
#include <cpf/cpcount.hpp>
#include <cpf/newton.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace cpf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    bool json = false;
    u64 m = 0;
    u64 n = 0;
    u64 max_k = 0;
    bool has_max = false;
    std::string values;
    std::string coeffs;
    std::string method;
    std::optional<u64> at;
    std::optional<u64> limit;
    u64 budget = kDefaultExhaustiveBudget;
    u64 seed = 0;
    u64 count = 1;
};

Modulus make_modulus(u64 m) {
    if (m == 0) throw UsageError("modulus must be a positive integer");
    return Modulus(m);
}

std::size_t domain_size(u64 n) {
    if (n == 0) throw UsageError("--n must be a positive integer");
    return static_cast<std::size_t>(n);
}

std::vector<u64> parse_sized(std::string_view text, std::size_t n, const Modulus& mod, const char* what) {
    auto values = parse_values(text, mod);
    if (values.size() != n) {
        throw UsageError(std::string(what) + " has " + std::to_string(values.size()) +
                         " entries, expected " + std::to_string(n));
    }
    return values;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

int cmd_factor(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    if (o.json) {
        Json factors = Json::array();
        for (const auto& f : mod.factors()) factors.push_back({{"p", f.prime}, {"e", f.exponent}});
        emit(out, {{"m", mod.value()}, {"factors", factors}});
        return kExitOk;
    }
    out << mod.value() << " = ";
    if (mod.factors().empty()) out << 1;
    bool first = true;
    for (const auto& f : mod.factors()) {
        if (!first) out << " * ";
        first = false;
        out << f.prime;
        if (f.exponent > 1) out << '^' << f.exponent;
    }
    out << '\n';
    return kExitOk;
}

int cmd_mu(const Options& o, std::ostream& out, bool prime) {
    const Modulus mod = make_modulus(o.m);
    const u64 value = prime ? mu_prime(mod) : mu(mod);
    if (o.json) {
        emit(out, {{"m", mod.value()}, {prime ? "mu_prime" : "mu", value}});
    } else {
        out << (prime ? "mu'(" : "mu(") << mod.value() << ") = " << value << '\n';
    }
    return kExitOk;
}

int cmd_lcm_table(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const u64 last = o.has_max ? o.max_k : mu(mod);
    std::vector<u64> ks, lcms, assocs, lambdas;
    const auto table = unary_lcm_mod_table(last, mod);
    for (u64 k = 1; k <= last; ++k) {
        ks.push_back(k);
        lcms.push_back(table[k]);
        assocs.push_back(canonical_associate(k, mod).value());
        lambdas.push_back(lambda(mod, k));
    }
    if (o.json) {
        emit(out, {{"m", mod.value()},
                   {"k", ks},
                   {"lcm_mod", lcms},
                   {"assoc", assocs},
                   {"lambda", lambdas},
                   {"mu", mu(mod)}});
        return kExitOk;
    }
    out << "Z/" << mod.value() << "Z\n";
    out << "k:            " << join(ks) << '\n';
    out << "lcm(k) mod m: " << join(lcms) << '\n';
    out << "lcm(k) assoc: " << join(assocs) << '\n';
    out << "lambda(m,k):  " << join(lambdas) << '\n';
    out << "mu(" << mod.value() << ") = " << mu(mod) << '\n';
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    const FunctionTable f(mod, parse_sized(o.values, n, mod, "--values"));
    const NewtonCoeffs c = decompose(f);
    if (o.json) {
        emit(out, {{"n", n}, {"m", mod.value()}, {"coeffs", c.coeffs()}});
    } else {
        out << "coeffs: " << join(c.coeffs()) << '\n';
        out << "degree: " << newton_degree(c) << '\n';
    }
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    const NewtonCoeffs c(mod, parse_sized(o.coeffs, n, mod, "--coeffs"));
    if (o.at) {
        if (*o.at >= n) {
            throw UsageError("--at " + std::to_string(*o.at) + " outside [0, " + std::to_string(n) + ")");
        }
        const u64 value = evaluate(c, *o.at).value();
        if (o.json) {
            emit(out, {{"n", n}, {"m", mod.value()}, {"x", *o.at}, {"value", value}});
        } else {
            out << "f(" << *o.at << ") = " << value << '\n';
        }
        return kExitOk;
    }
    const FunctionTable f = evaluate_table(c);
    if (o.json) {
        emit(out, {{"n", n}, {"m", mod.value()}, {"values", f.values()}});
    } else {
        out << "values: " << join(f.values()) << '\n';
    }
    return kExitOk;
}

Json witness_json(const CpReport& r) {
    if (const auto* w = r.direct_witness()) {
        return {{"d", w->divisor}, {"a", w->a}, {"b", w->b}, {"fa", w->fa}, {"fb", w->fb}};
    }
    if (const auto* w = r.coeff_witness()) {
        return {{"k", w->index}, {"a_k", w->coeff}, {"lcm_mod", w->lcm_mod}};
    }
    return nullptr;
}

std::string witness_text(const CpReport& r) {
    std::ostringstream s;
    if (const auto* w = r.direct_witness()) {
        s << " (d=" << w->divisor << ", a=" << w->a << ", b=" << w->b << ", f(a)=" << w->fa
          << ", f(b)=" << w->fb << ")";
    } else if (const auto* w = r.coeff_witness()) {
        s << " (k=" << w->index << ", a_k=" << w->coeff << ", lcm(k) mod m=" << w->lcm_mod << ")";
    }
    return s.str();
}

int cmd_check(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    const std::string method = o.method.empty() ? "both" : o.method;
    if (method != "direct" && method != "coeff" && method != "both") {
        throw UsageError("--method must be direct, coeff or both");
    }
    const FunctionTable f(mod, parse_sized(o.values, n, mod, "--values"));
    std::vector<CpReport> reports;
    if (method != "coeff") reports.push_back(is_cp_direct(f));
    if (method != "direct") reports.push_back(is_cp_coeff(f));
    bool cp = true;
    for (const auto& r : reports) cp = cp && r.verdict();

    if (o.json) {
        Json doc = {{"n", n}, {"m", mod.value()}, {"cp", cp}};
        for (const auto& r : reports) {
            doc[to_string(r.method())] = {{"verdict", r.verdict()}, {"witness", witness_json(r)}};
        }
        emit(out, doc);
    } else {
        for (const auto& r : reports) {
            out << to_string(r.method()) << ": " << (r.verdict() ? "true" : "false") << witness_text(r)
                << '\n';
        }
    }
    return cp ? kExitOk : kExitNotCp;
}

int cmd_count(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    const auto method = parse_count_method(o.method.empty() ? "product" : o.method);
    if (!method) throw UsageError("--method must be product, closed or exhaustive");
    const CpCount count = cp_count(n, mod, *method, o.budget);
    if (o.json) {
        emit(out, {{"n", n}, {"m", mod.value()}, {"count", count.value.str()}});
    } else {
        out << "CP(" << n << "," << mod.value() << ") = " << count.value << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    CpEnumeration stream(n, mod);
    BigNat wanted = stream.count();
    if (o.limit && wanted > *o.limit) wanted = *o.limit;
    if (wanted > o.budget) {
        throw BudgetExceeded("enumeration of " + wanted.str() + " functions exceeds budget " +
                                 std::to_string(o.budget),
                             wanted, o.budget);
    }
    const u64 emit_count = wanted.convert_to<u64>();
    Json functions = Json::array();
    for (u64 i = 0; i < emit_count; ++i) {
        const auto f = stream.next();
        if (!f) break;
        if (o.json) {
            functions.push_back(f->values());
        } else {
            out << join(f->values()) << '\n';
        }
    }
    if (o.json) {
        emit(out, {{"n", n}, {"m", mod.value()}, {"count", stream.count().str()}, {"functions", functions}});
    }
    return kExitOk;
}

int cmd_random(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    Json functions = Json::array();
    for (u64 i = 0; i < o.count; ++i) {
        const FunctionTable f = random_cp(n, mod, o.seed + i);
        if (o.json) {
            functions.push_back(f.values());
        } else {
            out << join(f.values()) << '\n';
        }
    }
    if (o.json) {
        emit(out, {{"n", n}, {"m", mod.value()}, {"seed", o.seed}, {"functions", functions}});
    }
    return kExitOk;
}

int cmd_generators(const Options& o, std::ostream& out) {
    const Modulus mod = make_modulus(o.m);
    const std::size_t n = domain_size(o.n);
    const auto family = generator_family(n, mod);
    const auto lcms = unary_lcm_mod_table(family.size(), mod);
    const bool basis = is_basis(n, mod);
    if (o.json) {
        Json gens = Json::array();
        for (std::size_t k = 0; k < family.size(); ++k) {
            gens.push_back({{"k", k}, {"lcm_mod", lcms[k]}, {"values", family[k].values()}});
        }
        emit(out, {{"n", n}, {"m", mod.value()}, {"mu", mu(mod)}, {"basis", basis}, {"generators", gens}});
        return kExitOk;
    }
    for (std::size_t k = 0; k < family.size(); ++k) {
        out << "k=" << k << " lcm=" << lcms[k] << ": " << join(family[k].values()) << '\n';
    }
    out << "basis: " << (basis ? "true" : "false") << '\n';
    return kExitOk;
}

void add_table_options(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "domain size n")->required();
    sub->add_option("--m", o.m, "codomain modulus m")->required();
}

}  // namespace

std::vector<u64> parse_values(std::string_view text, const Modulus& mod) {
    if (text.empty()) throw std::invalid_argument("empty value list");
    std::vector<u64> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        if (item.empty()) throw std::invalid_argument("empty entry in value list");
        const char* first = item.data();
        const char* last = item.data() + item.size();
        if (item.front() == '-') {
            std::int64_t v = 0;
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last) {
                throw std::invalid_argument("bad integer '" + std::string(item) + "'");
            }
            out.push_back(mod.residue_signed(v).value());
        } else {
            u64 v = 0;
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last) {
                throw std::invalid_argument("bad integer '" + std::string(item) + "'");
            }
            out.push_back(mod.reduce(v));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join(std::span<const u64> values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Congruence preserving functions Z/nZ -> Z/mZ", "cpf"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "print one JSON document");

    auto* factor = app.add_subcommand("factor", "prime factorization of M");
    auto* mu_cmd = app.add_subcommand("mu", "largest prime power dividing M");
    auto* mu_prime_cmd = app.add_subcommand("mu-prime", "least k with M | k!");
    auto* lcm_table = app.add_subcommand("lcm-table", "lcm(k) mod M, associates and subgroup orders");
    for (auto* sub : {factor, mu_cmd, mu_prime_cmd, lcm_table}) {
        sub->add_option("M", o.m, "modulus")->required();
    }
    lcm_table->add_option("--max", o.max_k, "largest k (default mu(M))");

    auto* decompose_cmd = app.add_subcommand("decompose", "Newton coefficients of a value table");
    add_table_options(decompose_cmd, o);
    decompose_cmd->add_option("--values", o.values, "v0,v1,...")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate sum a_k P_k");
    add_table_options(eval_cmd, o);
    eval_cmd->add_option("--coeffs", o.coeffs, "a0,a1,...")->required();
    eval_cmd->add_option("--at", o.at, "point x in [0, n); all points when omitted");

    auto* check_cmd = app.add_subcommand("check", "decide congruence preservation");
    add_table_options(check_cmd, o);
    check_cmd->add_option("--values", o.values, "v0,v1,...")->required();
    check_cmd->add_option("--method", o.method, "direct|coeff|both");

    auto* count_cmd = app.add_subcommand("count", "number of CP functions");
    add_table_options(count_cmd, o);
    count_cmd->add_option("--method", o.method, "product|closed|exhaustive");
    count_cmd->add_option("--budget", o.budget, "max tables for exhaustive");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list every CP function");
    add_table_options(enumerate_cmd, o);
    enumerate_cmd->add_option("--limit", o.limit, "stop after L functions");
    enumerate_cmd->add_option("--budget", o.budget, "max functions to emit");

    auto* random_cmd = app.add_subcommand("random", "seeded random CP functions");
    add_table_options(random_cmd, o);
    random_cmd->add_option("--seed", o.seed, "64-bit seed")->required();
    random_cmd->add_option("--count", o.count, "number of samples (seeds S, S+1, ...)");

    auto* generators_cmd = app.add_subcommand("generators", "tables of lcm(k) P_k");
    add_table_options(generators_cmd, o);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    o.has_max = lcm_table->count("--max") > 0;

    try {
        if (factor->parsed()) return cmd_factor(o, out);
        if (mu_cmd->parsed()) return cmd_mu(o, out, false);
        if (mu_prime_cmd->parsed()) return cmd_mu(o, out, true);
        if (lcm_table->parsed()) return cmd_lcm_table(o, out);
        if (decompose_cmd->parsed()) return cmd_decompose(o, out);
        if (eval_cmd->parsed()) return cmd_eval(o, out);
        if (check_cmd->parsed()) return cmd_check(o, out);
        if (count_cmd->parsed()) return cmd_count(o, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
        if (random_cmd->parsed()) return cmd_random(o, out);
        if (generators_cmd->parsed()) return cmd_generators(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace cpf::cli
