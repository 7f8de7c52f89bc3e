#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dioph/exact_arith.hpp"
#include "dioph/instance_gen.hpp"
#include "dioph/oracle.hpp"
#include "dioph/solver.hpp"

namespace {

using dioph::Integer;
using nlohmann::json;

constexpr int kExitVerifyFalse = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitMagnitude = 3;
constexpr int kExitCertifyMismatch = 4;

struct CliError {
    int code;
    std::string message;
};

Integer parse_integer(const std::string& text) {
    Integer value;
    if (value.set_str(text, 10) != 0) {
        throw CliError{kExitInvalidInput, "not a decimal integer: " + text};
    }
    return value;
}

std::string provenance_string(const dioph::Provenance& prov) {
    if (std::holds_alternative<dioph::TrivialTag>(prov)) return "trivial";
    if (const auto* z = std::get_if<dioph::ZetaTag>(&prov)) {
        return "zeta:" + z->zeta.get_str();
    }
    return "oracle:" + std::get<dioph::OracleTag>(prov).divisor.get_str();
}

// Integers go out as decimal strings; a is near p^2 q^2 and would not
// survive a double round trip.
json record_json(const dioph::Solution& s) {
    json rec;
    rec["a"] = s.a.get_str();
    rec["b"] = s.b.get_str();
    rec["provenance"] = provenance_string(s.provenance);
    rec["k"] = s.k ? json(s.k->get_str()) : json(nullptr);
    return rec;
}

void print_records(const dioph::SolutionSet& set, const Integer& num, const Integer& den,
                   const std::string& format) {
    if (format == "tsv") {
        for (const dioph::Solution& s : set.solutions) {
            std::cout << s.a << '\t' << s.b << '\t' << provenance_string(s.provenance) << '\t'
                      << (s.k ? s.k->get_str() : "-") << '\n';
        }
        return;
    }
    json doc;
    if (set.pair) {
        doc["p"] = set.pair->p.get_str();
        doc["q"] = set.pair->q.get_str();
    }
    doc["target"] = {{"num", num.get_str()}, {"den", den.get_str()}};
    doc["solutions"] = json::array();
    for (const dioph::Solution& s : set.solutions) doc["solutions"].push_back(record_json(s));
    std::cout << doc.dump(2) << '\n';
}

dioph::PrimePair validated_pair_or_throw(const std::string& p_text, const std::string& q_text) {
    auto result = dioph::validate_pair(parse_integer(p_text), parse_integer(q_text));
    if (const auto* err = std::get_if<dioph::PairError>(&result)) {
        int code = (*err == dioph::PairError::UnsupportedMagnitude) ? kExitMagnitude
                                                                    : kExitInvalidInput;
        throw CliError{code, dioph::to_string(*err)};
    }
    return std::get<dioph::PrimePair>(result);
}

dioph::Factorization parse_factors(const std::string& text) {
    // "2^1,1009^1"
    dioph::Factorization factors;
    std::stringstream stream(text);
    std::string term;
    while (std::getline(stream, term, ',')) {
        auto caret = term.find('^');
        std::string base = term.substr(0, caret);
        unsigned exponent = 1;
        if (caret != std::string::npos) {
            exponent = static_cast<unsigned>(std::stoul(term.substr(caret + 1)));
        }
        if (base.empty() || exponent == 0) {
            throw CliError{kExitInvalidInput, "malformed factor term: " + term};
        }
        factors.emplace_back(parse_integer(base), exponent);
    }
    if (factors.empty()) throw CliError{kExitInvalidInput, "empty factor list"};
    return factors;
}

int run_solve(const std::string& p_text, const std::string& q_text, bool positive_only,
              bool no_certify, const std::string& format) {
    dioph::PrimePair pair = validated_pair_or_throw(p_text, q_text);
    dioph::SolutionSet full = dioph::solve(pair, false);
    if (!no_certify) {
        dioph::CertificationReport report = dioph::certify(pair, full);
        if (!report.match) {
            std::cerr << "certification mismatch: closed form " << report.closed_form_count
                      << " vs oracle " << report.oracle_count << " solutions\n";
            for (const auto& [a, b] : report.missing) {
                std::cerr << "  missing (" << a << ", " << b << ")\n";
            }
            for (const auto& [a, b] : report.extra) {
                std::cerr << "  extra (" << a << ", " << b << ")\n";
            }
            return kExitCertifyMismatch;
        }
    }
    dioph::SolutionSet out = positive_only ? dioph::solve(pair, true) : std::move(full);
    print_records(out, pair.q_plus_1, pair.pq, format);
    return 0;
}

int run_oracle(const std::string& num_text, const std::string& den_text,
               const std::string& factors_text, const std::string& format) {
    Integer num = parse_integer(num_text);
    Integer den = parse_integer(den_text);
    if (num <= 0 || den <= 0) throw CliError{kExitInvalidInput, "num and den must be positive"};
    std::optional<dioph::Factorization> factors;
    if (!factors_text.empty()) factors = parse_factors(factors_text);
    try {
        dioph::OracleInstance inst = dioph::build_instance(num, den, factors);
        print_records(dioph::enumerate_all(inst), inst.target.num(), inst.target.den(), format);
    } catch (const dioph::FactorizationOutOfRange& e) {
        throw CliError{kExitMagnitude, e.what()};
    }
    return 0;
}

int run_verify(const std::string& p_text, const std::string& q_text, const std::string& a_text,
               const std::string& b_text) {
    dioph::PrimePair pair = validated_pair_or_throw(p_text, q_text);
    Integer a = parse_integer(a_text);
    Integer b = parse_integer(b_text);
    if (a == 0) {
        std::cerr << "a must be nonzero\n";
        return kExitVerifyFalse;
    }
    if (b == 0) {
        std::cerr << "b must be nonzero\n";
        return kExitVerifyFalse;
    }
    Integer lhs = pair.pq * (a + b);
    Integer rhs = pair.q_plus_1 * a * b;
    std::cout << "pq*(a+b) = " << lhs << '\n' << "(q+1)*a*b = " << rhs << '\n';
    return dioph::verify_solution(pair, a, b) ? 0 : kExitVerifyFalse;
}

int run_certify(const std::string& p_text, const std::string& q_text) {
    dioph::PrimePair pair = validated_pair_or_throw(p_text, q_text);
    dioph::CertificationReport report = dioph::certify(pair, dioph::solve(pair, false));
    std::cout << (report.match ? "match" : "MISMATCH") << ", closed form "
              << report.closed_form_count << " = oracle " << report.oracle_count << '\n';
    return report.match ? 0 : kExitCertifyMismatch;
}

int run_search(const std::string& q_text, const std::string& min_text, const std::string& max_text,
               std::size_t limit) {
    Integer q = parse_integer(q_text);
    if (!dioph::is_prime(q)) throw CliError{kExitInvalidInput, "q is not prime"};
    dioph::SearchQuery query{q, parse_integer(min_text), parse_integer(max_text), limit};
    std::vector<dioph::PrimePair> pairs;
    try {
        pairs = dioph::find_pairs(query);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitInvalidInput, e.what()};
    }
    for (const dioph::PrimePair& pair : pairs) std::cout << pair.p << ' ' << pair.q << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer solutions of 1/a + 1/b = (q+1)/(pq) for distinct primes p, q"};
    app.require_subcommand(1);

    std::string p_text, q_text, a_text, b_text, num_text, den_text, factors_text;
    std::string min_text, max_text;
    std::string format = "json";
    bool positive_only = false;
    bool no_certify = false;
    std::size_t limit = 1000;

    auto* solve = app.add_subcommand("solve", "Closed-form solution set for a prime pair");
    solve->add_option("--p", p_text)->required();
    solve->add_option("--q", q_text)->required();
    solve->add_flag("--positive-only", positive_only);
    solve->add_flag("--no-certify", no_certify);
    solve->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration for 1/a + 1/b = n/d");
    oracle->add_option("--num", num_text)->required();
    oracle->add_option("--den", den_text)->required();
    oracle->add_option("--factors", factors_text, "Factorization of den, e.g. 2^1,1009^1");
    oracle->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* verify = app.add_subcommand("verify", "Check pq*(a+b) = (q+1)*a*b for one pair");
    verify->add_option("--p", p_text)->required();
    verify->add_option("--q", q_text)->required();
    verify->add_option("--a", a_text)->required();
    verify->add_option("--b", b_text)->required();

    auto* certify = app.add_subcommand("certify", "Solver vs oracle set equality for a prime pair");
    certify->add_option("--p", p_text)->required();
    certify->add_option("--q", q_text)->required();

    auto* search = app.add_subcommand("search", "Primes p with q+1 | p-1 in a range");
    search->add_option("--q", q_text)->required();
    search->add_option("--min", min_text)->required();
    search->add_option("--max", max_text)->required();
    search->add_option("--limit", limit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (solve->parsed()) return run_solve(p_text, q_text, positive_only, no_certify, format);
        if (oracle->parsed()) return run_oracle(num_text, den_text, factors_text, format);
        if (verify->parsed()) return run_verify(p_text, q_text, a_text, b_text);
        if (certify->parsed()) return run_certify(p_text, q_text);
        if (search->parsed()) return run_search(q_text, min_text, max_text, limit);
    } catch (const CliError& e) {
        std::cerr << e.message << '\n';
        return e.code;
    } catch (const dioph::UnsupportedMagnitude& e) {
        std::cerr << e.what() << '\n';
        return kExitMagnitude;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
