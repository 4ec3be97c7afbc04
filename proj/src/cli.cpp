#include "moser/cli.hpp"

#include "moser/io.hpp"
#include "moser/moser.hpp"
#include "moser/recovery.hpp"
#include "moser/symfun.hpp"
#include "moser/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace moser {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitSTooLarge = 3;
constexpr int kExitUnsolvable = 4;
constexpr int kExitVerification = 5;

constexpr unsigned kIndexBound = 64;

struct GlobalOptions {
    std::string format = "plain";
    std::uint64_t seed = 0;
    double tol = 1e-6;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void print_rows(const std::vector<std::vector<BigInt>>& rows, const std::string& kind, unsigned first_n,
                const std::string& format) {
    if (format == "json") {
        json out;
        out["kind"] = kind;
        json values = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (const BigInt& v : row) r.push_back(to_string(v));
            values.push_back(r);
        }
        out["values"] = values;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,m,value\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t m = 0; m < rows[i].size(); ++m)
                std::cout << first_n + i << "," << m << "," << to_string(rows[i][m]) << "\n";
    } else {
        for (const auto& row : rows) {
            for (std::size_t m = 0; m < row.size(); ++m) std::cout << (m ? " " : "") << to_string(row[m]);
            std::cout << "\n";
        }
    }
}

int cmd_table(const std::string& kind, unsigned rows, unsigned s, unsigned n, unsigned k_max,
              const GlobalOptions& global) {
    if (kind == "eulerian") {
        std::vector<std::vector<BigInt>> table;
        for (unsigned r = 1; r <= rows; ++r) {
            std::vector<BigInt> row;
            for (unsigned m = 0; m < r; ++m) row.push_back(eulerian(r, m));
            table.push_back(std::move(row));
        }
        print_rows(table, kind, 1, global.format);
        return kExitOk;
    }
    if (kind == "stirling1" || kind == "stirling2") {
        std::vector<std::vector<BigInt>> table;
        for (unsigned r = 0; r < rows; ++r) {
            std::vector<BigInt> row;
            for (unsigned m = 0; m <= r; ++m)
                row.push_back(kind == "stirling1" ? stirling1_unsigned(r, m) : stirling2(r, m));
            table.push_back(std::move(row));
        }
        print_rows(table, kind, 0, global.format);
        return kExitOk;
    }
    // moser: F_{s,k}(n) for k = 1..k_max.
    std::vector<std::pair<unsigned, Rational>> values;
    for (unsigned k = 1; k <= k_max; ++k) values.emplace_back(k, moser_value(s, k, Rational(static_cast<long>(n))));
    if (global.format == "json") {
        json out{{"kind", "moser"}, {"s", s}, {"n", n}};
        json vals = json::array();
        for (const auto& [k, v] : values) vals.push_back(to_string(v));
        out["values"] = vals;
        std::cout << out.dump() << "\n";
    } else if (global.format == "csv") {
        std::cout << "k,value\n";
        for (const auto& [k, v] : values) std::cout << k << "," << to_string(v) << "\n";
    } else {
        for (const auto& [k, v] : values) std::cout << k << " " << to_string(v) << "\n";
    }
    return kExitOk;
}

int cmd_eval(unsigned s, unsigned k, const std::string& x_text, const std::string& form,
             const GlobalOptions& global) {
    Rational x = parse_rational(x_text);
    Rational value;
    if (form == "default")
        value = moser_value(s, k, x);
    else if (form == "eulerian")
        value = moser_value_eulerian_form(s, k, x);
    else if (form == "stirling1")
        value = moser_value_stirling_forms(s, k, x).first;
    else
        value = moser_value_stirling_forms(s, k, x).second;
    if (global.format == "json")
        std::cout << json{{"s", s}, {"k", k}, {"x", x_text}, {"value", to_string(value)}}.dump() << "\n";
    else if (global.format == "csv")
        std::cout << "value\n" << to_string(value) << "\n";
    else
        std::cout << to_string(value) << "\n";
    return kExitOk;
}

int cmd_qpoly(unsigned s, unsigned k, unsigned n, const GlobalOptions& global) {
    QPolynomial q = q_polynomial(s, k, n);
    if (global.format == "csv") {
        std::cout << "partition,coeff\n";
        for (const auto& [lam, coeff] : q.terms()) {
            std::string parts;
            for (unsigned p : lam.parts()) parts += (parts.empty() ? "" : "+") + std::to_string(p);
            std::cout << parts << "," << to_string(coeff) << "\n";
        }
    } else if (global.format == "plain") {
        // Readable polynomial in the power sums, e.g. "2*p[2] + p[1]^2".
        std::string line;
        for (const auto& [lam, coeff] : q.terms()) {
            std::string term;
            if (coeff != 1) term += to_string(coeff) + "*";
            unsigned run = 0;
            for (std::size_t i = 0; i < lam.parts().size(); ++i) {
                ++run;
                if (i + 1 < lam.parts().size() && lam.parts()[i + 1] == lam.parts()[i]) continue;
                term += "p[" + std::to_string(lam.parts()[i]) + "]";
                if (run > 1) term += "^" + std::to_string(run);
                run = 0;
            }
            line += (line.empty() ? "" : " + ") + term;
        }
        std::cout << (line.empty() ? "0" : line) << "\n";
    } else {
        std::cout << qpolynomial_to_json(q).dump() << "\n";
    }
    return kExitOk;
}

int cmd_sums(const std::string& input, unsigned s, const GlobalOptions& global) {
    NumberMultiset A = parse_multiset(read_input(input));
    if (s > A.size()) {
        std::cerr << "error: s = " << s << " exceeds the multiset size " << A.size() << "\n";
        return kExitSTooLarge;
    }
    NumberMultiset sums = s_sums(A, s);
    if (global.format == "json") {
        json out = json::array();
        for (const Rational& v : sums.elements()) out.push_back(to_string(v));
        std::cout << out.dump() << "\n";
    } else if (global.format == "csv") {
        std::cout << "value\n";
        for (const Rational& v : sums.elements()) std::cout << to_string(v) << "\n";
    } else {
        for (const Rational& v : sums.elements()) std::cout << to_string(v) << "\n";
    }
    return kExitOk;
}

int cmd_recover(const std::string& input, unsigned n, unsigned s, const std::string& mode,
                const GlobalOptions& global) {
    NumberMultiset S = parse_multiset(read_input(input));
    RecoveryMode m = mode == "exact" ? RecoveryMode::Exact
                                     : (mode == "numeric" ? RecoveryMode::Numeric : RecoveryMode::Auto);
    try {
        RecoveryResult result = recover(S, n, s, m, global.tol);
        std::cout << recovery_to_json(result).dump() << "\n";
        return kExitOk;
    } catch (const UnsolvableError& e) {
        json report = solvability_to_json(e.report);
        report["error"] = "unsolvable";
        std::cout << report.dump() << "\n";
        return kExitUnsolvable;
    } catch (const IrrationalRootsError& e) {
        std::cout << json{{"error", "irrational-roots"}, {"message", e.what()}}.dump() << "\n";
        return kExitVerification;
    } catch (const RootConvergenceError& e) {
        std::cout << json{{"error", "non-convergence"}, {"message", e.what()}}.dump() << "\n";
        return kExitVerification;
    } catch (const VerificationError& e) {
        std::cout << json{{"error", "verification"}, {"message", e.what()}}.dump() << "\n";
        return kExitVerification;
    }
}

int cmd_verify(const std::string& suite, unsigned trials, const GlobalOptions& global) {
    std::vector<SuiteReport> reports = run_suites(suite, trials, global.seed);
    bool all_passed = true;
    if (global.format == "json") {
        json out = json::array();
        for (const SuiteReport& report : reports) {
            json props = json::array();
            for (const PropertyResult& p : report.properties) {
                props.push_back({{"name", p.name},
                                 {"passed", p.passed},
                                 {"cases", p.cases},
                                 {"counterexample", p.counterexample}});
                all_passed = all_passed && p.passed;
            }
            out.push_back({{"suite", report.suite}, {"passed", report.all_passed()}, {"properties", props}});
        }
        std::cout << out.dump() << "\n";
    } else if (global.format == "csv") {
        std::cout << "suite,property,passed,cases,counterexample\n";
        for (const SuiteReport& report : reports)
            for (const PropertyResult& p : report.properties) {
                std::cout << report.suite << "," << p.name << "," << (p.passed ? "true" : "false") << ","
                          << p.cases << "," << p.counterexample << "\n";
                all_passed = all_passed && p.passed;
            }
    } else {
        for (const SuiteReport& report : reports) {
            for (const PropertyResult& p : report.properties) {
                if (p.passed) {
                    std::cout << "ok " << p.name << " (" << p.cases << " cases)\n";
                } else {
                    std::cout << "FAIL " << p.name << ": " << p.counterexample << "\n";
                    all_passed = false;
                }
            }
            std::cout << "suite " << report.suite << (report.all_passed() ? " passed" : " FAILED") << "\n";
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Moser polynomials, s-sum power-sum expansions, and multiset recovery"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--tol", global.tol, "Tolerance for numeric paths")->capture_default_str();

    auto* table = app.add_subcommand("table", "Print a number triangle or a Moser value table");
    std::string table_kind;
    unsigned table_rows = 8, table_s = 1, table_n = 1, table_kmax = 8;
    table->add_option("kind", table_kind, "eulerian|stirling1|stirling2|moser")
        ->required()
        ->check(CLI::IsMember({"eulerian", "stirling1", "stirling2", "moser"}));
    table->add_option("--rows", table_rows, "Rows to print (triangles)");
    table->add_option("--s", table_s, "s index (moser)");
    table->add_option("--n", table_n, "Evaluation point n (moser)");
    table->add_option("--k-max", table_kmax, "Largest k (moser)");
    table->fallthrough();

    auto* eval = app.add_subcommand("eval", "Evaluate F_{s,k}(x) exactly");
    unsigned eval_s = 1, eval_k = 1;
    std::string eval_x, eval_form = "default";
    eval->add_option("--s", eval_s)->required();
    eval->add_option("--k", eval_k)->required();
    eval->add_option("--x", eval_x, "Rational evaluation point, e.g. 7/2")->required();
    eval->add_option("--form", eval_form, "Formula to use")
        ->check(CLI::IsMember({"default", "eulerian", "stirling1", "stirling2"}));
    eval->fallthrough();

    auto* qpoly = app.add_subcommand("qpoly", "Expansion of p_k(A^(s)) in the power sums of A");
    unsigned qpoly_s = 1, qpoly_k = 1, qpoly_n = 1;
    qpoly->add_option("--s", qpoly_s)->required();
    qpoly->add_option("--k", qpoly_k)->required();
    qpoly->add_option("--n", qpoly_n)->required();
    qpoly->fallthrough();

    auto* sums = app.add_subcommand("sums", "All s-element subset sums of a multiset");
    std::string sums_input;
    unsigned sums_s = 1;
    sums->add_option("input", sums_input, "Multiset file, or - for stdin")->required();
    sums->add_option("--s", sums_s)->required();
    sums->fallthrough();

    auto* recover_cmd = app.add_subcommand("recover", "Recover a multiset from its s-sums");
    std::string recover_input, recover_mode = "auto";
    unsigned recover_n = 1, recover_s = 1;
    recover_cmd->add_option("input", recover_input, "s-sum multiset file, or - for stdin")->required();
    recover_cmd->add_option("--n", recover_n)->required();
    recover_cmd->add_option("--s", recover_s)->required();
    recover_cmd->add_option("--mode", recover_mode)->check(CLI::IsMember({"exact", "numeric", "auto"}));
    recover_cmd->fallthrough();

    auto* verify = app.add_subcommand("verify", "Run the property suites");
    std::string verify_suite = "all";
    unsigned verify_trials = 50;
    verify->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"identities", "oracle", "recovery", "all"}));
    verify->add_option("--trials", verify_trials, "Randomized cases per property");
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (*table) {
            if (table_rows < 1 || table_rows > kIndexBound || table_s < 1 || table_s > kIndexBound ||
                table_n < 1 || table_n > kIndexBound || table_kmax < 1 || table_kmax > kIndexBound) {
                std::cerr << "error: table indices must be between 1 and " << kIndexBound << "\n";
                return kExitBadParams;
            }
            if (table_kind == "moser" && (table->count("--s") == 0 || table->count("--n") == 0)) {
                std::cerr << "error: table moser requires --s and --n\n";
                return kExitBadParams;
            }
            return cmd_table(table_kind, table_rows, table_s, table_n, table_kmax, global);
        }
        if (*eval) {
            if (eval_s < 1 || eval_k < 1 || eval_s > kIndexBound || eval_k > kIndexBound) {
                std::cerr << "error: eval requires 1 <= s,k <= " << kIndexBound << "\n";
                return kExitBadParams;
            }
            return cmd_eval(eval_s, eval_k, eval_x, eval_form, global);
        }
        if (*qpoly) {
            if (qpoly_s < 1 || qpoly_k < 1 || qpoly_k > qpoly_n || qpoly_s > qpoly_n || qpoly_n > kIndexBound) {
                std::cerr << "error: qpoly requires 1 <= s <= n, 1 <= k <= n, n <= " << kIndexBound << "\n";
                return kExitBadParams;
            }
            return cmd_qpoly(qpoly_s, qpoly_k, qpoly_n, global);
        }
        if (*sums) {
            if (sums_s < 1) {
                std::cerr << "error: sums requires s >= 1\n";
                return kExitBadParams;
            }
            return cmd_sums(sums_input, sums_s, global);
        }
        if (*recover_cmd) return cmd_recover(recover_input, recover_n, recover_s, recover_mode, global);
        if (*verify) return cmd_verify(verify_suite, verify_trials, global);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitBadParams;
}

}  // namespace moser
