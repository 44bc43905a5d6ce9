// spin-kostka: exact tables, expansions and verification suites for
// spin Kostka polynomials and their relatives.
//
// Exit codes: 0 success, 1 assertion/verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinkostka/format.hpp"
#include "spinkostka/serialize.hpp"
#include "spinkostka/verify.hpp"

using namespace spinkostka;

namespace {

int output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with spin Kostka polynomials, Schur Q-functions,\n"
                 "(spin) Hall-Littlewood functions and (spin) q,t-Kostka polynomials."};
    app.require_subcommand(1);

    // ---- table ----
    int table_n = 3;
    bool table_halved = false;
    std::string table_format = "text", table_out;
    auto* table = app.add_subcommand("table", "Print the spin Kostka matrix K^-(t) for degree n");
    table->add_option("--n", table_n, "degree (0..8)")->required();
    table->add_flag("--halved", table_halved, "print 2^{-l(xi)} K^-_{xi mu}(t)");
    table->add_option("--format", table_format, "text|csv|json|latex");
    table->add_option("--output", table_out, "write to file instead of stdout");

    // ---- qt-table ----
    int qt_n = 3;
    bool qt_spin = false, qt_classical = false, qt_halved = false;
    std::string qt_format = "text", qt_out;
    auto* qtable = app.add_subcommand("qt-table", "Print a q,t-Kostka matrix for degree n");
    qtable->add_option("--n", qt_n, "degree (0..5)")->required();
    qtable->add_flag("--spin", qt_spin, "spin table (rows are strict partitions)");
    qtable->add_flag("--classical", qt_classical, "classical table (rows are all partitions)");
    qtable->add_flag("--halved", qt_halved, "with --spin: print 2^{-l(xi)} K^-_{xi mu}(q,t)");
    qtable->add_option("--format", qt_format, "text|csv|json|latex");
    qtable->add_option("--output", qt_out, "write to file instead of stdout");

    // ---- verify ----
    int verify_n = 4;
    std::string verify_suite, verify_out;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
    verify->add_option("--suite", verify_suite,
                       "A | 2.2 | oracles | 4.3 | B1 | qt | negative-4.4 | q4.8 | all")
        ->required();
    verify->add_option("--n", verify_n, "degree bound for the suite");
    verify->add_option("--output", verify_out, "write report to file instead of stdout");

    // ---- expand ----
    std::string exp_what, exp_arg, exp_basis = "s";
    auto* expand = app.add_subcommand("expand", "Expand a symmetric function in a basis");
    expand->add_option("--what", exp_what, "Q | Hminus | S | P | H | q")->required();
    expand->add_option("--arg", exp_arg, "partition, e.g. 2,1 (or a single integer for q)")
        ->required();
    expand->add_option("--basis", exp_basis, "s|m|p|e|h");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) {
            if (table_n < 0 || table_n > 8) {
                std::cerr << "table: --n must be in 0..8\n";
                return 2;
            }
            return output(render_table(spin_kostka_rendered(table_n, table_halved),
                                       table_format_from_string(table_format)),
                          table_out);
        }
        if (*qtable) {
            if (qt_spin == qt_classical) {
                std::cerr << "qt-table: pass exactly one of --spin / --classical\n";
                return 2;
            }
            if (qt_n < 0 || qt_n > 5) {
                std::cerr << "qt-table: --n must be in 0..5\n";
                return 2;
            }
            return output(render_table(qt_kostka_rendered(qt_n, qt_spin, qt_halved),
                                       table_format_from_string(qt_format)),
                          qt_out);
        }
        if (*verify) {
            json reports = json::array();
            bool all_pass = true;
            const std::vector<std::string> names =
                verify_suite == "all"
                    ? std::vector<std::string>{"2.2", "oracles", "A", "4.3", "B1",
                                               "qt", "negative-4.4", "q4.8"}
                    : std::vector<std::string>{verify_suite};
            for (auto& name : names) {
                int n = verify_n;
                // per-suite caps when running the whole battery
                if (verify_suite == "all") {
                    if (name == "oracles" || name == "4.3") n = std::min(n, 6);
                    if (name == "qt") n = std::min(n, 5);
                    n = std::min(n, 8);
                }
                SuiteReport rep = run_suite(name, n);
                reports.push_back(rep.to_json());
                all_pass = all_pass && rep.pass();
            }
            json doc{{"envelope", {{"tool", "spin-kostka"}, {"report_format", 1}}},
                     {"reports", reports}};
            int rc = output(doc.dump(2) + "\n", verify_out);
            if (rc != 0) return rc;
            return all_pass ? 0 : 1;
        }
        if (*expand) {
            const Basis basis = basis_from_letter(exp_basis.size() == 1 ? exp_basis[0] : '?');
            std::string text;
            if (exp_what == "q") {
                // q_r for an integer r, q_lambda for a partition
                const std::vector<int> parts = parse_parts(exp_arg);
                SymFunc<Rational> f =
                    parts.size() == 1 ? q_fun(parts[0]) : q_fun(Partition(parts));
                text = to_basis(f, basis).str();
            } else if (exp_what == "Q") {
                text = to_basis(schur_Q(StrictPartition(parse_parts(exp_arg))), basis).str();
            } else if (exp_what == "S") {
                text = to_basis(S_det(Partition(parse_parts(exp_arg))), basis).str();
            } else if (exp_what == "Hminus") {
                text = to_basis(spin_hl_H(Partition(parse_parts(exp_arg))), basis).str();
            } else if (exp_what == "H") {
                text = to_basis(hl_H(Partition(parse_parts(exp_arg))), basis).str();
            } else if (exp_what == "P") {
                text = to_basis(hl_P(Partition(parse_parts(exp_arg))), basis).str();
            } else {
                std::cerr << "expand: unknown --what " << exp_what << "\n";
                return 2;
            }
            std::cout << text << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal assertion failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
