#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spinkostka/format.hpp"
#include "spinkostka/verify.hpp"

using namespace spinkostka;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::string kGolden = SPINKOSTKA_GOLDEN_DIR;

} // namespace

TEST_CASE("halved tables match the golden fixtures byte for byte") {
    CHECK(render_table(spin_kostka_rendered(3, true), TableFormat::Text) ==
          slurp(kGolden + "/spin_kostka_n3_halved.txt"));
    CHECK(render_table(spin_kostka_rendered(4, true), TableFormat::Text) ==
          slurp(kGolden + "/spin_kostka_n4_halved.txt"));
}

TEST_CASE("table rendering variants") {
    const RenderedTable t1 = spin_kostka_rendered(1, true);
    CHECK(render_table(t1, TableFormat::Text) == "xi\\mu\t[1]\n[1]\t1\n");
    CHECK(render_table(t1, TableFormat::Csv) == "xi\\mu,[1]\n[1],1\n");

    const std::string j = render_table(spin_kostka_rendered(3, true), TableFormat::Json);
    const json parsed = json::parse(j);
    CHECK(parsed.at("n") == 3);
    CHECK(parsed.at("halved") == true);
    CHECK(parsed.at("rows") == json::parse(R"(["[3]","[2,1]"])"));
    CHECK(parsed.at("entries")[1][2] == "t+t^2");

    const std::string l = render_table(spin_kostka_rendered(3, true), TableFormat::Latex);
    CHECK(l.find("\\begin{array}{cccc}") != std::string::npos);
    CHECK(l.find("xi\\mu & (3) & (2,1) & (1^3)") != std::string::npos);
    CHECK(l.find("(2,1) & 0 & 1 & t+t^2") != std::string::npos);

    // unhalved table carries the 2-power factors
    const RenderedTable full = spin_kostka_rendered(3, false);
    CHECK(full.cells[1][2] == "4*t+4*t^2");
    CHECK_THROWS_AS(table_format_from_string("yaml"), std::invalid_argument);
}

TEST_CASE("qt table rendering") {
    const RenderedTable spin = qt_kostka_rendered(2, true, false);
    CHECK(spin.row_labels == std::vector<std::string>{"[2]"});
    CHECK(spin.cells[0][0] == "2+2*q");
    CHECK(spin.cells[0][1] == "2+2*t");
    const RenderedTable classical = qt_kostka_rendered(2, false, false);
    CHECK(classical.cells[0][0] == "1");
    CHECK(classical.cells[0][1] == "t");
    CHECK(classical.cells[1][0] == "q");
    const json parsed =
        json::parse(render_table(qt_kostka_rendered(2, false, false), TableFormat::Json));
    CHECK(parsed.at("table") == "qt-kostka");
}

TEST_CASE("partition labels") {
    CHECK(partition_latex_label(Partition{1, 1, 1, 1}) == "(1^4)");
    CHECK(partition_latex_label(Partition{2, 1, 1}) == "(2,1,1)");
    CHECK(partition_latex_label(Partition{2, 2}) == "(2,2)");
    CHECK(partition_latex_label(Partition()) == "()");
    CHECK(partition_latex_label(Partition{4}) == "(4)");
}

TEST_CASE("partition argument parsing") {
    CHECK(parse_parts("2,1") == std::vector<int>{2, 1});
    CHECK(parse_parts("[2,1]") == std::vector<int>{2, 1});
    CHECK(parse_parts("(3)") == std::vector<int>{3});
    CHECK(parse_parts("").empty());
    CHECK(parse_parts("[]").empty());
    CHECK_THROWS(parse_parts("2,x"));
}

TEST_CASE("expansion strings used by the expand command") {
    CHECK(to_basis(schur_Q(StrictPartition{2, 1}), Basis::Schur).str() == "4*s[2,1]");
    CHECK(to_basis(S_det(Partition{1, 1}), Basis::PowerSum).str() == "2*p[1,1]");
    CHECK(q_fun(0).str() == "1");
    CHECK(to_basis(hl_H(Partition{1, 1}), Basis::Schur).str() == "t*s[2] + s[1,1]");
}

TEST_CASE("verification reports are deterministic and well formed") {
    const SuiteReport a = run_suite("negative-4.4", 3);
    const SuiteReport b = run_suite("negative-4.4", 3);
    CHECK(a.pass());
    CHECK(a.to_json().dump() == b.to_json().dump());

    const SuiteReport small = run_suite("A", 3);
    CHECK(small.pass());
    const json j = small.to_json();
    CHECK(j.at("suite") == "A");
    CHECK(j.at("pass") == true);
    for (auto& c : j.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
        CHECK(c.contains("details"));
    }

    const SuiteReport scan = run_suite("q4.8", 3);
    CHECK(scan.pass());  // informational entries never fail
    bool has_info = false;
    for (auto& c : scan.checks)
        if (c.status == CheckStatus::Info) has_info = true;
    CHECK(has_info);

    CHECK_THROWS_AS(run_suite("A", 9), std::invalid_argument);    // above the cap
    CHECK_THROWS_AS(run_suite("qt", 6), std::invalid_argument);   // above the cap
    CHECK_THROWS_AS(run_suite("nope", 3), std::invalid_argument);
}
