#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "aqfock/measure_io.hpp"
#include "aqfock/radial.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AQFOCK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t nl = s.find('\n', pos);
        lines.push_back(s.substr(pos, nl - pos));
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("measure: q = 0 emits the two-atom law") {
    const RunResult r = run_cli("measure --alpha -0.5 --q 0");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("schema") == "aqfock/1");
    CHECK(j.at("branch") == "Q_ZERO");
    REQUIRE(j.at("atoms").size() == 2);
    CHECK(j["atoms"][0]["r"].get<double>() == 0.0);
    CHECK(j["atoms"][0]["w"].get<double>() == doctest::Approx(0.5));
    CHECK(j["atoms"][1]["r"].get<double>() == 1.0);
    CHECK(j["atoms"][1]["w"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("measure: non-existence is exit code 2, --force overrides for q >= 0") {
    CHECK(run_cli("measure --alpha 0.5 --q 0.2").exit_code == 2);

    const RunResult forced = run_cli("measure --alpha 0.5 --q 0.2 --force");
    REQUIRE(forced.exit_code == 0);
    const json j = json::parse(forced.out);
    CHECK(j.contains("warning"));
    CHECK(j.at("exists") == false);
    double min_w = 0.0;
    for (const auto& a : j.at("atoms")) min_w = std::min(min_w, a.at("w").get<double>());
    CHECK(min_w < -1e-6);

    // q < 0: not even a signed construction; --force still refuses
    CHECK(run_cli("measure --alpha 0.2 --q -0.4 --force").exit_code == 2);
}

TEST_CASE("measure: alpha = q < 0 atoms sit at (1-q)^{-1/2} |q|^n") {
    const RunResult r = run_cli("measure --alpha -0.3 --q -0.3 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() > 3);
    CHECK(rows[0] == "r,w");
    // last row is the largest atom, position (1-q)^{-1/2}
    const std::string& top = rows.back();
    const double r_top = std::stod(top.substr(0, top.find(',')));
    CHECK(r_top == doctest::Approx(1.0 / std::sqrt(1.3)).epsilon(1e-12));
}

TEST_CASE("measure: --t applies the t-deformation and round-trips through JSON") {
    const RunResult r = run_cli("measure --alpha -0.5 --q 0.5 --t 2");
    REQUIRE(r.exit_code == 0);
    aqfock::QParams p(0.0, 0.0);
    const auto mu = aqfock::measure_from_json(json::parse(r.out), &p);
    const auto want = aqfock::t_deform(aqfock::radial_measure(aqfock::QParams(-0.5, 0.5)), 2.0);
    CHECK(mu == want);
    CHECK(p.alpha == -0.5);

    CHECK(run_cli("measure --alpha -0.5 --q 0.5 --t 0.5").exit_code == 64);
}

TEST_CASE("classify") {
    const json j = json::parse(run_cli("classify --alpha -0.5 --q 0.5").out);
    CHECK(j.at("exists") == true);
    CHECK(j.at("branch") == "Q_POS_ALPHA_LT");
    CHECK(json::parse(run_cli("classify --alpha 0.5 --q 0.2").out).at("exists") == false);
    CHECK(run_cli("classify --alpha 2 --q 0.5").exit_code == 64);
}

TEST_CASE("moments emits the tridiagonal table") {
    const RunResult r = run_cli("moments --alpha -0.4 --q 0.3 --kmax 4 --format csv");
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "k,moment");
    CHECK(rows[1] == "0,1");
    CHECK(std::stod(rows[3].substr(2)) == doctest::Approx(0.6));
    CHECK(std::stod(rows[5].substr(2)) == doctest::Approx(1.0464));
}

TEST_CASE("density emits an interior grid") {
    const RunResult r = run_cli("density --alpha -0.5 --q 0.5 --grid 50");
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 51);
    CHECK(rows[0] == "x,density");
    const double hi = 2.0 / std::sqrt(0.5);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto comma = rows[i].find(',');
        const double x = std::stod(rows[i].substr(0, comma));
        const double f = std::stod(rows[i].substr(comma + 1));
        CHECK(x > -hi);
        CHECK(x < hi);
        CHECK(f >= 0.0);
    }
}

TEST_CASE("typeb comparison table") {
    const RunResult r = run_cli("typeb --n 3 --alpha -0.4 --q 0.3");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    CHECK(rows[0] == "check,k,value,reference,residual");
    int gram_rows = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& line = rows[i];
        const auto last = line.rfind(',');
        CHECK(std::stod(line.substr(last + 1)) <= 1e-10);
        if (line.rfind("gram_diag", 0) == 0) ++gram_rows;
    }
    CHECK(gram_rows == 4);  // k = 0..3
}

TEST_CASE("sweep grid") {
    const RunResult r = run_cli("sweep --grid 5");
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == "alpha,q,exists,branch,min_weight");
    int checked = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::vector<std::string> cells;
        std::size_t pos = 0;
        const std::string& line = rows[i];
        while (true) {
            const auto comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        REQUIRE(cells.size() == 5);
        const double q = std::stod(cells[1]);
        const bool exists = cells[2] == "true";
        if (cells[4] != "nan") {
            const double min_w = std::stod(cells[4]);
            // min_weight < 0 exactly where exists = false and q >= 0
            if (q >= 0.0) CHECK((min_w < 0.0) == !exists);
            ++checked;
        } else {
            CHECK((q < 0.0 && !exists));
        }
    }
    CHECK(checked > 10);

    SUBCASE("center cell is the semicircle point mass") {
        bool found = false;
        for (const auto& line : lines_of(run_cli("sweep --grid 3").out))
            if (line.rfind("0,0,", 0) == 0) {
                found = true;
                CHECK(line.find("true") != std::string::npos);
                CHECK(line.find("Q_ZERO") != std::string::npos);
            }
        CHECK(found);
    }
    CHECK(run_cli("sweep --grid 5 --alpha-min -0.99").exit_code == 64);
}

TEST_CASE("sweep output is deterministic") {
    const std::string a = run_cli("sweep --grid 7").out;
    const std::string b = run_cli("sweep --grid 7").out;
    CHECK(a == b);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --suite qcalc").exit_code == 0);
    CHECK(run_cli("verify --suite bogus").exit_code == 64);
    const RunResult r = run_cli("verify --suite fock1 --dim 16");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out)[0] == "check,dim,residual,threshold,status");
}

TEST_CASE("AQFOCK_PRECISION=extended is honored") {
    const std::string cmd = "AQFOCK_PRECISION=extended " + std::string(AQFOCK_CLI_PATH) +
                            " measure --alpha -0.5 --q 0.5 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    const auto mu = aqfock::measure_from_json(json::parse(out));
    // extended accumulation agrees with the double path to double roundoff
    const auto ref = aqfock::radial_measure(aqfock::QParams(-0.5, 0.5));
    REQUIRE(mu.size() == ref.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        CHECK(std::abs(mu.atoms()[i].w - ref.atoms()[i].w) <= 1e-14 * std::max(1.0, std::abs(ref.atoms()[i].w)));
}

TEST_CASE("usage errors") {
    CHECK(run_cli("measure --q 0.5").exit_code == 64);          // missing --alpha
    CHECK(run_cli("measure --alpha 1.5 --q 0").exit_code == 64);
    CHECK(run_cli("nonsense").exit_code == 64);
}
