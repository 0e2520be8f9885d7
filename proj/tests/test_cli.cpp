// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.output.append(buf, n);
    }
    const int status = ::pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string cli_path() {
    const char* p = std::getenv("TRDPOIS_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

double cell_num(const std::vector<std::string>& cells, size_t i) {
    REQUIRE(i < cells.size());
    return std::strtod(cells[i].c_str(), nullptr);
}

}  // namespace

TEST_SUITE("cli: pmf table") {
    TEST_CASE("worked point emits the full support with provenance") {
        const auto res =
            run_cmd(cli_path() + " pmf --lambda 1/3 --alpha 3 --r 0");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() == 6);
        CHECK(lines[0] == "# trdpois 0.1.0 pmf");
        CHECK(lines[1] ==
              "# lambda=0.33333333333333331 alpha=3 r=0");
        CHECK(lines[2] == "k,pmf,cdf");

        const auto row1 = split_csv(lines[3]);
        const auto row2 = split_csv(lines[4]);
        const auto row3 = split_csv(lines[5]);
        CHECK(row1[0] == "1");
        CHECK(row2[0] == "2");
        CHECK(row3[0] == "3");
        CHECK(cell_num(row1, 1) == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
        CHECK(cell_num(row2, 1) == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
        CHECK(cell_num(row3, 1) == doctest::Approx(1.0 / 7.0).epsilon(1e-14));
        CHECK(cell_num(row1, 2) == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
        CHECK(cell_num(row2, 2) == doctest::Approx(6.0 / 7.0).epsilon(1e-14));
        CHECK(row3[2] == "1");
    }

    TEST_CASE("cdf subcommand produces the same table under its own name") {
        const auto pmf =
            run_cmd(cli_path() + " pmf --lambda 1/3 --alpha 3 --r 0");
        const auto cdf =
            run_cmd(cli_path() + " cdf --lambda 1/3 --alpha 3 --r 0");
        REQUIRE(cdf.exit_code == 0);
        const auto pl = lines_of(pmf.output);
        const auto cl = lines_of(cdf.output);
        REQUIRE(pl.size() == cl.size());
        CHECK(cl[0] == "# trdpois 0.1.0 cdf");
        for (size_t i = 1; i < pl.size(); ++i) CHECK(pl[i] == cl[i]);
    }

    TEST_CASE("coverage cut keeps unbounded tables short") {
        const auto res =
            run_cmd(cli_path() + " pmf --lambda 0 --alpha 1 --r 0");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() > 4);
        CHECK(lines.size() < 40);  // tail 1e-10 needs k ~ 14 at alpha = 1
        const auto last = split_csv(lines.back());
        CHECK(cell_num(last, 2) >= 1.0 - 1e-10);
    }

    TEST_CASE("k-max override and precision env variable") {
        const auto res = run_cmd("TRDPOIS_PRECISION=3 " + cli_path() +
                                 " pmf --lambda 1/3 --alpha 3 --r 0 --k-max 1");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() == 4);
        CHECK(lines[3] == "1,0.429,0.429");
    }

    TEST_CASE("--out writes the identical bytes to a file") {
        const std::string path = "/tmp/trdpois_cli_out_test.csv";
        std::remove(path.c_str());
        const auto direct =
            run_cmd(cli_path() + " pmf --lambda 1/3 --alpha 3 --r 0");
        const auto filed = run_cmd(cli_path() +
                                   " pmf --lambda 1/3 --alpha 3 --r 0 --out " +
                                   path);
        REQUIRE(filed.exit_code == 0);
        CHECK(filed.output.empty());
        std::ifstream in(path);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == direct.output);
        std::remove(path.c_str());
    }

    TEST_CASE("invalid parameters exit 2 with the classifier's reason") {
        const auto res = run_cmd(cli_path() +
                                 " pmf --lambda -0.25 --alpha 4 --r 0 "
                                 "2>&1 >/dev/null");
        CHECK(res.exit_code == 2);
        CHECK(res.output.find("alpha < 1/|lambda|") != std::string::npos);
    }

    TEST_CASE("unknown options exit 2, help exits 0") {
        CHECK(run_cmd(cli_path() + " pmf --bogus 2>/dev/null").exit_code == 2);
        CHECK(run_cmd(cli_path() + " --help >/dev/null 2>&1").exit_code == 0);
        CHECK(run_cmd(cli_path() + " 2>/dev/null").exit_code == 2);
    }
}

TEST_SUITE("cli: moments") {
    TEST_CASE("json round-trips byte-identically and carries the oracle") {
        const auto res =
            run_cmd(cli_path() + " moments --lambda 1/3 --alpha 3 --r 0");
        REQUIRE(res.exit_code == 0);
        const json doc = json::parse(res.output);
        CHECK(doc.dump(2) + "\n" == res.output);

        CHECK(doc.at("order") == 4);
        CHECK(doc.at("r") == 0);
        CHECK(doc.at("alpha") == 3.0);
        CHECK(doc.at("mean_closed_form").get<double>() ==
              doctest::Approx(12.0 / 7.0).epsilon(1e-13));
        CHECK(doc.at("variance_closed_form").get<double>() ==
              doctest::Approx(24.0 / 49.0).epsilon(1e-13));
        REQUIRE(doc.at("moments").size() == 5);
        for (const auto& entry : doc.at("moments")) {
            CHECK(entry.at("relative_deviation").get<double>() < 1e-9);
        }
        CHECK(doc.at("moments")[2].at("closed_form").get<double>() ==
              doctest::Approx(24.0 / 7.0).epsilon(1e-13));
        CHECK(doc.at("moments")[0].at("closed_form").get<double>() == 1.0);
    }

    TEST_CASE("near-zero lambda matches the zero-lambda run to 1e-8") {
        const auto tiny = run_cmd(
            cli_path() + " moments --lambda 1e-9 --alpha 1 --r 0 --order 2");
        const auto zero = run_cmd(
            cli_path() + " moments --lambda 0 --alpha 1 --r 0 --order 2");
        REQUIRE(tiny.exit_code == 0);
        REQUIRE(zero.exit_code == 0);
        const json a = json::parse(tiny.output);
        const json b = json::parse(zero.output);
        const auto close = [](double x, double y) {
            return std::fabs(x - y) <= 1e-8 * std::max(std::fabs(x),
                                                       std::fabs(y));
        };
        CHECK(close(a.at("mean_closed_form").get<double>(),
                    b.at("mean_closed_form").get<double>()));
        CHECK(close(a.at("variance_closed_form").get<double>(),
                    b.at("variance_closed_form").get<double>()));
        for (size_t n = 0; n <= 2; ++n) {
            CHECK(close(a.at("moments")[n].at("closed_form").get<double>(),
                        b.at("moments")[n].at("closed_form").get<double>()));
        }
    }
}

TEST_SUITE("cli: sample") {
    TEST_CASE("golden values, determinism, and hex seed equivalence") {
        const std::string base =
            " sample --lambda 1/3 --alpha 3 --r 0 --count 10";
        const auto dec = run_cmd(cli_path() + base + " --seed 42");
        REQUIRE(dec.exit_code == 0);
        const auto again = run_cmd(cli_path() + base + " --seed 42");
        CHECK(dec.output == again.output);
        const auto hex = run_cmd(cli_path() + base + " --seed 0x2A");
        CHECK(dec.output == hex.output);

        const auto lines = lines_of(dec.output);
        REQUIRE(lines.size() == 11);

        const char* dir = std::getenv("TRDPOIS_TEST_DATA");
        REQUIRE(dir != nullptr);
        std::ifstream golden(std::string(dir) + "/golden_sample_seed42.txt");
        REQUIRE(golden.good());
        for (int i = 0; i < 10; ++i) {
            long long expected = 0;
            golden >> expected;
            CHECK(lines[static_cast<size_t>(i)] == std::to_string(expected));
        }

        REQUIRE(lines[10].rfind("# ", 0) == 0);
        const json footer = json::parse(lines[10].substr(2));
        CHECK(footer.at("count") == 10);
        CHECK(footer.at("seed") == 42);
        CHECK(footer.at("r") == 0);
        CHECK(footer.at("min").get<long long>() >= 1);
        CHECK(footer.at("max").get<long long>() <= 3);
        CHECK(footer.at("mean").get<double>() > 1.0);
        CHECK(footer.at("mean").get<double>() < 3.0);
    }

    TEST_CASE("zero draws produce only a footer with null stats") {
        const auto res = run_cmd(
            cli_path() +
            " sample --lambda 0 --alpha 1 --r 0 --count 0 --seed 7");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() == 1);
        const json footer = json::parse(lines[0].substr(2));
        CHECK(footer.at("count") == 0);
        CHECK(footer.at("mean").is_null());
        CHECK(footer.at("variance").is_null());
        CHECK(footer.at("min").is_null());
        CHECK(footer.at("max").is_null());
    }
}

TEST_SUITE("cli: special numbers") {
    TEST_CASE("stirling table with the exact-rational column") {
        const auto res = run_cmd(
            cli_path() + " stirling --lambda 1/3 --r 0 --k 2 --n-max 6 --exact");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() == 10);
        CHECK(lines[2] == "n,k,value,exact_value,relative_deviation");
        // S(2) = 1, S(3) = 2, S(4) = 20/9, S(5) = 40/27, S(6) = 40/81.
        const double expected[] = {0.0,         0.0,         1.0, 2.0,
                                   20.0 / 9.0, 40.0 / 27.0, 40.0 / 81.0};
        for (int n = 0; n <= 6; ++n) {
            const auto row = split_csv(lines[static_cast<size_t>(n) + 3]);
            REQUIRE(row.size() == 5);
            CHECK(row[0] == std::to_string(n));
            CHECK(row[1] == "2");
            if (expected[n] == 0.0) {
                CHECK(cell_num(row, 2) == 0.0);
            } else {
                CHECK(cell_num(row, 2) ==
                      doctest::Approx(expected[n]).epsilon(1e-13));
            }
            CHECK(cell_num(row, 4) < 1e-12);
        }
    }

    TEST_CASE("stirling overflow refusal exits 2") {
        const auto res = run_cmd(
            cli_path() +
            " stirling --lambda 0 --k 2 --n-max 171 2>/dev/null");
        CHECK(res.exit_code == 2);
    }

    TEST_CASE("bell values match the library route") {
        const auto res =
            run_cmd(cli_path() + " bell --lambda 0.4 --x 2 --n-max 3");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() == 7);
        CHECK(lines[2] == "n,value");
        const auto row0 = split_csv(lines[3]);
        const auto row1 = split_csv(lines[4]);
        // The command runs at its default tolerance 1e-12; the series
        // promises a few multiples of that.
        CHECK(cell_num(row0, 1) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(cell_num(row1, 1) ==
              doctest::Approx(2.0 / 1.8).epsilon(1e-10));
    }

    TEST_CASE("bell domain violation exits 2") {
        const auto res = run_cmd(
            cli_path() + " bell --lambda 0.3 --x 4 --n-max 2 2>/dev/null");
        CHECK(res.exit_code == 2);
    }

    TEST_CASE("bell unattainable tolerance exits 3") {
        const auto res = run_cmd(
            cli_path() +
            " bell --lambda 0 --x 1 --n-max 2 --tol 1e-30 2>/dev/null");
        CHECK(res.exit_code == 3);
    }
}

TEST_SUITE("cli: sum-dist") {
    TEST_CASE("worked point against the convolution oracle") {
        const auto res = run_cmd(
            cli_path() + " sum-dist --lambda 1/3 --alpha 3 --r 0 --k 2 "
                         "--n-max 6");
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.output);
        REQUIRE(lines.size() == 10);
        CHECK(lines[2] == "n,mass,oracle_convolution,relative_deviation");
        const double expected[] = {0.0, 0.0, 9.0 / 49.0, 18.0 / 49.0,
                                   15.0 / 49.0, 6.0 / 49.0, 1.0 / 49.0};
        for (int n = 0; n <= 6; ++n) {
            const auto row = split_csv(lines[static_cast<size_t>(n) + 3]);
            REQUIRE(row.size() == 4);
            if (expected[n] == 0.0) {
                CHECK(cell_num(row, 1) == 0.0);
            } else {
                CHECK(cell_num(row, 1) ==
                      doctest::Approx(expected[n]).epsilon(1e-12));
            }
            CHECK(cell_num(row, 3) < 1e-10);
        }
    }
}

TEST_SUITE("cli: verify") {
    TEST_CASE("all checks pass at the worked point") {
        const auto res =
            run_cmd(cli_path() + " verify --lambda 1/3 --alpha 3 --r 0");
        REQUIRE(res.exit_code == 0);
        const json doc = json::parse(res.output);
        CHECK(doc.at("pass") == true);
        CHECK(doc.at("checks").size() >= 7);
        for (const auto& check : doc.at("checks")) {
            CAPTURE(check.at("check").get<std::string>());
            CHECK(check.at("pass") == true);
        }
    }

    TEST_CASE("classical point passes at the default threshold") {
        const auto res =
            run_cmd(cli_path() + " verify --lambda 0 --alpha 1 --r 1");
        CHECK(res.exit_code == 0);
    }

    TEST_CASE("invalid parameters exit 2") {
        const auto res = run_cmd(
            cli_path() + " verify --lambda -0.25 --alpha 4 --r 0 2>/dev/null");
        CHECK(res.exit_code == 2);
    }

    TEST_CASE("uncertifiable tolerance exits 3") {
        const auto res = run_cmd(
            cli_path() +
            " verify --lambda 0 --alpha 1 --r 0 --tol 1e-30 2>/dev/null");
        CHECK(res.exit_code == 3);
    }

    TEST_CASE("threshold below the finite-difference floor exits 4") {
        // The pgf slope check carries an irreducible central-difference
        // error around 1e-10, so a 1e-12 threshold must report a mismatch.
        const auto res = run_cmd(
            cli_path() + " verify --lambda 0 --alpha 5 --r 0 --tol 1e-12");
        CHECK(res.exit_code == 4);
        const json doc = json::parse(res.output);
        CHECK(doc.at("pass") == false);
        bool slope_failed = false;
        for (const auto& check : doc.at("checks")) {
            if (check.at("check") == "pgf_slope_vs_mean") {
                slope_failed = !check.at("pass").get<bool>();
            }
        }
        CHECK(slope_failed);
    }
}
