#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "projineq/cli/commands.hpp"
#include "projineq/cli/error.hpp"
#include "projineq/cli/report.hpp"

using namespace projineq::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("projineq_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string &name, const std::string &text) const {
        const auto p = (path_ / name).string();
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }
    std::string path(const std::string &name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

const Report *find_check(const Report &checks, const std::string &name) {
    for (const auto &c : checks) {
        if (c["name"] == name) return &c;
    }
    return nullptr;
}

} // namespace

TEST_CASE("bounds report fixture") {
    const auto in = parse_bounds_input(R"({"version": 1, "x": [3, 4], "y": [1, 2], "span": [[1, 0]]})");
    const auto r = bounds_report(in, 1e-9);
    CHECK(r["format"] == "projineq.bounds");
    CHECK(r["d_function"].get<double>() == 11.0);
    CHECK(r["chain"]["lower"].get<double>() == 11.0);
    CHECK(r["chain"]["upper"].get<double>() == doctest::Approx(std::sqrt(125.0)).epsilon(1e-15));
    CHECK(r["identity_residual"].get<double>() == 0.0);
    CHECK(r["gap"]["gap"].get<double>() == 4.0);
    CHECK(r["p_covariance"]["value"].get<double>() == 8.0);
    REQUIRE(r["witnesses"].size() == 7);
    const char *names[] = {"eR", "eB", "eD", "D", "cov", "B", "R"};
    for (std::size_t i = 0; i < 7; ++i) CHECK(r["witnesses"][i]["name"] == names[i]);
    CHECK(r["witnesses"][6]["enhanced_rhs"].get<double>() == 11.0);
    CHECK_FALSE(r.contains("classical_note"));
    CHECK(r["holds"].get<bool>());
    for (const auto &c : r["checks"]) CHECK(c["holds"].get<bool>());
}

TEST_CASE("bounds report without a rank-one projector omits B and R") {
    const auto in = parse_bounds_input(R"({"x": [1, 2, 3], "y": [3, 1, 0], "span": [[1, 0, 0], [0, 1, 1]]})");
    const auto r = bounds_report(in, 1e-9);
    CHECK(r["projector"]["rank"].get<int>() == 2);
    CHECK(r["witnesses"].size() == 5);
    CHECK(r.contains("classical_note"));
    CHECK(r["holds"].get<bool>());
}

TEST_CASE("bounds report equality case x = y") {
    const auto in = parse_bounds_input(R"({"x": [1, 2], "y": [1, 2], "z": [1, 1]})");
    const auto r = bounds_report(in, 1e-9);
    CHECK(r["chain"]["middle"].get<double>() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(std::fabs(r["chain"]["slack_upper"].get<double>()) <= 1e-14);
    CHECK(r["projector"]["kind"] == "direction");
    CHECK(r["holds"].get<bool>());
}

TEST_CASE("walker report fixtures") {
    SUBCASE("X=(1,3), Y=(2,2)") {
        const auto r = walker_report(parse_csv("X,Y\n1,2\n3,2\n"), {{"X", "Y"}, std::nullopt}, 1e-9);
        CHECK(r["columns"][0]["sharpe"].get<double>() == 2.0);
        CHECK(r["columns"][1]["sharpe"].is_null());
        const auto &p = r["pairs"][0];
        CHECK(std::fabs(p["chain"]["lower"].get<double>() - 4.0) <= 1e-12);
        CHECK(std::fabs(p["chain"]["middle"].get<double>() - 4.0) <= 1e-12);
        CHECK(std::fabs(p["chain"]["upper"].get<double>() - std::sqrt(20.0)) <= 1e-12);
        CHECK_FALSE(p["equalization"]["equalized"].get<bool>());
        CHECK(p["sharpe_squared_equal"].is_null());
        CHECK(r["holds"].get<bool>());
    }
    SUBCASE("X=(1,3), Y=(2,6) equalized") {
        const auto r = walker_report(parse_csv("X,Y\n1,2\n3,6\n"), {{"X", "Y"}, std::nullopt}, 1e-9);
        CHECK(std::fabs(r["columns"][0]["sharpe"].get<double>() - 2.0) <= 1e-12);
        CHECK(std::fabs(r["columns"][1]["sharpe"].get<double>() - 2.0) <= 1e-12);
        CHECK(r["pairs"][0]["equalization"]["equalized"].get<bool>());
        CHECK(r["pairs"][0]["sharpe_squared_equal"].get<bool>());
        CHECK(r["pairs"][0]["improvement"].get<double>() <= 1e-9 * std::sqrt(40.0 * 5.0));
    }
    SUBCASE("three columns give three pairs; weights column") {
        const auto r = walker_report(parse_csv("A,B,C,W\n1,2,0,0.25\n3,-1,5,0.75\n"), {{"A", "B", "C"}, "W"},
                                     1e-9);
        CHECK(r["pairs"].size() == 3);
        CHECK(r["weighting"] == "W");
        CHECK(r["columns"][0]["mean"].get<double>() == 2.5);
    }
    SUBCASE("bad weights") {
        try {
            walker_report(parse_csv("A,W\n1,0.5\n2,0.6\n"), {{"A"}, "W"}, 1e-9);
            FAIL("expected an exception");
        } catch (const InputError &e) {
            CHECK(e.code() == ExitCode::InvalidValue);
        }
    }
}

TEST_CASE("hoelder report fixtures") {
    const auto table = parse_csv("X,Y\n1,2\n3,2\n");
    const auto r = hoelder_report(table, {{"X", "Y"}, std::nullopt}, 2.0, 1e-9);
    CHECK(std::fabs(r["lhs"].get<double>() - 4.0) <= 1e-9);
    CHECK(std::fabs(r["refined"].get<double>() - (std::sqrt(5.0) + 2.0)) <= 1e-9);
    CHECK(std::fabs(r["classical"].get<double>() - std::sqrt(20.0)) <= 1e-9);
    CHECK(std::fabs(r["new_walker"]["bound"].get<double>() - (std::sqrt(5.0) + 2.0)) <= 1e-9);
    CHECK(std::fabs(r["new_walker"]["seeh_bound"].get<double>() - 4.0) <= 1e-9);
    CHECK(r["holds"].get<bool>());
    REQUIRE(find_check(r["checks"], "new_walker.consistency"));

    const auto r3 = hoelder_report(table, {{"X", "Y"}, std::nullopt}, 3.0, 1e-9);
    CHECK(r3["new_walker"].is_null());
    CHECK(r3["q"].get<double>() == 1.5);
    CHECK_FALSE(find_check(r3["checks"], "new_walker.consistency"));

    auto code = [&](std::vector<std::string> cols, double p) {
        try {
            hoelder_report(table, {cols, std::nullopt}, p, 1e-9);
        } catch (const InputError &e) {
            return e.code();
        }
        return ExitCode::Ok;
    };
    CHECK(code({"X"}, 2.0) == ExitCode::Usage);
    CHECK(code({"X", "Y"}, 1.0) == ExitCode::InvalidValue);
    CHECK(code({"X", "Z"}, 2.0) == ExitCode::MalformedInput);
}

TEST_CASE("reports survive a serialize-parse-serialize round trip") {
    const auto table = parse_csv("X,Y\n0.1,2\n3,-0.7\n1e-3,5\n");
    const std::vector<Report> reports{
        bounds_report(parse_bounds_input(R"({"x": [0.1, 0.2, 0.3], "y": [1, 2, 3.5], "z": [1, 1, 0]})"), 1e-9),
        walker_report(table, {{"X", "Y"}, std::nullopt}, 1e-9),
        hoelder_report(table, {{"X", "Y"}, std::nullopt}, 1.5, 1e-9)};
    for (const auto &r : reports) {
        const auto text = r.dump(2);
        const auto back = Report::parse(text);
        CHECK(back == r);
        CHECK(back.dump(2) == text);
    }
}

TEST_CASE("command exit statuses") {
    TempDir dir;
    std::ostringstream out, err;
    auto bounds = [&](const std::string &json) {
        BoundsOptions o;
        o.input = dir.write("in.json", json);
        return cmd_bounds(o, out, err);
    };
    CHECK(bounds(R"({"x": [3, 4], "y": [1, 2], "span": [[1, 0]]})") == 0);
    CHECK(bounds("{") == 3);
    CHECK(bounds(R"({"x": [3, 4], "y": [1], "z": [1, 0]})") == 4);
    CHECK(bounds(R"({"x": [3, 4], "y": [1, 2], "z": [0, 0]})") == 5);
    {
        BoundsOptions o;
        o.input = dir.path("missing.json");
        CHECK(cmd_bounds(o, out, err) == 7);
        o.input = dir.write("ok.json", R"({"x": [3, 4], "y": [1, 2], "z": [1, 0]})");
        o.tolerance = -1.0;
        CHECK(cmd_bounds(o, out, err) == 2);
        o.tolerance = std::nullopt;
        o.json_out = dir.path("no/such/dir/out.json");
        CHECK(cmd_bounds(o, out, err) == 7);
    }

    const auto csv = dir.write("s.csv", "X,Y\n1,2\n3,2\n");
    WalkerOptions w;
    w.csv = csv;
    w.columns = {"X", "Y"};
    CHECK(cmd_walker(w, out, err) == 0);
    w.columns = {"X", "Q"};
    CHECK(cmd_walker(w, out, err) == 3);
    w.columns = {};
    CHECK(cmd_walker(w, out, err) == 2);

    HoelderOptions h;
    h.csv = csv;
    h.columns = {"X", "Y"};
    h.p = 3.0;
    CHECK(cmd_hoelder(h, out, err) == 0);
    h.p = 0.5;
    CHECK(cmd_hoelder(h, out, err) == 6);
    h.p = 1.0;
    CHECK(cmd_hoelder(h, out, err) == 6);
    h.p = 2.0;
    h.csv = dir.write("bad.csv", "X,Y\n1,oops\n");
    CHECK(cmd_hoelder(h, out, err) == 3);
}

TEST_CASE("json output to stdout and to a file agree") {
    TempDir dir;
    BoundsOptions o;
    o.input = dir.write("in.json", R"({"x": [3, 4], "y": [1, 2], "span": [[1, 0]]})");
    o.json_out = "-";
    std::ostringstream a, err;
    REQUIRE(cmd_bounds(o, a, err) == 0);
    o.json_out = dir.path("out.json");
    std::ostringstream b;
    REQUIRE(cmd_bounds(o, b, err) == 0);
    std::ifstream f(*o.json_out);
    std::stringstream file;
    file << f.rdbuf();
    CHECK(file.str() == a.str());
    CHECK(b.str().find("D(x,y|P) = 11") != std::string::npos);
}

TEST_CASE("fuzz failure dumps replay through the single-instance commands") {
    // A vanishing tolerance turns rounding noise into recorded failures.
    FuzzConfig c;
    c.seed = 3;
    c.trials = 60;
    c.max_dim = 6;
    c.max_outcomes = 8;
    c.tolerance = 1e-300;
    c.max_failures = 1000;
    const auto report = run_fuzz(c, 2);
    REQUIRE_FALSE(report.passed());

    TempDir dir;
    std::set<std::string> replayed;
    for (const auto &f : report.failures) {
        if (!f.replayable) continue;
        std::ostringstream out, err;
        Report r;
        const Report *check = nullptr;
        if (f.family == "hilbert") {
            BoundsOptions o;
            o.input = dir.write("case.json", f.instance.dump());
            o.json_out = "-";
            o.tolerance = c.tolerance;
            CHECK(cmd_bounds(o, out, err) == 1);
            r = Report::parse(out.str());
            check = find_check(r["checks"], f.property);
        } else if (f.family == "walker") {
            WalkerOptions o;
            o.csv = dir.write("case.csv", f.instance["csv"].get<std::string>());
            o.columns = {"X", "Y"};
            o.weights = "W";
            o.json_out = "-";
            o.tolerance = c.tolerance;
            CHECK(cmd_walker(o, out, err) == 1);
            r = Report::parse(out.str());
            check = find_check(r["pairs"][0]["checks"], f.property);
        } else {
            HoelderOptions o;
            o.csv = dir.write("case.csv", f.instance["csv"].get<std::string>());
            o.columns = {"X", "Y"};
            o.weights = "W";
            o.p = f.instance["p"].get<double>();
            o.json_out = "-";
            o.tolerance = c.tolerance;
            CHECK(cmd_hoelder(o, out, err) == 1);
            r = Report::parse(out.str());
            check = find_check(r["checks"], f.property);
        }
        REQUIRE_MESSAGE(check, f.property);
        CHECK_FALSE((*check)["holds"].get<bool>());
        CHECK((*check)["violation"].get<double>() == f.violation);
        replayed.insert(f.family);
    }
    CHECK(replayed == std::set<std::string>{"hilbert", "walker", "hoelder"});
}
