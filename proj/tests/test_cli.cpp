#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = GD_CLI_PATH;
const fs::path kFixtures = GD_FIXTURES_DIR;

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "gdcli-test";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

int run(const std::string& args, const fs::path& stdout_path) {
    std::string cmd = kCli + " " + args + " > " + stdout_path.string() + " 2> " +
                      (stdout_path.string() + ".err");
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path write_spec(const std::string& name, const json& j) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << j.dump(2);
    return p;
}

} // namespace

TEST_CASE("analyze certifies the corner fixture") {
    fs::path out = work_dir() / "eq_analyze.json";
    int rc = run("analyze --spec " + (kFixtures / "eq24.json").string(), out);
    REQUIRE(rc == 0);
    json rep = json::parse(slurp(out));
    CHECK(rep.at("numerical_rank").get<int>() == 2);
    CHECK(rep.at("psd_verdict").get<std::string>() == "psd");
    CHECK(rep.at("is_hermitian").get<bool>());
    auto ev = rep.at("eigenvalues").get<std::vector<double>>();
    REQUIRE(ev.size() == 5);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(ev[static_cast<std::size_t>(i)]) < 1e-12);
    CHECK(std::abs(ev[3] - 1.0) < 1e-12);
    CHECK(std::abs(ev[4] - 1.0) < 1e-12);
    CHECK(rep.contains("job"));
    CHECK(rep.at("params").at("rank_tol").get<double>() == 1e-10);
}

TEST_CASE("recover matches the fixture's expected terms") {
    fs::path out = work_dir() / "cf_recover.json";
    int rc = run("recover --spec " + (kFixtures / "cf2d.json").string(), out);
    REQUIRE(rc == 0);
    json rep = json::parse(slurp(out));
    json fixture = json::parse(slurp(kFixtures / "cf2d.json"));
    const json& expected = fixture.at("expected");
    CHECK(rep.at("rank_used").get<int>() == expected.at("rank").get<int>());
    CHECK(rep.at("residual").get<double>() < 1e-8);
    auto terms = rep.at("terms");
    REQUIRE(terms.size() == expected.at("terms").size());
    for (const auto& want : expected.at("terms")) {
        auto wxi = want.at("xi").get<std::vector<double>>();
        double wc = want.at("c").get<double>();
        bool found = false;
        for (const auto& got : terms) {
            auto gxi = got.at("xi").get<std::vector<double>>();
            if (std::abs(gxi[0] - wxi[0]) < 1e-7 && std::abs(gxi[1] - wxi[1]) < 1e-7 &&
                std::abs(got.at("c").get<double>() - wc) < 1e-7)
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("recover is deterministic") {
    fs::path a = work_dir() / "det_a.json";
    fs::path b = work_dir() / "det_b.json";
    REQUIRE(run("recover --spec " + (kFixtures / "cf2d.json").string(), a) == 0);
    REQUIRE(run("recover --spec " + (kFixtures / "cf2d.json").string(), b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("build writes matrix CSV plus a JSON header") {
    fs::path csv = work_dir() / "corner.csv";
    fs::path log = work_dir() / "build.log";
    int rc = run("build --spec " + (kFixtures / "eq24.json").string() + " --out " + csv.string(),
                 log);
    REQUIRE(rc == 0);
    std::string body = slurp(csv);
    CHECK(body.rfind("row,col,re,im\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 26); // header + 5x5 entries
    json header = json::parse(slurp(fs::path(csv.string() + ".meta.json")));
    CHECK(header.at("kind").get<std::string>() == "hankel");
    CHECK(header.at("shape") == json({5, 5}));
    CHECK(header.at("rows").at("points").size() == 5);
}

TEST_CASE("sweep subcommands emit CSV") {
    json job = {{"xi", {{"shape", "disc"}, {"center", {0.0, 0.0}}, {"radius", 1.0}}}};
    fs::path spec = write_spec("boundary_job.json", job);
    fs::path csv = work_dir() / "boundary.csv";
    fs::path log = work_dir() / "boundary.log";
    int rc = run("sweep-boundary --spec " + spec.string() +
                     " --l-values 0.25,0.125,0.0625 --out " + csv.string(),
                 log);
    REQUIRE(rc == 0);
    std::string body = slurp(csv);
    CHECK(std::count(body.begin(), body.end(), '\n') == 4); // header + 3 rows
    CHECK(body.find("ld_boundary") != std::string::npos);
}

TEST_CASE("exit codes") {
    fs::path log = work_dir() / "codes.log";
    SECTION("missing input file is a parse error") {
        CHECK(run("analyze --spec " + (work_dir() / "no_such.json").string(), log) == 2);
    }
    SECTION("malformed JSON is a parse error") {
        fs::path bad = work_dir() / "bad.json";
        std::ofstream(bad) << "{ not json";
        CHECK(run("analyze --spec " + bad.string(), log) == 2);
    }
    SECTION("missing subcommand is a usage error") {
        fs::path spec = kFixtures / "eq24.json";
        CHECK(run("--spec " + spec.string(), log) == 2);
    }
    SECTION("unknown shape is a parse error") {
        json job = {{"kind", "toeplitz"},
                    {"l", 1.0},
                    {"xi", {{"shape", "pentagon"}}},
                    {"ups", {{"shape", "pentagon"}}}};
        CHECK(run("analyze --spec " + write_spec("shape_job.json", job).string(), log) == 2);
    }
    SECTION("non-PSD recovery input is a precondition violation") {
        json term;
        term["c"] = json::array({-1.0, 0.0});
        term["zeta"] = json::array({json::array({0.0, 0.6}), json::array({0.0, -0.4})});
        json job;
        job["l"] = 1.0;
        job["xi"] = {{"shape", "box"}, {"halfwidths", {4.5, 4.5}}};
        job["symbol"] = {{"type", "expsum"}, {"dimension", 2}, {"terms", json::array({term})}};
        CHECK(run("recover --spec " + write_spec("npsd_job.json", job).string(), log) == 3);
    }
}
