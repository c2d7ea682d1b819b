#include <doctest.h>

#include "cartan/catalog.hpp"
#include "cartan/cli.hpp"
#include "cartan/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cartan::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
    std::ifstream in(std::string(CARTAN_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("golden json outputs") {
    auto w = run({"wallach", "--domain", "I:2,2", "--json"});
    CHECK(w.code == 0);
    CHECK(json::parse(w.out) == golden("wallach_I_2_2.json"));

    auto b = run({"balanced-hartogs", "--domain", "I:2,2", "--mu", "4/5", "--alpha", "2", "--json"});
    CHECK(b.code == 2);
    CHECK(json::parse(b.out) == golden("balanced_hartogs_I_2_2.json"));

    auto s = run({"scan", "--dim-cap", "4", "--json"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out) == golden("scan_dim4.json"));
}

TEST_CASE("exit codes") {
    CHECK(run({"balanced-cartan", "--domain", "II:3", "--beta", "1"}).code == 0);
    CHECK(run({"balanced-cartan", "--domain", "II:3", "--beta", "3/4"}).code == 2);
    CHECK(run({"projective", "--domain", "I:2,2", "--beta", "1/4"}).code == 0);
    CHECK(run({"projective", "--domain", "I:2,2", "--beta", "1/8"}).code == 2);
    CHECK(run({"projective-hartogs", "--domain", "I:2,2", "--mu", "1/3", "--alpha", "1/2"}).code == 2);
    CHECK(run({"balanced-hartogs", "--domain", "I:1,2", "--mu", "1", "--alpha", "7/2"}).code == 0);
    CHECK(run({"corollary-scan", "--dim-cap", "10"}).code == 0);
    CHECK(run({"immersion", "--d", "1", "--mu", "1", "--alpha", "3", "--cap", "30", "--check-grid", "0.3:3"}).code == 0);
    CHECK(run({"catalog", "--dim-cap", "3"}).code == 0);
    CHECK(run({"moment", "--domain", "I:1,1", "--s", "-1"}).code == 1);
    CHECK(run({"epsilon-ball", "--d", "1", "--alpha", "1"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"balanced-cartan", "--domain", "II:3"}).code == 1);
    CHECK(run({"balanced-cartan", "--domain", "VII:3", "--beta", "1"}).code == 1);
    CHECK(run({"wallach", "--domain", "I:2,2", "--frobnicate"}).code == 1);
}

TEST_CASE("symbolic flags reject decimals and name the flag") {
    auto r = run({"balanced-cartan", "--domain", "II:3", "--beta", "0.75"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--beta") != std::string::npos);
    auto h = run({"balanced-hartogs", "--domain", "I:2,2", "--mu", "0.8", "--alpha", "2"});
    CHECK(h.code == 1);
    CHECK(h.err.find("--mu") != std::string::npos);
    // numeric subcommands take decimals
    CHECK(run({"epsilon-ball", "--d", "1", "--alpha", "2.5", "--cap", "150", "--rmax", "0.8"}).code == 0);
}

TEST_CASE("every json output carries the schema version") {
    std::vector<std::vector<std::string>> cmds = {
        {"catalog", "--dim-cap", "2"},
        {"wallach", "--domain", "IV:5"},
        {"projective", "--domain", "IV:5", "--beta", "1"},
        {"projective-hartogs", "--domain", "IV:5", "--mu", "1", "--alpha", "2"},
        {"moment", "--domain", "IV:5", "--s", "1/2"},
        {"moment-ratio", "--domain", "IV:5"},
        {"balanced-cartan", "--domain", "IV:5", "--beta", "1"},
        {"balanced-hartogs", "--domain", "IV:5", "--mu", "1", "--alpha", "7"},
        {"scan", "--dim-cap", "2"},
        {"corollary-scan", "--dim-cap", "4"},
        {"immersion", "--d", "1", "--mu", "1", "--alpha", "3", "--cap", "20", "--check-grid", "0.3:3"},
        {"epsilon-ball", "--d", "1", "--alpha", "3", "--points", "3"},
        {"epsilon-hartogs", "--mu", "1", "--alpha", "4", "--grid", "3x3"},
    };
    for (auto args : cmds) {
        args.push_back("--json");
        auto r = run(args);
        CAPTURE(args[0]);
        CHECK(r.code != 1);
        auto j = json::parse(r.out);
        CHECK(j.at("schema_version") == cartan::cli::schema_version);
        CHECK(j.at("command") == args[0]);
        CHECK_FALSE(j.contains("manifest"));

        args.push_back("--manifest");
        auto m = json::parse(run(args).out);
        CHECK(m.at("manifest").at("version") == cartan::cli::tool_version);
        CHECK(m.at("manifest").at("catalog_hash") == cartan::catalog_hash(27));
        CHECK(m.at("manifest").at("command") == args[0]);
    }
}

TEST_CASE("scan rows through the cli match the closed form") {
    auto j = json::parse(run({"scan", "--dim-cap", "10", "--json"}).out);
    int balanced = 0;
    for (const auto& row : j.at("rows")) {
        auto d = cartan::parse_domain(row.at("domain").get<std::string>());
        bool expected = d.is_ball() && row.at("mu") == "1" &&
                        cartan::Rational::parse(row.at("alpha").get<std::string>()) > cartan::Rational(d.dim + 1);
        CHECK(row.at("balanced") == expected);
        if (expected) ++balanced;
    }
    CHECK(balanced > 0);
}

TEST_CASE("text outputs") {
    auto r = run({"balanced-hartogs", "--domain", "I:1,1", "--mu", "2", "--alpha", "4"});
    CHECK(r.out.find("(m+3)/((2m+7))") != std::string::npos);
    auto m = run({"moment-ratio", "--domain", "IV:4"});
    CHECK(m.out.find("12/((s+1)(s+2)^2(s+3))") != std::string::npos);
}

TEST_CASE("epsilon csv output") {
    auto path = std::filesystem::temp_directory_path() / "cartan_eps_test.csv";
    auto r = run({"epsilon-hartogs", "--mu", "2", "--alpha", "4", "--grid", "3x4", "--csv", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "abs_z,abs_w,epsilon");
    int rows = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 12);
    std::filesystem::remove(path);
}
