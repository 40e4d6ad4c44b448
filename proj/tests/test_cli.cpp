#include "hecke/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hecke::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("documented invocations") {
    Result r = run({"classpoly", "t[1,0].s1.tau^0", "--mode", "split", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"O1": [1], "O2": [0,1]})"));

    r = run({"classify", "t[1,-1].e.tau^0", "--mode", "split"});
    CHECK(r.code == 0);
    CHECK(r.out == "O_lam[1,2]\n");

    r = run({"points", "t[0,0].e.tau^1", "--group", "pgl3", "--b", "tau", "--q", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("adlv record") {
    const Result r = run({"adlv", "t[1,0].s1.tau^0", "--group", "pgl3", "--b", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("witness_class") == "O2");
    CHECK(run({"adlv", "t[0,0].s1.tau^0", "--b", "tau"}).out == "empty\n");
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"classify"}).code == 1);
    CHECK(run({"classify", "t[1,0].s1.tau^0", "--mode", "sideways"}).code == 1);
    CHECK(run({"classpoly", "t[1,0].s1.tau^0", "--format", "xml"}).code == 1);
    Result r = run({"classify", "garbage"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
    r = run({"ghkr", "t[0,0].s1.tau^0", "--b", "O_lam[1,1]"});
    CHECK(r.code == 1);
    CHECK(r.err.find("threshold") != std::string::npos);
    CHECK(run({"points", "t[0,0].e.tau^1", "--b", "1", "--q", "5"}).code == 1);
    CHECK(run({"verify", "everything"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subcommand") {
    Result r = run({"verify", "closedform", "--max-length", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);
    r = run({"verify", "invariants", "--max-length", "10", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("failures").empty());
    CHECK(run({"verify", "ghkr", "--max-length", "20"}).code == 0);
}

TEST_CASE("output is deterministic and formats agree") {
    const std::vector<std::string> base = {"sweep", "--mode", "split_tau", "--max-length", "9"};
    auto with = [&](const char* fmt) {
        auto a = base;
        a.push_back("--format");
        a.push_back(fmt);
        return run(a);
    };
    const Result j1 = with("json"), j2 = with("json"), c = with("csv"), seeded = run({"sweep", "--mode", "split_tau",
                                                                                   "--max-length", "9", "--format",
                                                                                   "json", "--seed", "4"});
    REQUIRE(j1.code == 0);
    CHECK(j1.out == j2.out);
    CHECK(seeded.out == j1.out);

    // Rebuild the JSON content from the CSV rows.
    std::map<std::string, std::map<std::string, std::vector<long>>> from_csv;
    std::istringstream in(c.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "element,length,class,entry,power,coefficient");
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::string cell;
        bool quoted = false;
        for (char ch : line) {
            if (ch == '"') quoted = !quoted;
            else if (ch == ',' && !quoted) f.push_back(cell), cell.clear();
            else cell += ch;
        }
        f.push_back(cell);
        REQUIRE(f.size() == 6);
        auto& coeffs = from_csv[f[0]][f[3]];
        coeffs.resize(std::stoul(f[4]) + 1);
        coeffs[std::stoul(f[4])] = std::stol(f[5]);
    }
    const auto arr = nlohmann::json::parse(j1.out);
    CHECK(arr.size() == from_csv.size());
    int last_len = -1;
    for (const auto& row : arr) {
        const std::string el = row.at("element");
        CHECK(row.at("length").get<int>() >= last_len);
        last_len = row.at("length");
        for (const auto& [cls, coeffs] : row.at("poly").items())
            CHECK(coeffs.get<std::vector<long>>() == from_csv[el][cls]);
    }
}

TEST_CASE("cache file") {
    const std::string path = temp_path("hecke_cli_cache.jsonl");
    std::remove(path.c_str());
    Result r = run({"cache", "warm", "--max-length", "6", "--cache-file", path});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(path));
    r = run({"cache", "info", "--cache-file", path});
    CHECK(r.code == 0);
    CHECK(r.out.find(" 0 entries") == std::string::npos);
    CHECK(run({"classpoly", "t[1,0].s1.tau^0", "--cache-file", path}).out == run({"classpoly", "t[1,0].s1.tau^0"}).out);
    {
        std::ofstream bad(path);
        bad << R"({"format":"hecke-memo","version":7})" << "\n";
    }
    r = run({"classify", "t[1,0].s1.tau^0", "--cache-file", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("cache error") != std::string::npos);
    CHECK(run({"cache", "info"}).code == 1);
    std::remove(path.c_str());
}
