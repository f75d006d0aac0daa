#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "llv/cli.hpp"

using namespace llv;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempCacheDir {
    std::filesystem::path dir;
    TempCacheDir() {
        dir = std::filesystem::temp_directory_path() /
              ("llv-test-cache-" + std::to_string(::getpid()));
        std::filesystem::remove_all(dir);
        setenv("LLV_CACHE_DIR", dir.c_str(), 1);
    }
    ~TempCacheDir() {
        std::filesystem::remove_all(dir);
        unsetenv("LLV_CACHE_DIR");
    }
};

}  // namespace

TEST_CASE("dim command") {
    auto r = run_cli({"dim", "--algebra", "D13", "--weight", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "37674\n");
    auto r2 = run_cli({"dim", "--algebra", "B4", "--weight", "1/2,1/2,1/2,1/2"});
    CHECK(r2.out == "16\n");
}

TEST_CASE("series euler specialization") {
    TempCacheDir cache;
    auto r = run_cli({"series", "k3n", "--max-n", "2", "--specialize", "euler"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 24 324\n");
}

TEST_CASE("series caps and --force") {
    auto r = run_cli({"series", "kumn", "--max-n", "7", "--no-cache"});
    CHECK(r.code == 1);  // above the default cap without --force
    CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("series decompose text output marks formal coefficients") {
    TempCacheDir cache;
    auto r = run_cli({"series", "kumn", "--max-n", "2", "--decompose"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0: formal-only") != std::string::npos);
    CHECK(r.out.find("1: formal-only") != std::string::npos);
    CHECK(r.out.find("2: (2):1 (1/2,1/2,1/2,1/2):1 (0):80") != std::string::npos);
}

TEST_CASE("decompose a series coefficient") {
    auto r = run_cli({"decompose", "--series", "k3n", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "(3):1 (1,1):1\n");
}

TEST_CASE("solve og10 text output") {
    auto r = run_cli({"solve", "og10"});
    CHECK(r.code == 0);
    CHECK(r.out == "(5):1 (2,2):1\n");
}

TEST_CASE("bracket-check and oracle") {
    auto r = run_cli({"bracket-check", "--b2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    auto r2 = run_cli({"oracle", "nilpotency", "--b2", "6", "--nu2", "1", "--weight", "2,1"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "induced=3 formula=3 match=true\n");
}

TEST_CASE("usage errors exit with 2") {
    auto r = run_cli({"dim", "--algebra", "D13"});
    CHECK(r.code == 2);
    auto r2 = run_cli({"frobnicate"});
    CHECK(r2.code == 2);
    auto r3 = run_cli({"decompose"});
    CHECK(r3.code == 2);
}

TEST_CASE("computation errors exit with 1") {
    auto r = run_cli({"dim", "--algebra", "B4", "--weight", "1,2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("hodge diamond and table rendering") {
    auto r = run_cli({"hodge", "--algebra", "B12", "--weights", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n21 1\n232 21 1\n");

    auto t = run_cli(
        {"hodge", "--algebra", "D13", "--weights", "5", "--weights", "2,2", "--n", "5", "--table"});
    CHECK(t.code == 0);
    CHECK(t.out.find("(5)\t1\t24\t300\t2600\t17550\t98280\t139230\t31059") != std::string::npos);
    CHECK(t.out.find("(2,2)\t0\t0\t0\t299\t4600\t27876\t37674\t5796") != std::string::npos);
}

TEST_CASE("output determinism") {
    TempCacheDir cache;
    for (auto args : std::vector<std::vector<std::string>>{
             {"series", "kumn", "--max-n", "2", "--decompose", "--out", "json", "--no-cache"},
             {"character", "--algebra", "B4", "--weight", "1,1", "--out", "json"},
             {"solve", "og6", "--out", "json"}}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("series cache round trip") {
    TempCacheDir cache;
    std::vector<std::string> args{"series", "kumn", "--max-n", "2", "--decompose"};
    auto first = run_cli(args);
    REQUIRE(first.code == 0);
    // a cache entry now exists and replays byte-identically
    CHECK(std::filesystem::exists(cache.dir));
    size_t files = 0;
    for (auto& e : std::filesystem::directory_iterator(cache.dir)) (void)e, ++files;
    CHECK(files == 1);
    auto second = run_cli(args);
    CHECK(second.out == first.out);

    // corrupt entries are discarded and recomputed
    for (auto& e : std::filesystem::directory_iterator(cache.dir)) {
        std::ofstream trunc(e.path());
        trunc << "{not json";
    }
    auto third = run_cli(args);
    CHECK(third.code == 0);
    CHECK(third.out == first.out);

    // a different key (engine version bump or parameter change) misses
    CHECK(!cache_get("series|kumn|2|dec|||text|other-version"));
}

TEST_CASE("cache_get / cache_put") {
    TempCacheDir cache;
    CHECK(!cache_get("k"));
    cache_put("k", "payload-bytes");
    auto hit = cache_get("k");
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload-bytes");
    // hash collisions are detected through the stored full key
    cache_put("k2", "other");
    CHECK(*cache_get("k2") == "other");
    CHECK(*cache_get("k") == "payload-bytes");
}

TEST_CASE("JSON round trips") {
    Algebra b4 = Algebra::B(4);
    Character c = irreducible_character(b4, parse_weight("3/2,1/2,1/2,1/2", 4));
    CHECK(character_from_json(character_to_json(c)) == c);

    Decomposition d(b4);
    d.add(parse_weight("2,1", 4), 3);
    d.add(Weight(4), 7);
    d.sort_canonical();
    CHECK(decomposition_from_json(decomposition_to_json(d)) == d);

    json pj;
    pj["n"] = 5;
    pj["b2"] = 24;
    pj["euler"] = 176904;
    HKProfile p = profile_from_json(pj);
    CHECK(p.n == 5);
    CHECK(p.euler == 176904);
    CHECK(p.odd_vanishes);
}

TEST_CASE("solve custom with a profile file") {
    auto dir = std::filesystem::temp_directory_path();
    auto path = dir / ("llv-test-profile-" + std::to_string(::getpid()) + ".json");
    {
        std::ofstream out(path);
        out << R"({"n": 1, "b2": 22, "euler": 24})";
    }
    auto r = run_cli({"solve", "custom", "--profile", path.string()});
    std::filesystem::remove(path);
    CHECK(r.code == 0);
    CHECK(r.out == "(1):1\n");

    auto r2 = run_cli({"solve", "custom"});
    CHECK(r2.code == 2);
}

TEST_CASE("decompose a character from a JSON file") {
    Algebra b4 = Algebra::B(4);
    Character c = add(irreducible_character(b4, parse_weight("2,1", 4)),
                      trivial_character(b4, 5));
    auto dir = std::filesystem::temp_directory_path();
    auto path = dir / ("llv-test-char-" + std::to_string(::getpid()) + ".json");
    {
        std::ofstream out(path);
        out << character_to_json(c).dump();
    }
    auto r = run_cli({"decompose", "--character", path.string()});
    std::filesystem::remove(path);
    CHECK(r.code == 0);
    CHECK(r.out == "(2,1):1 (0):5\n");
}

TEST_CASE("nagai command") {
    auto r = run_cli({"nagai", "--family", "kumn", "--n", "3", "--nu2", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: true") != std::string::npos);
    auto r2 = run_cli({"nagai", "--family", "og6", "--n", "3", "--nu2", "2"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("0 2 4 6") != std::string::npos);
}
