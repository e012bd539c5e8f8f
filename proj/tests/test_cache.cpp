#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "coideal/cache.hpp"

using namespace coideal;
using nlohmann::json;

namespace fs = std::filesystem;

TEST_CASE("cache: sha256 known digest") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache: round trip, corruption and keying") {
    auto dir = fs::temp_directory_path() / "coideal_cache_test";
    fs::remove_all(dir);
    ResultCache cache(dir.string());
    json key{{"command", "dims"}, {"engine", "exact"}, {"N", 5}};
    json payload{{"dims", {1, 3, 4, 3, 1}}};

    std::vector<std::string> warnings;
    CHECK(!cache.get(key, &warnings));
    CHECK(warnings.empty());
    cache.put(key, payload);
    auto hit = cache.get(key, &warnings);
    REQUIRE(hit);
    CHECK(*hit == payload);
    CHECK(warnings.empty());

    // Engines are keyed separately.
    json other = key;
    other["engine"] = "modular";
    CHECK(!cache.get(other));

    // Truncated file: warning and a miss.
    std::string path = cache.path_for(key);
    std::string full;
    {
        std::ifstream in(path);
        std::getline(in, full, '\0');
    }
    std::ofstream(path, std::ios::trunc) << full.substr(0, full.size() / 2);
    CHECK(!cache.get(key, &warnings));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("CacheCorrupt") == 0);

    // Edited payload with a stale hash.
    json entry = json::parse(full);
    entry["payload"]["dims"][1] = 4;
    std::ofstream(path, std::ios::trunc) << entry.dump();
    warnings.clear();
    CHECK(!cache.get(key, &warnings));
    CHECK(warnings.size() == 1);

    // Recomputing overwrites the bad entry.
    cache.put(key, payload);
    CHECK(cache.get(key) == payload);

    // Disabled cache stores nothing.
    ResultCache off;
    off.put(key, payload);
    CHECK(!off.get(key));
    fs::remove_all(dir);
}
