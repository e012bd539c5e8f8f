#include "coideal/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coideal/error.hpp"

namespace coideal {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw Error("HashError", "SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::default_dir() {
    if (const char* e = std::getenv("COIDEAL_CACHE_DIR"); e && *e) return e;
    if (const char* h = std::getenv("HOME"); h && *h) return (fs::path(h) / ".cache" / "coideal").string();
    return "";
}

std::string ResultCache::path_for(const json& key) const {
    return (fs::path(dir_) / (sha256_hex(key.dump()) + ".json")).string();
}

std::optional<json> ResultCache::get(const json& key, std::vector<std::string>* warnings) const {
    if (!enabled()) return std::nullopt;
    std::string path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    auto corrupt = [&](const std::string& why) -> std::optional<json> {
        if (warnings) warnings->push_back("CacheCorrupt(" + path + "): " + why + "; recomputing");
        return std::nullopt;
    };
    json entry = json::parse(ss.str(), nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return corrupt("unreadable entry");
    if (!entry.contains("key") || !entry.contains("payload") || !entry.contains("sha256"))
        return corrupt("missing fields");
    if (entry["key"] != key) return corrupt("key mismatch");
    if (entry["sha256"] != sha256_hex(entry["payload"].dump())) return corrupt("payload hash mismatch");
    return entry["payload"];
}

void ResultCache::put(const json& key, const json& payload) const {
    if (!enabled()) return;
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error("IOError", "cannot create cache directory " + dir_ + ": " + ec.message());
    std::string path = path_for(key);
    std::string tmp = path + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("IOError", "cannot write " + tmp);
        out << json{{"key", key}, {"payload", payload}, {"sha256", sha256_hex(payload.dump())}}.dump();
        if (!out.flush()) throw Error("IOError", "write failed for " + tmp);
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("IOError", "cannot move cache entry into place: " + ec.message());
    }
}

}  // namespace coideal
