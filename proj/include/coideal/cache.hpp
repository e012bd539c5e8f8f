#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coideal {

std::string sha256_hex(const std::string& data);

// Content-addressed store of JSON results. The file name is the SHA-256 of
// the canonical key; each entry also records the SHA-256 of its payload so
// truncated or edited files are detected and treated as misses. Writes go to
// a temporary file in the same directory followed by a rename.
class ResultCache {
public:
    ResultCache() = default;                  // disabled
    explicit ResultCache(std::string dir);    // empty dir = disabled

    // $COIDEAL_CACHE_DIR, else $HOME/.cache/coideal, else empty.
    static std::string default_dir();

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }
    std::string path_for(const nlohmann::json& key) const;

    // Miss on absent entries; corrupt entries add "CacheCorrupt(path): ..." to warnings.
    std::optional<nlohmann::json> get(const nlohmann::json& key, std::vector<std::string>* warnings = nullptr) const;
    void put(const nlohmann::json& key, const nlohmann::json& payload) const;  // Error IOError

private:
    std::string dir_;
};

}  // namespace coideal
