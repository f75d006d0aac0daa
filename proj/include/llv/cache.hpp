#pragma once

// On-disk result cache, content-addressed by (command, canonical parameters,
// engine version). Writes are atomic (temp file + rename); unreadable or
// mismatched entries are discarded and recomputed. Cache failures degrade to
// recomputation, never to wrong answers.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "llv/json_io.hpp"

namespace llv {

inline std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("LLV_CACHE_DIR")) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "llv";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "llv";
    return std::filesystem::temp_directory_path() / "llv-cache";
}

inline std::string cache_key_hash(const std::string& key) {
    // FNV-1a, printed as hex; collisions are handled by storing the full key
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::optional<std::string> cache_get(const std::string& key) {
    try {
        auto path = cache_dir() / (cache_key_hash(key) + ".json");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.contains("key") || !j.contains("payload") ||
            j["key"].get<std::string>() != key) {
            std::fprintf(stderr, "llv: discarding unusable cache entry %s\n",
                         path.string().c_str());
            std::error_code ec;
            std::filesystem::remove(path, ec);
            return std::nullopt;
        }
        return j["payload"].get<std::string>();
    } catch (...) {
        return std::nullopt;
    }
}

inline void cache_put(const std::string& key, const std::string& payload) {
    try {
        auto dir = cache_dir();
        std::filesystem::create_directories(dir);
        auto path = dir / (cache_key_hash(key) + ".json");
        auto tmp = dir / (cache_key_hash(key) + ".tmp." + std::to_string(::getpid()));
        {
            json j;
            j["schema"] = kSchemaVersion;
            j["key"] = key;
            j["payload"] = payload;
            std::ofstream out(tmp);
            out << j.dump();
            if (!out) {
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                return;
            }
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        // cache writes are best-effort
    }
}

}  // namespace llv
