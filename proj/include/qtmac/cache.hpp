/*
   Copyright 2026 The qtmac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// On-disk result cache. One JSON file per key; writes go to a temporary file in the same
// directory and are renamed into place, so readers never observe a partial entry. Entries
// that fail to parse or whose stored key disagrees are deleted and reported as misses.

#include <qtmac/io.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>

#include <unistd.h>

namespace qtmac {

inline constexpr const char* kCacheEnvVar = "QTMAC_CACHE_DIR";
// Bump when any cached computation changes its output.
inline constexpr const char* kCacheSchema = "qtmac-cache-1";

class CacheError : public std::runtime_error {
   public:
    CacheError(const std::string& what, const std::filesystem::path& path)
        : std::runtime_error(what + ": " + path.string()), path_(path) {}
    const std::filesystem::path& path() const { return path_; }

   private:
    std::filesystem::path path_;
};

struct CacheKey {
    std::string kind;  // e.g. "P", "J", "Jmod", "K", "B"
    Partition partition;
    int n = 0;

    /// FNV-1a of the schema tag; changes whenever the code parameters do.
    static std::string version() {
        std::uint64_t h = 1469598103934665603ULL;
        for (const char* p = kCacheSchema; *p; ++p) h = (h ^ static_cast<unsigned char>(*p)) * 1099511628211ULL;
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
    }

    std::string file_name() const {
        std::string part;
        for (int p : partition.parts()) part += (part.empty() ? "" : "-") + std::to_string(p);
        if (part.empty()) part = "0";
        return kind + "_" + part + "_n" + std::to_string(n) + "_" + version() + ".json";
    }

    Json to_json() const { return Json{{"kind", kind}, {"partition", qtmac::to_json(partition)}, {"n", n}, {"version", version()}}; }
};

/// Cache root: the flag when given, else the environment variable, else none.
inline std::optional<std::filesystem::path> resolve_cache_root(const std::optional<std::string>& flag, bool disabled) {
    if (disabled) return std::nullopt;
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

class Cache {
   public:
    explicit Cache(std::filesystem::path root) : root_(std::move(root)) {
        std::error_code ec;
        std::filesystem::create_directories(root_, ec);
        if (ec) throw CacheError("cannot create cache directory (" + ec.message() + ")", root_);
    }

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_of(const CacheKey& key) const { return root_ / key.file_name(); }

    /// The stored payload, or nullopt on a miss. Corrupted entries are evicted.
    std::optional<Json> get(const CacheKey& key) const {
        const auto path = path_of(key);
        std::error_code ec;
        if (!std::filesystem::exists(path, ec)) return std::nullopt;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw CacheError("cannot open cache entry", path);
        try {
            Json doc = Json::parse(in);
            if (doc.at("key") == key.to_json() && doc.contains("payload")) return doc.at("payload");
        } catch (const Json::exception&) {
        }
        in.close();
        std::filesystem::remove(path, ec);
        return std::nullopt;
    }

    void put(const CacheKey& key, const Json& payload) const {
        const auto path = path_of(key);
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        Json doc{{"key", key.to_json()},
                 {"created_at", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                 {"payload", payload}};
        static std::atomic<unsigned> counter{0};
        std::ostringstream tmpname;
        tmpname << "." << key.file_name() << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "." << counter++;
        const auto tmp = root_ / tmpname.str();
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw CacheError("cannot write cache entry", tmp);
            out << doc.dump() << "\n";
            out.flush();
            if (!out) throw CacheError("cannot write cache entry", tmp);
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw CacheError("cannot move cache entry into place", path);
        }
    }

   private:
    std::filesystem::path root_;
};

}  // namespace qtmac
