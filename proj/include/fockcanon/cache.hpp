#pragma once
// Memoizing store for computed column sets, with optional on-disk
// persistence: versioned, checksummed JSON files written atomically via a
// temp file + rename.  Corrupt or mismatched files are recomputed and
// rewritten; an unusable directory degrades to memory-only operation.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "json_io.hpp"

namespace fockcanon {

inline constexpr int cache_format_version = 1;

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Precedence: explicit flag, then FOCK_CANON_CACHE_DIR, then a per-user
// cache directory.  Returns nullopt when nothing is available.
inline std::optional<std::string> resolve_cache_dir(
    const std::optional<std::string>& flag = std::nullopt) {
    if (flag && !flag->empty()) return flag;
    if (const char* env = std::getenv("FOCK_CANON_CACHE_DIR"); env && *env)
        return std::string(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/fock-canon";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/fock-canon";
    return std::nullopt;
}

class CanonicalStore {
   public:
    // Memory-only by default; pass a directory to persist column sets.
    explicit CanonicalStore(std::optional<std::string> dir = std::nullopt)
        : dir_(std::move(dir)) {}

    using Columns = std::vector<CanonicalColumn>;

    const Columns& get(int n, int e) {
        std::shared_ptr<Entry> entry;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto& slot = mem_[{n, e}];
            if (!slot) slot = std::make_shared<Entry>();
            entry = slot;
        }
        std::call_once(entry->once, [&] { entry->columns = load_or_compute(n, e); });
        return entry->columns;
    }

    // Diagnostics for the most recent disk interaction, for logging.
    std::string last_note() const {
        std::lock_guard<std::mutex> lock(mu_);
        return note_;
    }

   private:
    struct Entry {
        std::once_flag once;
        Columns columns;
    };

    Columns load_or_compute(int n, int e) {
        if (dir_) {
            if (auto cols = read_file(n, e)) return std::move(*cols);
        }
        Columns cols = llt_canonical(n, e);
        if (dir_) write_file(n, e, cols);
        return cols;
    }

    std::filesystem::path file_path(int n, int e) const {
        std::ostringstream name;
        name << "canonical-e" << e << "-n" << n << "-v" << cache_format_version << ".json";
        return std::filesystem::path(*dir_) / name.str();
    }

    std::optional<Columns> read_file(int n, int e) {
        std::error_code ec;
        std::filesystem::path path = file_path(n, e);
        if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
        try {
            std::ifstream in(path);
            if (!in) return std::nullopt;
            Json wrapper = Json::parse(in);
            if (wrapper.value("version", -1) != cache_format_version) {
                set_note("cache file " + path.string() + " has a stale version; recomputing");
                return std::nullopt;
            }
            std::string payload = wrapper.at("payload").get<std::string>();
            std::ostringstream want;
            want << std::hex << fnv1a64(payload);
            if (wrapper.value("checksum", std::string()) != want.str()) {
                set_note("cache file " + path.string() + " failed its checksum; recomputing");
                return std::nullopt;
            }
            return columns_from_json(Json::parse(payload), n, e);
        } catch (const std::exception& ex) {
            set_note("cache file " + path.string() + " unreadable (" + ex.what() +
                     "); recomputing");
            return std::nullopt;
        }
    }

    void write_file(int n, int e, const Columns& cols) {
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        if (ec) {
            set_note("cache directory " + *dir_ + " unavailable; continuing without disk cache");
            return;
        }
        std::string payload = columns_to_json(cols, n, e).dump();
        Json wrapper;
        wrapper["version"] = cache_format_version;
        std::ostringstream sum;
        sum << std::hex << fnv1a64(payload);
        wrapper["checksum"] = sum.str();
        wrapper["payload"] = std::move(payload);

        std::filesystem::path path = file_path(n, e);
        std::filesystem::path temp = path;
        temp += ".tmp-" + std::to_string(
                              std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000);
        {
            std::ofstream out(temp, std::ios::trunc);
            if (!out) {
                set_note("cache file " + temp.string() +
                         " not writable; continuing without disk cache");
                return;
            }
            out << wrapper.dump();
            if (!out.good()) {
                set_note("cache write to " + temp.string() + " failed; continuing without it");
                return;
            }
        }
        std::filesystem::rename(temp, path, ec);
        if (ec) {
            std::filesystem::remove(temp, ec);
            set_note("cache rename into " + path.string() + " failed; continuing without it");
        }
    }

    void set_note(std::string text) {
        std::lock_guard<std::mutex> lock(mu_);
        note_ = std::move(text);
    }

    std::optional<std::string> dir_;
    mutable std::mutex mu_;
    std::map<std::pair<int, int>, std::shared_ptr<Entry>> mem_;
    std::string note_;
};

}  // namespace fockcanon
