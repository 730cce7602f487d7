#pragma once

// On-disk cache for expensive exact artifacts. Entries carry an FNV-1a
// checksum; a mismatch is treated as a miss so corruption only costs a
// recomputation.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace gseries::cli {

std::uint64_t fnv1a64(std::string_view data);

struct CacheKey {
    std::string artifact;
    int k = 0;
    std::int64_t order = 0;
    int version = 1;

    std::string filename() const;
};

class Cache {
public:
    Cache() = default;  // disabled
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    // $GSERIES_CACHE_DIR, else $XDG_CACHE_HOME/gseries, else ~/.cache/gseries.
    static std::filesystem::path default_directory();

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& directory() const { return dir_; }

    std::optional<std::string> load(const CacheKey& key) const;
    // Writes to a temporary file and renames it into place. Returns false
    // (without throwing) if the directory is not writable.
    bool store(const CacheKey& key, const std::string& payload) const;

private:
    std::filesystem::path dir_;
};

} // namespace gseries::cli
