#include "gseries/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace gseries::cli {

namespace {

constexpr std::string_view kMagic = "gseries-cache 1";

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string CacheKey::filename() const
{
    return artifact + "-k" + std::to_string(k) + "-N" + std::to_string(order) + "-v" + std::to_string(version) + ".cache";
}

std::filesystem::path Cache::default_directory()
{
    if (const char* env = std::getenv("GSERIES_CACHE_DIR"); env && *env) {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "gseries";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "gseries";
    }
    return {};
}

std::optional<std::string> Cache::load(const CacheKey& key) const
{
    if (!enabled()) {
        return std::nullopt;
    }
    std::ifstream in(dir_ / key.filename(), std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::string magic;
    std::string checksum_line;
    if (!std::getline(in, magic) || magic != kMagic || !std::getline(in, checksum_line)) {
        return std::nullopt;
    }
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (checksum_line != "checksum " + hex64(fnv1a64(payload))) {
        return std::nullopt;
    }
    return payload;
}

bool Cache::store(const CacheKey& key, const std::string& payload) const
{
    if (!enabled()) {
        return false;
    }
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        return false;
    }
    const auto target = dir_ / key.filename();
    const auto tmp = dir_ / (key.filename() + ".tmp." + std::to_string(::getpid()) + "." +
                             std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            return false;
        }
        out << kMagic << '\n' << "checksum " << hex64(fnv1a64(payload)) << '\n' << payload;
        if (!out.flush()) {
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        return false;
    }
    return true;
}

} // namespace gseries::cli
