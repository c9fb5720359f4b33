#include "refab/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace refab {

DiskCache DiskCache::resolve(const std::string& flag_dir) {
    if (!flag_dir.empty()) return DiskCache(flag_dir);
    if (const char* env = std::getenv("REFINED_CACHE_DIR"); env && *env)
        return DiskCache(std::string(env));
    return DiskCache();
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir_) / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void DiskCache::put(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // cache is best-effort, never fatal
    std::ofstream out(std::filesystem::path(dir_) / key, std::ios::binary | std::ios::trunc);
    out << value;
}

}  // namespace refab
