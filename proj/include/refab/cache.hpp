#ifndef REFAB_CACHE_HPP
#define REFAB_CACHE_HPP

#include <optional>
#include <string>

namespace refab {

/* Plain file-per-key cache holding canonical JSON. Transparent by contract:
 * a command's output must be byte-identical with the cache on, off, warm or
 * cold, so values are always re-rendered from the decoded object. An empty
 * directory string disables the cache entirely. */
class DiskCache {
public:
    DiskCache() = default;
    explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}

    /* Flag wins over the REFINED_CACHE_DIR environment variable; with
     * neither set the cache is disabled. */
    static DiskCache resolve(const std::string& flag_dir);

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

private:
    std::string dir_;
};

}  // namespace refab

#endif
