#ifndef HANKELKIT_OEIS_HPP
#define HANKELKIT_OEIS_HPP

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <hankelkit/hankel.hpp>

namespace hankelkit {

struct OeisMatch {
    std::string id; // A followed by six digits
    std::string name;
    std::size_t matched_prefix_length = 0;

    bool operator==(const OeisMatch&) const = default;
};

enum class LookupMode { online, offline };

class OeisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CacheError : public OeisError {
public:
    using OeisError::OeisError;
};

// Shortest query accepted by lookup.
inline constexpr std::size_t kMinLookupTerms = 4;

bool is_oeis_id(std::string_view id);

// Comma-joined terms, e.g. "1,1,2,5".
std::string cache_key(const IntegerSequence& terms);

// Length of the longest prefix of query occurring as a contiguous run in data.
std::size_t matched_prefix_length(const IntegerSequence& query, const IntegerSequence& data);

// Results ordered by matched_prefix_length descending, then id.
void sort_matches(std::vector<OeisMatch>& matches);

// Directory of JSON files named by the SHA-256 of the key. Writes go
// through a temporary file and a rename, so readers never see a torn entry.
class OeisCache {
public:
    explicit OeisCache(std::filesystem::path directory);

    // $HANKELKIT_OEIS_CACHE, else $XDG_CACHE_HOME/hankelkit/oeis, else
    // ~/.cache/hankelkit/oeis.
    static std::filesystem::path default_directory();

    const std::filesystem::path& directory() const { return directory_; }
    std::filesystem::path entry_path(std::string_view key) const;

    // Throws CacheError when the directory cannot be created or written.
    void put(std::string_view key, const std::vector<OeisMatch>& matches);
    // Missing, unreadable and corrupt entries are all misses.
    std::optional<std::vector<OeisMatch>> get(std::string_view key) const;

private:
    std::filesystem::path directory_;
    std::mutex write_mutex_;
};

struct OeisFixture {
    std::string id;
    std::string name;
    IntegerSequence terms;
};

const std::vector<OeisFixture>& oeis_fixtures();

// Parses an OEIS JSON search response (either the bare result array or the
// older {"results": [...]} object) and scores each entry against query.
// Entries whose data does not contain the first kMinLookupTerms query terms
// are dropped. Throws OeisError on malformed input.
std::vector<OeisMatch> parse_search_response(std::string_view body, const IntegerSequence& query);

// Fetches a path such as "/search?q=1,2,3&fmt=json" and returns the body.
// Throws OeisError on any transport or HTTP failure.
using HttpGet = std::function<std::string(const std::string& path)>;

// HTTPS GET against oeis.org.
HttpGet oeis_http_get();

class OeisClient {
public:
    explicit OeisClient(std::filesystem::path cache_directory, HttpGet http = oeis_http_get(),
                        std::chrono::milliseconds min_interval = std::chrono::seconds(1));

    // Online: queries the search endpoint and stores the result in the cache.
    // Offline: cache plus bundled fixtures, never touches the network and
    // never throws for lookups with enough terms.
    std::vector<OeisMatch> lookup(const IntegerSequence& terms, LookupMode mode);

    OeisCache& cache() { return cache_; }

private:
    void wait_for_slot();

    OeisCache cache_;
    HttpGet http_;
    std::chrono::milliseconds min_interval_;
    std::mutex rate_mutex_;
    std::optional<std::chrono::steady_clock::time_point> last_request_;
};

} // namespace hankelkit

#endif
