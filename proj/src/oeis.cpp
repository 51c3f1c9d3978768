#include <hankelkit/oeis.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

namespace hankelkit {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_hex(std::string_view text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw CacheError("sha256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

json matches_to_json(const std::vector<OeisMatch>& matches) {
    json out = json::array();
    for (const auto& m : matches) {
        out.push_back({{"id", m.id}, {"name", m.name}, {"matched_prefix_length", m.matched_prefix_length}});
    }
    return out;
}

std::vector<OeisMatch> matches_from_json(const json& j) {
    std::vector<OeisMatch> out;
    for (const auto& e : j) {
        OeisMatch m{e.at("id").get<std::string>(), e.at("name").get<std::string>(),
                    e.at("matched_prefix_length").get<std::size_t>()};
        if (!is_oeis_id(m.id)) {
            throw std::invalid_argument("bad id");
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::string format_id(long number) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "A%06ld", number);
    return buf;
}

// Union by id, keeping the longer match.
void merge_into(std::vector<OeisMatch>& into, const std::vector<OeisMatch>& from) {
    for (const auto& m : from) {
        auto it = std::find_if(into.begin(), into.end(), [&](const OeisMatch& x) { return x.id == m.id; });
        if (it == into.end()) {
            into.push_back(m);
        } else if (m.matched_prefix_length > it->matched_prefix_length) {
            *it = m;
        }
    }
}

} // namespace

bool is_oeis_id(std::string_view id) {
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string cache_key(const IntegerSequence& terms) {
    std::string key;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            key += ',';
        }
        key += terms[i].get_str();
    }
    return key;
}

std::size_t matched_prefix_length(const IntegerSequence& query, const IntegerSequence& data) {
    std::size_t best = 0;
    for (std::size_t start = 0; start < data.size(); ++start) {
        std::size_t k = 0;
        while (k < query.size() && start + k < data.size() && data[start + k] == query[k]) {
            ++k;
        }
        best = std::max(best, k);
        if (best == query.size()) {
            break;
        }
    }
    return best;
}

void sort_matches(std::vector<OeisMatch>& matches) {
    std::sort(matches.begin(), matches.end(), [](const OeisMatch& a, const OeisMatch& b) {
        if (a.matched_prefix_length != b.matched_prefix_length) {
            return a.matched_prefix_length > b.matched_prefix_length;
        }
        return a.id < b.id;
    });
}

OeisCache::OeisCache(fs::path directory) : directory_(std::move(directory)) {}

fs::path OeisCache::default_directory() {
    if (const char* dir = std::getenv("HANKELKIT_OEIS_CACHE"); dir && *dir) {
        return dir;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return fs::path(xdg) / "hankelkit" / "oeis";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return fs::path(home) / ".cache" / "hankelkit" / "oeis";
    }
    return fs::temp_directory_path() / "hankelkit-oeis";
}

fs::path OeisCache::entry_path(std::string_view key) const { return directory_ / (sha256_hex(key) + ".json"); }

void OeisCache::put(std::string_view key, const std::vector<OeisMatch>& matches) {
    static std::atomic<unsigned long> counter{0};
    const std::lock_guard lock(write_mutex_);
    std::error_code ec;
    fs::create_directories(directory_, ec);
    if (ec) {
        throw CacheError("cannot create cache directory " + directory_.string() + ": " + ec.message());
    }
    const fs::path target = entry_path(key);
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id() << '.' << counter++;
    const fs::path tmp = target.string() + suffix.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << json{{"key", std::string(key)}, {"matches", matches_to_json(matches)}}.dump();
        out.flush();
        if (!out) {
            fs::remove(tmp, ec);
            throw CacheError("cannot write cache entry in " + directory_.string());
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw CacheError("cannot replace cache entry " + target.string() + ": " + ec.message());
    }
}

std::optional<std::vector<OeisMatch>> OeisCache::get(std::string_view key) const {
    std::ifstream in(entry_path(key), std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    try {
        const json j = json::parse(in);
        if (j.at("key").get<std::string>() != key) {
            return std::nullopt;
        }
        return matches_from_json(j.at("matches"));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<OeisMatch> parse_search_response(std::string_view body, const IntegerSequence& query) {
    json j;
    try {
        j = json::parse(body);
    } catch (const json::exception& e) {
        throw OeisError(std::string("malformed OEIS response: ") + e.what());
    }
    const json* results = &j;
    if (j.is_object()) {
        if (!j.contains("results")) {
            throw OeisError("malformed OEIS response: no results field");
        }
        results = &j.at("results");
    }
    std::vector<OeisMatch> out;
    if (results->is_null()) {
        return out;
    }
    if (!results->is_array()) {
        throw OeisError("malformed OEIS response: results is not a list");
    }
    const std::size_t needed = std::min(query.size(), kMinLookupTerms);
    try {
        for (const auto& r : *results) {
            const std::size_t length =
                matched_prefix_length(query, parse_sequence(r.at("data").get<std::string>()));
            if (length < needed) {
                continue;
            }
            out.push_back({format_id(r.at("number").get<long>()), r.value("name", std::string()), length});
        }
    } catch (const std::exception& e) {
        throw OeisError(std::string("malformed OEIS response: ") + e.what());
    }
    sort_matches(out);
    return out;
}

HttpGet oeis_http_get() {
    return [](const std::string& path) {
        httplib::Client client("https://oeis.org");
        client.set_connection_timeout(10);
        client.set_read_timeout(20);
        client.set_follow_location(true);
        const auto res = client.Get(path);
        if (!res) {
            throw OeisError("network failure: " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw OeisError("OEIS returned HTTP status " + std::to_string(res->status));
        }
        return res->body;
    };
}

OeisClient::OeisClient(fs::path cache_directory, HttpGet http, std::chrono::milliseconds min_interval)
    : cache_(std::move(cache_directory)), http_(std::move(http)), min_interval_(min_interval) {}

void OeisClient::wait_for_slot() {
    const std::lock_guard lock(rate_mutex_);
    const auto now = std::chrono::steady_clock::now();
    if (last_request_ && now - *last_request_ < min_interval_) {
        std::this_thread::sleep_for(min_interval_ - (now - *last_request_));
    }
    last_request_ = std::chrono::steady_clock::now();
}

std::vector<OeisMatch> OeisClient::lookup(const IntegerSequence& terms, LookupMode mode) {
    if (terms.size() < kMinLookupTerms) {
        throw std::invalid_argument("OEIS lookup needs at least " + std::to_string(kMinLookupTerms) + " terms, got " +
                                    std::to_string(terms.size()));
    }
    const std::string key = cache_key(terms);

    if (mode == LookupMode::online) {
        if (!http_) {
            throw OeisError("no HTTP transport configured");
        }
        wait_for_slot();
        std::string body;
        try {
            body = http_("/search?q=" + key + "&fmt=json");
        } catch (const OeisError&) {
            throw;
        } catch (const std::exception& e) {
            throw OeisError(std::string("network failure: ") + e.what());
        }
        std::vector<OeisMatch> matches = parse_search_response(body, terms);
        cache_.put(key, matches);
        return matches;
    }

    std::vector<OeisMatch> matches = cache_.get(key).value_or(std::vector<OeisMatch>{});
    std::vector<OeisMatch> fixture_hits;
    for (const auto& f : oeis_fixtures()) {
        const std::size_t length = matched_prefix_length(terms, f.terms);
        if (length >= kMinLookupTerms) {
            fixture_hits.push_back({f.id, f.name, length});
        }
    }
    merge_into(matches, fixture_hits);
    sort_matches(matches);
    return matches;
}

} // namespace hankelkit
