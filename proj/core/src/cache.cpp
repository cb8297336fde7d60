#include "fermatsha/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fermatsha {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string render_records(const std::map<int64_t, std::vector<int64_t>>& records) {
    std::ostringstream body;
    for (const auto& [p, values] : records) {
        body << p;
        for (int64_t v : values) body << ' ' << v;
        body << '\n';
    }
    return body.str();
}

// Returns false on any structural problem; the caller rebuilds.
bool parse_cache(std::istream& in, std::map<int64_t, std::vector<int64_t>>& records) {
    std::string magic;
    int version = 0;
    uint64_t checksum = 0;
    if (!(in >> magic >> version)) return false;
    if (magic != kCacheMagic || version != kCacheFormatVersion) return false;
    if (!(in >> std::hex >> checksum >> std::dec)) return false;
    std::string rest;
    {
        std::ostringstream ss;
        in.ignore(1);  // newline after the checksum
        ss << in.rdbuf();
        rest = ss.str();
    }
    if (fnv1a(rest) != checksum) return false;

    std::istringstream body(rest);
    std::string line;
    while (std::getline(body, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int64_t p = 0;
        if (!(ls >> p) || p < 5) return false;
        std::vector<int64_t> values;
        int64_t v;
        while (ls >> v) values.push_back(v);
        if (values.size() != static_cast<size_t>((p - 3) / 2)) return false;
        records[p] = std::move(values);
    }
    return true;
}

void write_cache(const std::filesystem::path& path,
                 const std::map<int64_t, std::vector<int64_t>>& records) {
    const std::string body = render_records(records);
    const std::filesystem::path tmp = path.string() + ".tmp";
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InternalError("cache: cannot write " + tmp.string());
        out << kCacheMagic << ' ' << kCacheFormatVersion << '\n';
        out << std::hex << fnv1a(body) << std::dec << '\n';
        out << body;
        if (!out) throw InternalError("cache: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

BernoulliTable table_from_values(int64_t p, std::vector<int64_t> values) {
    BernoulliTable t;
    t.p = p;
    t.even_values = std::move(values);
    for (int64_t k = 2; k <= p - 3; k += 2)
        if (t.even_values[static_cast<size_t>((k - 2) / 2)] == 0)
            t.irregular_indices.push_back(k);
    t.is_regular = t.irregular_indices.empty();
    return t;
}

}  // namespace

CacheResult cache_load_or_build(const OddPrime& prime,
                                const std::filesystem::path& path) {
    const int64_t p = prime.value();
    std::map<int64_t, std::vector<int64_t>> records;

    {
        std::ifstream in(path);
        if (in && !parse_cache(in, records)) {
            std::cerr << "warning: cache file " << path
                      << " is corrupt or stale; rebuilding\n";
            records.clear();
        }
    }

    if (auto it = records.find(p); it != records.end())
        return {table_from_values(p, it->second), true};

    const BernoulliTable table = bernoulli_table(prime);
    records[p] = table.even_values;
    try {
        write_cache(path, records);
    } catch (const std::exception& e) {
        // an unwritable cache location degrades to recomputation, not failure
        std::cerr << "warning: " << e.what() << "\n";
    }
    return {table, false};
}

std::filesystem::path resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
    std::filesystem::path base;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        base = xdg;
    else if (const char* home = std::getenv("HOME"); home && *home)
        base = std::filesystem::path(home) / ".cache";
    else
        base = std::filesystem::temp_directory_path();
    return base / "fermat-sha" / "bernoulli.cache";
}

}  // namespace fermatsha
