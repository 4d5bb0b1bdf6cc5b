#include "leginet/util.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace leginet {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string collapse_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char c : s) {
        if (is_space(c)) {
            pending = !out.empty();
        } else {
            if (pending) out.push_back(' ');
            pending = false;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        size_t j = i;
        while (j < s.size() && !is_space(s[j])) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

bool is_digits(std::string_view tok) {
    if (tok.empty()) return false;
    return std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_year_token(std::string_view tok, int lo, int hi) {
    if (tok.size() != 4 || !is_digits(tok)) return false;
    int v = 0;
    std::from_chars(tok.data(), tok.data() + tok.size(), v);
    return v >= lo && v <= hi;
}

std::optional<int> last_year_token(std::string_view text, int lo, int hi) {
    std::optional<int> year;
    for (const auto& tok : split_ws(text)) {
        if (is_year_token(tok, lo, hi)) year = std::stoi(tok);
    }
    return year;
}

std::string fmt_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ConfigError("write failed: " + path);
}

static uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::derive(uint64_t seed, uint64_t a, uint64_t b) {
    uint64_t mixed = splitmix64(seed ^ splitmix64(a ^ splitmix64(b)));
    return Rng(mixed);
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

double Rng::unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

int64_t Rng::range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
}

std::vector<uint64_t> Rng::sample_distinct(uint64_t k, uint64_t n) {
    if (k > n) throw std::invalid_argument("sample_distinct: k > n");
    std::vector<uint64_t> out;
    out.reserve(k);
    if (k * 3 >= n) {
        std::vector<uint64_t> all(n);
        for (uint64_t i = 0; i < n; ++i) all[i] = i;
        for (uint64_t i = 0; i < k; ++i) {
            uint64_t j = i + below(n - i);
            std::swap(all[i], all[j]);
            out.push_back(all[i]);
        }
    } else {
        std::unordered_set<uint64_t> seen;
        while (out.size() < k) {
            uint64_t x = below(n);
            if (seen.insert(x).second) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace leginet
