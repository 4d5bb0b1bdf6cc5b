#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leginet {

/// Fatal configuration or usage problem (bad flag, missing required file).
/// Mapped to exit code 1 by the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fatal data-integrity problem (duplicate key, corrupt ground truth).
/// Mapped to exit code 2 by the CLI.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_lower(std::string_view s);

/// Collapse every whitespace run to a single space and trim the ends.
std::string collapse_spaces(std::string_view s);

std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string> split_on(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_digits(std::string_view tok);

/// True when tok is exactly four digits and its value lies in [lo, hi].
bool is_year_token(std::string_view tok, int lo = 1200, int hi = 2100);

/// Last whitespace-delimited token of `text` that passes is_year_token.
std::optional<int> last_year_token(std::string_view text, int lo = 1200, int hi = 2100);

std::string fmt_double(double v, int precision);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

/// Deterministic RNG used everywhere randomness is needed. Wraps mt19937_64
/// but draws uniform integers by rejection on the raw stream so results do
/// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Independent child stream keyed by (seed, a, b); same key, same stream.
    static Rng derive(uint64_t seed, uint64_t a, uint64_t b = 0);

    uint64_t next() { return gen_(); }

    /// Uniform integer in [0, n); n must be positive.
    uint64_t below(uint64_t n);

    /// Uniform double in [0, 1).
    double unit();

    /// Uniform integer in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices drawn uniformly from [0, n), in sorted order.
    std::vector<uint64_t> sample_distinct(uint64_t k, uint64_t n);

private:
    std::mt19937_64 gen_;
};

}  // namespace leginet
