#ifndef CHECKIT_UTIL_HPP
#define CHECKIT_UTIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace checkit::util {

// ---- UTF-8 ----------------------------------------------------------------

// Strict validation: rejects overlong encodings, surrogates and values
// beyond U+10FFFF.
bool is_valid_utf8(std::string_view s);

// Decodes one code point starting at byte offset `i`; advances `i` past it.
// Returns U+FFFD and advances by one byte on malformed input.
char32_t decode_utf8(std::string_view s, std::size_t& i);

std::vector<char32_t> to_codepoints(std::string_view s);

void encode_utf8(char32_t cp, std::string& out);

// ---- character classes (ASCII + Latin-1 letters are enough for our texts,
// anything above is treated as a generic letter) -----------------------------

bool is_letter(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);
bool is_digit(char32_t c);
bool is_space(char32_t c);
char32_t to_lower(char32_t c);

// Lowercases ASCII letters only; leaves other bytes alone.
std::string ascii_lower(std::string_view s);

// ---- small string helpers ---------------------------------------------------

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// ---- CSV (RFC 4180 quoting, just enough for our matrix and flag-list files) -

std::string csv_escape(std::string_view field);
std::vector<std::string> csv_parse_line(std::string_view line, std::size_t line_no);
std::string csv_join(const std::vector<std::string>& fields);

// ---- deterministic RNG ------------------------------------------------------

// Thin wrapper over a 64-bit SplitMix/xoshiro-style generator so that seeded
// runs are bit-identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    // Uniform in [0, 1).
    double next_double();
    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n);
    // Uniform in [lo, hi).
    double next_range(double lo, double hi);
    // Standard normal via Box-Muller.
    double next_gaussian();
    // Poisson-distributed count (Knuth for small lambda, normal approx above).
    std::uint64_t next_poisson(double lambda);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
    bool have_gaussian_ = false;
    double spare_gaussian_ = 0.0;
};

// ---- misc -------------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
std::string iso8601_utc_now();

} // namespace checkit::util

#endif
