#include "checkit/url.hpp"

#include "checkit/error.hpp"
#include "checkit/util.hpp"

#include <cstdint>

namespace checkit::url {

std::optional<Url> parse(std::string_view raw) {
    auto scheme_end = raw.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0) return std::nullopt;
    Url u;
    u.scheme = util::ascii_lower(raw.substr(0, scheme_end));
    for (char c : u.scheme)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'))
            return std::nullopt;

    std::string_view rest = raw.substr(scheme_end + 3);
    auto authority_end = rest.find_first_of("/?#");
    std::string_view authority = rest.substr(0, authority_end);
    if (authority_end != std::string_view::npos) u.path = std::string(rest.substr(authority_end));

    // drop userinfo
    auto at = authority.rfind('@');
    if (at != std::string_view::npos) authority = authority.substr(at + 1);

    // split off a port (last colon with only digits after it)
    auto colon = authority.rfind(':');
    if (colon != std::string_view::npos) {
        std::string_view maybe_port = authority.substr(colon + 1);
        bool all_digits = !maybe_port.empty();
        for (char c : maybe_port)
            if (c < '0' || c > '9') all_digits = false;
        if (all_digits) {
            u.port = std::string(maybe_port);
            authority = authority.substr(0, colon);
        }
    }
    if (authority.empty()) return std::nullopt;
    u.host = std::string(authority);
    return u;
}

// ---- punycode (RFC 3492) ----------------------------------------------------

namespace {

constexpr std::uint32_t kBase = 36;
constexpr std::uint32_t kTMin = 1;
constexpr std::uint32_t kTMax = 26;
constexpr std::uint32_t kSkew = 38;
constexpr std::uint32_t kDamp = 700;
constexpr std::uint32_t kInitialBias = 72;
constexpr std::uint32_t kInitialN = 128;

char encode_digit(std::uint32_t d) {
    return d < 26 ? static_cast<char>('a' + d) : static_cast<char>('0' + d - 26);
}

std::uint32_t adapt(std::uint32_t delta, std::uint32_t numpoints, bool first_time) {
    delta = first_time ? delta / kDamp : delta / 2;
    delta += delta / numpoints;
    std::uint32_t k = 0;
    while (delta > ((kBase - kTMin) * kTMax) / 2) {
        delta /= kBase - kTMin;
        k += kBase;
    }
    return k + (((kBase - kTMin + 1) * delta) / (delta + kSkew));
}

} // namespace

std::string punycode_encode_label(std::string_view utf8_label) {
    auto cps = util::to_codepoints(utf8_label);
    bool all_ascii = true;
    for (char32_t c : cps)
        if (c >= 0x80) all_ascii = false;
    if (all_ascii) return std::string(utf8_label);

    std::string out;
    std::uint32_t handled = 0;
    for (char32_t c : cps) {
        if (c < 0x80) {
            out += static_cast<char>(c);
            ++handled;
        }
    }
    const std::uint32_t basic_count = handled;
    if (basic_count > 0) out += '-';

    std::uint32_t n = kInitialN;
    std::uint32_t delta = 0;
    std::uint32_t bias = kInitialBias;
    while (handled < cps.size()) {
        std::uint32_t m = 0x10FFFF + 1;
        for (char32_t c : cps)
            if (c >= n && static_cast<std::uint32_t>(c) < m) m = static_cast<std::uint32_t>(c);
        delta += (m - n) * (handled + 1);
        n = m;
        for (char32_t cc : cps) {
            std::uint32_t c = static_cast<std::uint32_t>(cc);
            if (c < n) ++delta;
            if (c == n) {
                std::uint32_t q = delta;
                for (std::uint32_t k = kBase;; k += kBase) {
                    std::uint32_t t = k <= bias ? kTMin : (k >= bias + kTMax ? kTMax : k - bias);
                    if (q < t) break;
                    out += encode_digit(t + (q - t) % (kBase - t));
                    q = (q - t) / (kBase - t);
                }
                out += encode_digit(q);
                bias = adapt(delta, handled + 1, handled == basic_count);
                delta = 0;
                ++handled;
            }
        }
        ++delta;
        ++n;
    }
    return out;
}

// ---- domain normalization -----------------------------------------------------

std::string normalize_host(std::string_view host) {
    // lowercase (ASCII part; non-ASCII handled by punycode per label)
    std::string lowered;
    lowered.reserve(host.size());
    std::size_t i = 0;
    while (i < host.size()) {
        std::size_t start = i;
        char32_t cp = util::decode_utf8(host, i);
        if (cp < 0x80) {
            lowered += static_cast<char>(util::to_lower(cp));
        } else {
            char32_t low = util::to_lower(cp);
            if (low != cp && low < 0x80) {
                lowered += static_cast<char>(low);
            } else if (low != cp) {
                // re-encode the lowered Latin-1 code point as UTF-8
                lowered += static_cast<char>(0xC0 | (low >> 6));
                lowered += static_cast<char>(0x80 | (low & 0x3F));
            } else {
                lowered.append(host.substr(start, i - start));
            }
        }
    }

    std::string_view h = lowered;
    if (util::starts_with(h, "www.") && h.size() > 4) h = h.substr(4);

    std::string out;
    auto labels = util::split(h, '.');
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k) out += '.';
        std::string enc = punycode_encode_label(labels[k]);
        if (enc != labels[k]) out += "xn--" + enc;
        else out += enc;
    }
    return out;
}

std::string normalize_domain(std::string_view raw_url) {
    auto u = parse(raw_url);
    if (!u) {
        // accept a bare host as a convenience for flag-list entries
        if (raw_url.find('/') == std::string_view::npos &&
            raw_url.find("://") == std::string_view::npos && !raw_url.empty()) {
            std::string_view h = raw_url;
            auto colon = h.rfind(':');
            if (colon != std::string_view::npos) h = h.substr(0, colon);
            if (!h.empty()) return normalize_host(h);
        }
        throw ValidationError("unparseable URL: '" + std::string(raw_url) + "'");
    }
    return normalize_host(u->host);
}

} // namespace checkit::url
