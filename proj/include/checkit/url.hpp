#ifndef CHECKIT_URL_HPP
#define CHECKIT_URL_HPP

#include <optional>
#include <string>
#include <string_view>

namespace checkit::url {

struct Url {
    std::string scheme; // lowercase
    std::string host;   // as written, minus userinfo/port
    std::string port;   // digits, may be empty
    std::string path;   // everything after the authority (path + query + fragment)
};

// Parses an absolute URL of the form scheme://[user@]host[:port][/...].
// Returns nullopt when there is no scheme or the host is empty.
std::optional<Url> parse(std::string_view raw);

// Punycode (RFC 3492) encoding of one Unicode label, without the "xn--"
// prefix. Labels that are already ASCII come back unchanged.
std::string punycode_encode_label(std::string_view utf8_label);

// Lowercase, strip one leading "www.", strip port, encode IDN labels to
// their xn-- form. Throws ValidationError when the URL cannot be parsed.
std::string normalize_domain(std::string_view raw_url);

// Same normalization applied directly to a bare host string.
std::string normalize_host(std::string_view host);

} // namespace checkit::url

#endif
