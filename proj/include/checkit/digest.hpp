#ifndef CHECKIT_DIGEST_HPP
#define CHECKIT_DIGEST_HPP

#include <string>
#include <string_view>

namespace checkit::digest {

// SHA-256, lowercase hex.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file_hex(const std::string& path);

} // namespace checkit::digest

#endif
