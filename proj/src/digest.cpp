#include "checkit/digest.hpp"

#include "checkit/error.hpp"
#include "checkit/util.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace checkit::digest {

namespace {

std::string to_hex(const unsigned char* bytes, std::size_t n) {
    static const char* hexdigits = "0123456789abcdef";
    std::string out;
    out.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        out += hexdigits[bytes[i] >> 4];
        out += hexdigits[bytes[i] & 0xF];
    }
    return out;
}

} // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &md_len, EVP_sha256(), nullptr))
        throw RuntimeError("SHA-256 digest failed");
    return to_hex(md, md_len);
}

std::string sha256_file_hex(const std::string& path) {
    return sha256_hex(util::read_file(path));
}

} // namespace checkit::digest
