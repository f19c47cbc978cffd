#include "csdjwt/bytes.hpp"

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>
#include <memory>
#include <stdexcept>

namespace csdjwt {

Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string to_string(std::span<const uint8_t> b) {
    return std::string(b.begin(), b.end());
}

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
    std::array<uint8_t, 32> out;
    SHA256(data.data(), data.size(), out.data());
    return out;
}

std::array<uint8_t, 32> sha256(std::string_view data) {
    return sha256(std::span<const uint8_t>(
        reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

namespace {
constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '-') return 62;
    if (c == '_') return 63;
    return -1;
}
}  // namespace

std::string base64url_encode(std::span<const uint8_t> data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    size_t i = 0;
    while (i + 3 <= data.size()) {
        uint32_t n = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out += kB64Alphabet[(n >> 18) & 63];
        out += kB64Alphabet[(n >> 12) & 63];
        out += kB64Alphabet[(n >> 6) & 63];
        out += kB64Alphabet[n & 63];
        i += 3;
    }
    size_t rem = data.size() - i;
    if (rem == 1) {
        uint32_t n = data[i] << 16;
        out += kB64Alphabet[(n >> 18) & 63];
        out += kB64Alphabet[(n >> 12) & 63];
    } else if (rem == 2) {
        uint32_t n = (data[i] << 16) | (data[i + 1] << 8);
        out += kB64Alphabet[(n >> 18) & 63];
        out += kB64Alphabet[(n >> 12) & 63];
        out += kB64Alphabet[(n >> 6) & 63];
    }
    return out;
}

std::optional<Bytes> base64url_decode(std::string_view text) {
    if (text.size() % 4 == 1) return std::nullopt;
    Bytes out;
    out.reserve(text.size() / 4 * 3 + 2);
    uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        int v = b64_value(c);
        if (v < 0) return std::nullopt;
        acc = (acc << 6) | (uint32_t)v;
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back((uint8_t)(acc >> bits));
        }
    }
    // reject non-canonical trailing bits
    if (bits > 0 && (acc & ((1u << bits) - 1)) != 0) return std::nullopt;
    return out;
}

std::string hex_encode(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

Bytes random_bytes(size_t n) {
    Bytes out(n);
    if (n > 0 && RAND_bytes(out.data(), (int)n) != 1)
        throw std::runtime_error("system RNG failure");
    return out;
}

Drbg::Drbg(std::span<const uint8_t> seed) {
    key_ = sha256(seed);
}

Drbg::Drbg(uint64_t seed) {
    uint8_t buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = (uint8_t)(seed >> (56 - 8 * i));
    key_ = sha256(std::span<const uint8_t>(buf, 8));
}

void Drbg::refill() {
    uint8_t input[40];
    std::memcpy(input, key_.data(), 32);
    for (int i = 0; i < 8; ++i)
        input[32 + i] = (uint8_t)(counter_ >> (56 - 8 * i));
    block_ = sha256(std::span<const uint8_t>(input, 40));
    ++counter_;
    used_ = 0;
}

void Drbg::fill(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
        if (used_ == 32) refill();
        size_t take = std::min(out.size() - off, 32 - used_);
        std::memcpy(out.data() + off, block_.data() + used_, take);
        used_ += take;
        off += take;
    }
}

Bytes Drbg::bytes(size_t n) {
    Bytes out(n);
    fill(out);
    return out;
}

uint64_t Drbg::next_u64() {
    uint8_t buf[8];
    fill(std::span<uint8_t>(buf, 8));
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
    return v;
}

uint64_t Drbg::next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

}  // namespace csdjwt
