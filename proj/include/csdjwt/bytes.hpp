#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csdjwt {

using Bytes = std::vector<uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(std::span<const uint8_t> b);

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);
std::array<uint8_t, 32> sha256(std::string_view data);

std::string base64url_encode(std::span<const uint8_t> data);
std::optional<Bytes> base64url_decode(std::string_view text);

std::string hex_encode(std::span<const uint8_t> data);

// Cryptographic randomness (OpenSSL RAND_bytes).
Bytes random_bytes(size_t n);

// Deterministic byte stream derived from a seed via SHA-256 in counter
// mode. Used wherever reproducibility matters: fixture generation and
// seeded benchmarks.
class Drbg {
  public:
    explicit Drbg(std::span<const uint8_t> seed);
    explicit Drbg(uint64_t seed);

    void fill(std::span<uint8_t> out);
    Bytes bytes(size_t n);
    uint64_t next_u64();
    // uniform in [0, bound)
    uint64_t next_below(uint64_t bound);

  private:
    void refill();
    std::array<uint8_t, 32> key_{};
    std::array<uint8_t, 32> block_{};
    uint64_t counter_ = 0;
    size_t used_ = 32;
};

// Source of randomness shared by issuance and presentation paths: either
// the system CSPRNG or a seeded stream.
class RandomSource {
  public:
    RandomSource() = default;  // system randomness
    explicit RandomSource(uint64_t seed) : drbg_(std::make_shared<Drbg>(seed)) {}
    explicit RandomSource(std::span<const uint8_t> seed)
        : drbg_(std::make_shared<Drbg>(seed)) {}

    Bytes bytes(size_t n) {
        if (drbg_) return drbg_->bytes(n);
        return random_bytes(n);
    }
    bool deterministic() const { return drbg_ != nullptr; }
    Drbg* drbg() { return drbg_.get(); }

  private:
    std::shared_ptr<Drbg> drbg_;
};

}  // namespace csdjwt
