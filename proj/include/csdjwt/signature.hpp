#pragma once

#include <stdexcept>

#include "csdjwt/bytes.hpp"

namespace csdjwt {

// ECDSA over P-256 with SHA-256 (JWT "ES256"), the EUF-CMA signature
// scheme used by issuers and holders. Signatures are raw r||s, 64 bytes.

class SignatureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Es256PublicKey {
    Bytes sec1;  // SEC1 point, compressed (33 bytes) or uncompressed (65)

    bool verify(std::span<const uint8_t> message,
                std::span<const uint8_t> signature) const;
    bool verify(std::string_view message,
                std::span<const uint8_t> signature) const;

    // 0x04 || x || y form, e.g. for JWK coordinates.
    Bytes uncompressed() const;
};

class Es256PrivateKey {
  public:
    // Derives the key from the given randomness source (seeded sources
    // give reproducible keys).
    static Es256PrivateKey generate(RandomSource rng = {});
    static Es256PrivateKey from_scalar(std::span<const uint8_t> scalar32);

    Bytes sign(std::span<const uint8_t> message) const;
    Bytes sign(std::string_view message) const;

    const std::array<uint8_t, 32>& scalar() const { return scalar_; }
    const Es256PublicKey& public_key() const { return pub_; }

  private:
    std::array<uint8_t, 32> scalar_{};
    Es256PublicKey pub_;
};

}  // namespace csdjwt
