#pragma once

#include "csdjwt/protocol.hpp"

namespace csdjwt::sd {

// SD-JWT comparison baseline: the issuer signs a payload carrying one
// salted-claim digest per claim (plus optional decoys); the holder keeps
// the Salt-Value Container and discloses salt-claim pairs selectively.

struct SaltedDisclosure {
    Bytes salt;  // exactly 16 bytes
    Claim claim;

    // base64url of the canonical JSON array [salt_b64url, key, value]
    std::string encoded() const;
    static std::optional<SaltedDisclosure> decode(std::string_view segment);

    // SHA-256 over the encoded segment string
    std::array<uint8_t, 32> digest() const;

    bool operator==(const SaltedDisclosure& o) const {
        return salt == o.salt && claim == o.claim;
    }
};

struct SdJwtCredential {
    std::string issuer_did;
    std::string holder_did;
    std::string credential_type;
    int64_t issued_at = 0;
    int64_t expires_at = 0;
    std::vector<std::string> digests;  // base64url digests, shuffled order
    Bytes holder_jwk;                  // uncompressed SEC1 point (65 bytes)
    Bytes issuer_signature;            // ES256 over header.payload
    std::vector<SaltedDisclosure> svc;  // claim order; empty inside presentations
    size_t decoy_count = 0;
};

struct SdIssueOptions {
    std::string credential_type = "vc+sd-jwt";
    int64_t issued_at = 0;  // 0 means "now"
    int64_t validity_seconds = 86400 * 365;
    size_t decoy_count = 0;
    RandomSource rng;
};

SdJwtCredential sd_issue(const IssuerIdentity& issuer,
                         const std::string& holder_did,
                         const Es256PublicKey& holder_key,
                         std::span<const Claim> claims,
                         const SdIssueOptions& options = {});

struct SdJwtPresentation {
    SdJwtCredential credential;  // signed part only; svc is empty
    std::vector<SaltedDisclosure> disclosed;
    std::string audience;
    Bytes nonce;
    int64_t kb_issued_at = 0;
    Bytes kb_signature;  // holder ES256 over the key-binding JWT
};

SdJwtPresentation sd_present(const SdJwtCredential& credential,
                             const std::vector<std::string>& disclose_keys,
                             const PresentationRequest& request,
                             const HolderIdentity& holder);

// Issuer signature, key-binding signature (against the cnf key), nonce,
// audience, token hash binding, per-disclosure digest membership, expiry.
VerifyOutcome sd_verify(const SdJwtPresentation& presentation,
                        std::span<const uint8_t> expected_nonce,
                        const std::string& expected_audience,
                        const Registry& registry,
                        const VerifyOptions& options = {});

}  // namespace csdjwt::sd
