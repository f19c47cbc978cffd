#pragma once

#include <set>

#include "csdjwt/accumulator.hpp"
#include "csdjwt/claims.hpp"
#include "csdjwt/registry.hpp"
#include "csdjwt/signature.hpp"

namespace csdjwt {

// Claim keys reserved for the holder/issuer identifiers that every
// credential carries and every presentation discloses.
inline constexpr const char* kIssuerDidClaimKey = "iss_did";
inline constexpr const char* kHolderDidClaimKey = "sub_did";

struct IssuerIdentity {
    std::string did;
    Es256PrivateKey signing_key;
    accumulator::KeyPair accumulator_keys;
    std::string signing_key_id = "sig-1";
    std::string accumulator_key_id = "acc-1";

    DidDocument did_document() const;
};

struct HolderIdentity {
    std::string did;
    Es256PrivateKey signing_key;
    std::string signing_key_id = "sig-1";

    DidDocument did_document() const;
};

struct AlgorithmIds {
    std::string hash = "sha-256";
    std::string signature = "ES256";
    std::string accumulator = "bn254-acc";

    bool operator==(const AlgorithmIds&) const = default;
};

struct CredentialPayload {
    std::string issuer_did;
    std::string holder_did;
    std::string credential_type;
    int64_t issued_at = 0;
    int64_t expires_at = 0;
    accumulator::AccumulatorValue accumulator_value;
    std::string accumulator_pk_ref;
    AlgorithmIds alg;
};

struct WvcEntry {
    accumulator::Witness witness;
    Claim claim;
};

struct WitnessValueContainer {
    std::vector<WvcEntry> entries;  // user claims first, DID claims last

    const WvcEntry* find(const std::string& key) const;
};

struct VerifiableCredential {
    CredentialPayload payload;
    WitnessValueContainer wvc;
};

struct PresentationRequest {
    Bytes nonce;  // >= 16 bytes
    std::string audience;
    std::optional<std::vector<std::string>> requested_keys;
};

struct VerifiablePresentation {
    accumulator::AccumulatorValue accumulator_value;
    std::vector<WvcEntry> disclosed;  // user claims, then iss_did, sub_did
    Bytes nonce;
    std::string audience;
    std::string holder_did;
    std::string issuer_did;
    int64_t expires_at = 0;
    Bytes holder_signature;
};

class ProtocolError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class RejectReason {
    none,
    unknown_did,
    bad_signature,
    nonce_mismatch,
    nonce_reused,
    audience_mismatch,
    witness_invalid,
    did_claim_mismatch,
    expired,
    malformed,
    digest_not_found,
    root_mismatch,
};

std::string to_string(RejectReason r);

struct VerifyOutcome {
    bool accepted = false;
    RejectReason reason = RejectReason::none;
    std::string detail;  // e.g. the claim key of an invalid witness

    static VerifyOutcome accept() { return {true, RejectReason::none, {}}; }
    static VerifyOutcome reject(RejectReason r, std::string d = {}) {
        return {false, r, std::move(d)};
    }
};

// Single-use nonce ledger with atomic check-and-insert. A nonce is only
// consumed when a presentation is accepted.
class NonceStore {
  public:
    NonceStore() = default;
    NonceStore(NonceStore&& o) noexcept : used_(std::move(o.used_)) {}
    NonceStore& operator=(NonceStore&& o) noexcept {
        used_ = std::move(o.used_);
        return *this;
    }

    bool is_used(std::span<const uint8_t> nonce) const;
    void mark_used(std::span<const uint8_t> nonce);

    Json to_json() const;
    static NonceStore from_json(const Json& j);
    void save(const std::string& path) const;
    static NonceStore load_or_empty(const std::string& path);

  private:
    mutable std::mutex mu_;
    std::set<Bytes> used_;
};

struct IssueOptions {
    std::string credential_type = "vc+csd";
    int64_t issued_at = 0;     // unix seconds; 0 means "now"
    int64_t validity_seconds = 86400 * 365;
    accumulator::Exec exec = accumulator::Exec::serial;
    RandomSource rng;
};

struct VerifyOptions {
    int64_t now = 0;  // unix seconds; 0 means "now"
    int64_t skew_seconds = 60;
    accumulator::Exec exec = accumulator::Exec::serial;
    NonceStore* nonce_store = nullptr;
};

// Credential issuance: fresh per-credential accumulator over
// hash_to_element of every claim plus the two DID claims, one witness per
// claim. |WVC| == |claims| + 2.
VerifiableCredential issue_credential(const IssuerIdentity& issuer,
                                      const std::string& holder_did,
                                      std::span<const Claim> claims,
                                      const IssueOptions& options = {});

// Holder-side selective disclosure bound to the verifier nonce. The DID
// claims are always disclosed. Keys not in the credential are rejected.
VerifiablePresentation generate_presentation(const VerifiableCredential& vc,
                                             const std::vector<std::string>& disclose_keys,
                                             const PresentationRequest& request,
                                             const HolderIdentity& holder);

// Checks, in order: nonce match and single-use, audience, DID resolution,
// holder signature, DID claim consistency, every disclosed witness,
// expiry. The nonce is marked used only on accept.
VerifyOutcome verify_presentation(const VerifiablePresentation& vp,
                                  std::span<const uint8_t> expected_nonce,
                                  const std::string& expected_audience,
                                  const Registry& registry,
                                  const VerifyOptions& options = {});

int64_t unix_now();

}  // namespace csdjwt
