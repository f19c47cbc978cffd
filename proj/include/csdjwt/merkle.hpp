#pragma once

#include "csdjwt/sd_jwt.hpp"

namespace csdjwt::mt {

using sd::SaltedDisclosure;

// Merkle-tree selective-disclosure baseline: salted leaf hashes in claim
// order, padded to the next power of two, binary tree with
// domain-separated node hashing, issuer-signed root, deduplicated
// multi-proofs for disclosed leaves.

using Digest = std::array<uint8_t, 32>;

Digest leaf_hash(const SaltedDisclosure& disclosure);
Digest padding_leaf();
Digest node_hash(const Digest& left, const Digest& right);

size_t padded_leaf_count(size_t n);

// Root over the given leaves, padded internally. Zero leaves hash a
// single padding leaf.
Digest compute_root(std::span<const Digest> leaves);

struct MerkleMultiProof {
    uint32_t padded_count = 0;
    std::vector<uint32_t> indices;  // disclosed leaf positions, ascending
    std::vector<Digest> siblings;   // bottom-up, deduplicated

    bool operator==(const MerkleMultiProof&) const = default;
};

MerkleMultiProof build_multiproof(std::span<const Digest> leaves,
                                  std::span<const uint32_t> indices);

// Recomputes the root from disclosed (index, leaf) pairs plus the proof;
// empty on malformed input (wrong sibling count, index out of range).
std::optional<Digest> root_from_multiproof(
    std::span<const std::pair<uint32_t, Digest>> disclosed,
    const MerkleMultiProof& proof);

struct MerkleCredential {
    std::string issuer_did;
    std::string holder_did;
    std::string credential_type;
    int64_t issued_at = 0;
    int64_t expires_at = 0;
    Digest root{};
    Bytes holder_jwk;        // uncompressed SEC1 point
    Bytes issuer_signature;  // ES256 over header.payload
    std::vector<SaltedDisclosure> svc;  // leaf order; empty in presentations
};

struct MtIssueOptions {
    std::string credential_type = "vc+mt-sd";
    int64_t issued_at = 0;
    int64_t validity_seconds = 86400 * 365;
    RandomSource rng;
};

MerkleCredential mt_issue(const IssuerIdentity& issuer,
                          const std::string& holder_did,
                          const Es256PublicKey& holder_key,
                          std::span<const Claim> claims,
                          const MtIssueOptions& options = {});

struct MerklePresentation {
    MerkleCredential credential;  // signed part only
    std::vector<SaltedDisclosure> disclosed;  // ascending leaf order
    MerkleMultiProof proof;
    std::string audience;
    Bytes nonce;
    int64_t kb_issued_at = 0;
    Bytes kb_signature;
};

MerklePresentation mt_present(const MerkleCredential& credential,
                              const std::vector<std::string>& disclose_keys,
                              const PresentationRequest& request,
                              const HolderIdentity& holder);

VerifyOutcome mt_verify(const MerklePresentation& presentation,
                        std::span<const uint8_t> expected_nonce,
                        const std::string& expected_audience,
                        const Registry& registry,
                        const VerifyOptions& options = {});

}  // namespace csdjwt::mt
