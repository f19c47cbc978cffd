#include "csdjwt/merkle.hpp"

#include <algorithm>

#include "csdjwt/wire.hpp"

namespace csdjwt::mt {

namespace {
constexpr uint8_t kLeafPrefix = 0x00;
constexpr uint8_t kNodePrefix = 0x01;
constexpr const char* kPaddingTag = "mt-sd/padding";
}  // namespace

Digest leaf_hash(const SaltedDisclosure& disclosure) {
    std::string encoded = disclosure.encoded();
    Bytes buf;
    buf.reserve(1 + encoded.size());
    buf.push_back(kLeafPrefix);
    buf.insert(buf.end(), encoded.begin(), encoded.end());
    return sha256(buf);
}

Digest padding_leaf() {
    Bytes buf;
    buf.push_back(kLeafPrefix);
    for (const char* p = kPaddingTag; *p; ++p) buf.push_back((uint8_t)*p);
    return sha256(buf);
}

Digest node_hash(const Digest& left, const Digest& right) {
    Bytes buf;
    buf.reserve(65);
    buf.push_back(kNodePrefix);
    buf.insert(buf.end(), left.begin(), left.end());
    buf.insert(buf.end(), right.begin(), right.end());
    return sha256(buf);
}

size_t padded_leaf_count(size_t n) {
    size_t p = 2;
    while (p < n) p <<= 1;
    return p;
}

namespace {

// full set of tree levels, bottom up; level 0 is the padded leaves
std::vector<std::vector<Digest>> build_levels(std::span<const Digest> leaves) {
    size_t padded = padded_leaf_count(leaves.size());
    std::vector<std::vector<Digest>> levels;
    levels.emplace_back(leaves.begin(), leaves.end());
    levels[0].resize(padded, padding_leaf());
    while (levels.back().size() > 1) {
        const auto& prev = levels.back();
        std::vector<Digest> next(prev.size() / 2);
        for (size_t i = 0; i < next.size(); ++i)
            next[i] = node_hash(prev[2 * i], prev[2 * i + 1]);
        levels.push_back(std::move(next));
    }
    return levels;
}

}  // namespace

Digest compute_root(std::span<const Digest> leaves) {
    return build_levels(leaves).back()[0];
}

MerkleMultiProof build_multiproof(std::span<const Digest> leaves,
                                  std::span<const uint32_t> indices) {
    auto levels = build_levels(leaves);
    MerkleMultiProof proof;
    proof.padded_count = (uint32_t)levels[0].size();
    proof.indices.assign(indices.begin(), indices.end());
    std::sort(proof.indices.begin(), proof.indices.end());
    proof.indices.erase(
        std::unique(proof.indices.begin(), proof.indices.end()),
        proof.indices.end());
    for (uint32_t idx : proof.indices)
        if (idx >= proof.padded_count)
            throw ProtocolError("leaf index out of range");

    std::vector<uint32_t> need(proof.indices);
    for (size_t level = 0; level + 1 < levels.size(); ++level) {
        std::vector<uint32_t> next;
        for (size_t i = 0; i < need.size();) {
            uint32_t idx = need[i];
            if (i + 1 < need.size() && need[i + 1] == (idx | 1u) &&
                (idx & 1u) == 0) {
                i += 2;  // both children disclosed or derived
            } else {
                proof.siblings.push_back(levels[level][idx ^ 1u]);
                i += 1;
            }
            next.push_back(idx >> 1);
        }
        next.erase(std::unique(next.begin(), next.end()), next.end());
        need = std::move(next);
    }
    return proof;
}

std::optional<Digest> root_from_multiproof(
    std::span<const std::pair<uint32_t, Digest>> disclosed,
    const MerkleMultiProof& proof) {
    if (proof.padded_count < 2 ||
        (proof.padded_count & (proof.padded_count - 1)) != 0)
        return std::nullopt;
    if (disclosed.size() != proof.indices.size()) return std::nullopt;

    std::vector<std::pair<uint32_t, Digest>> level(disclosed.begin(),
                                                   disclosed.end());
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < level.size(); ++i) {
        if (level[i].first != proof.indices[i]) return std::nullopt;
        if (level[i].first >= proof.padded_count) return std::nullopt;
        if (i > 0 && level[i].first == level[i - 1].first) return std::nullopt;
    }

    size_t sib = 0;
    size_t width = proof.padded_count;
    while (width > 1) {
        std::vector<std::pair<uint32_t, Digest>> next;
        for (size_t i = 0; i < level.size();) {
            uint32_t idx = level[i].first;
            Digest parent;
            if (i + 1 < level.size() && level[i + 1].first == (idx | 1u) &&
                (idx & 1u) == 0) {
                parent = node_hash(level[i].second, level[i + 1].second);
                i += 2;
            } else {
                if (sib >= proof.siblings.size()) return std::nullopt;
                const Digest& s = proof.siblings[sib++];
                parent = (idx & 1u) ? node_hash(s, level[i].second)
                                    : node_hash(level[i].second, s);
                i += 1;
            }
            if (next.empty() || next.back().first != (idx >> 1))
                next.push_back({idx >> 1, parent});
        }
        level = std::move(next);
        width /= 2;
    }
    if (sib != proof.siblings.size() || level.size() != 1) return std::nullopt;
    return level[0].second;
}

MerkleCredential mt_issue(const IssuerIdentity& issuer,
                          const std::string& holder_did,
                          const Es256PublicKey& holder_key,
                          std::span<const Claim> claims,
                          const MtIssueOptions& options) {
    std::set<std::string> keys;
    for (const auto& c : claims) {
        validate_claim_key(c.key);
        if (!keys.insert(c.key).second)
            throw ProtocolError("duplicate claim key: " + c.key);
    }

    MerkleCredential cred;
    cred.issuer_did = issuer.did;
    cred.holder_did = holder_did;
    cred.credential_type = options.credential_type;
    cred.issued_at = options.issued_at != 0 ? options.issued_at : unix_now();
    cred.expires_at = cred.issued_at + options.validity_seconds;
    cred.holder_jwk = holder_key.uncompressed();

    RandomSource rng = options.rng;
    std::vector<Digest> leaves;
    for (const auto& c : claims) {
        SaltedDisclosure d{rng.bytes(16), c};
        leaves.push_back(leaf_hash(d));
        cred.svc.push_back(std::move(d));
    }
    cred.root = compute_root(leaves);
    cred.issuer_signature =
        issuer.signing_key.sign(wire::mt_issuer_signing_input(cred));
    return cred;
}

MerklePresentation mt_present(const MerkleCredential& credential,
                              const std::vector<std::string>& disclose_keys,
                              const PresentationRequest& request,
                              const HolderIdentity& holder) {
    if (holder.did != credential.holder_did)
        throw ProtocolError("credential does not belong to this holder");
    if (request.nonce.size() < 16)
        throw ProtocolError("nonce must be at least 16 bytes");

    std::vector<std::string> keys(disclose_keys.begin(), disclose_keys.end());
    if (keys.empty() && request.requested_keys) keys = *request.requested_keys;

    std::vector<uint32_t> indices;
    std::set<std::string> seen;
    for (const auto& key : keys) {
        if (!seen.insert(key).second) continue;
        auto it = std::find_if(
            credential.svc.begin(), credential.svc.end(),
            [&](const SaltedDisclosure& d) { return d.claim.key == key; });
        if (it == credential.svc.end())
            throw ProtocolError("unknown claim key: " + key);
        indices.push_back((uint32_t)(it - credential.svc.begin()));
    }
    std::sort(indices.begin(), indices.end());

    MerklePresentation pres;
    pres.credential = credential;
    pres.credential.svc.clear();
    pres.audience = request.audience;
    pres.nonce = request.nonce;
    pres.kb_issued_at = unix_now();
    for (uint32_t idx : indices) pres.disclosed.push_back(credential.svc[idx]);

    std::vector<Digest> leaves;
    for (const auto& d : credential.svc) leaves.push_back(leaf_hash(d));
    pres.proof = build_multiproof(leaves, indices);

    pres.kb_signature =
        holder.signing_key.sign(wire::mt_kb_signing_input(pres));
    return pres;
}

VerifyOutcome mt_verify(const MerklePresentation& presentation,
                        std::span<const uint8_t> expected_nonce,
                        const std::string& expected_audience,
                        const Registry& registry,
                        const VerifyOptions& options) {
    const auto& nonce = presentation.nonce;
    if (nonce.size() < 16 ||
        !std::equal(nonce.begin(), nonce.end(), expected_nonce.begin(),
                    expected_nonce.end()))
        return VerifyOutcome::reject(RejectReason::nonce_mismatch);
    if (options.nonce_store && options.nonce_store->is_used(nonce))
        return VerifyOutcome::reject(RejectReason::nonce_reused);
    if (presentation.audience != expected_audience)
        return VerifyOutcome::reject(RejectReason::audience_mismatch);

    auto issuer_doc = registry.resolve(presentation.credential.issuer_did);
    if (!issuer_doc)
        return VerifyOutcome::reject(RejectReason::unknown_did,
                                     presentation.credential.issuer_did);

    std::string issuer_input, kb_input;
    try {
        issuer_input = wire::mt_issuer_signing_input(presentation.credential);
        kb_input = wire::mt_kb_signing_input(presentation);
    } catch (const std::exception&) {
        return VerifyOutcome::reject(RejectReason::malformed);
    }

    bool issuer_ok = false;
    for (const auto& key : issuer_doc->verification_keys) {
        if (key.scheme != "ES256") continue;
        if (Es256PublicKey{key.bytes}.verify(
                issuer_input, presentation.credential.issuer_signature)) {
            issuer_ok = true;
            break;
        }
    }
    if (!issuer_ok)
        return VerifyOutcome::reject(RejectReason::bad_signature, "issuer");

    Es256PublicKey holder_key{presentation.credential.holder_jwk};
    if (!holder_key.verify(kb_input, presentation.kb_signature))
        return VerifyOutcome::reject(RejectReason::bad_signature,
                                     "key binding");

    if (presentation.disclosed.size() != presentation.proof.indices.size())
        return VerifyOutcome::reject(RejectReason::malformed);
    std::vector<std::pair<uint32_t, Digest>> leaves;
    try {
        for (size_t i = 0; i < presentation.disclosed.size(); ++i)
            leaves.push_back({presentation.proof.indices[i],
                              leaf_hash(presentation.disclosed[i])});
    } catch (const std::exception&) {
        return VerifyOutcome::reject(RejectReason::malformed);
    }
    auto root = root_from_multiproof(leaves, presentation.proof);
    if (!root || *root != presentation.credential.root)
        return VerifyOutcome::reject(RejectReason::root_mismatch);

    int64_t now = options.now != 0 ? options.now : unix_now();
    if (now > presentation.credential.expires_at + options.skew_seconds)
        return VerifyOutcome::reject(RejectReason::expired);

    if (options.nonce_store) options.nonce_store->mark_used(nonce);
    return VerifyOutcome::accept();
}

}  // namespace csdjwt::mt
