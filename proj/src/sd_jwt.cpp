#include "csdjwt/sd_jwt.hpp"

#include <algorithm>

#include "csdjwt/wire.hpp"

namespace csdjwt::sd {

std::string SaltedDisclosure::encoded() const {
    Json arr = Json::array({base64url_encode(salt), claim.key, claim.value});
    return base64url_encode(to_bytes(arr.dump()));
}

std::optional<SaltedDisclosure> SaltedDisclosure::decode(
    std::string_view segment) {
    auto raw = base64url_decode(segment);
    if (!raw) return std::nullopt;
    Json arr = Json::parse(to_string(*raw), nullptr, false);
    if (arr.is_discarded() || !arr.is_array() || arr.size() != 3 ||
        !arr[0].is_string() || !arr[1].is_string())
        return std::nullopt;
    auto salt = base64url_decode(arr[0].get<std::string>());
    if (!salt) return std::nullopt;
    return SaltedDisclosure{*salt, Claim{arr[1].get<std::string>(), arr[2]}};
}

std::array<uint8_t, 32> SaltedDisclosure::digest() const {
    return sha256(encoded());
}

SdJwtCredential sd_issue(const IssuerIdentity& issuer,
                         const std::string& holder_did,
                         const Es256PublicKey& holder_key,
                         std::span<const Claim> claims,
                         const SdIssueOptions& options) {
    std::set<std::string> keys;
    for (const auto& c : claims) {
        validate_claim_key(c.key);
        if (!keys.insert(c.key).second)
            throw ProtocolError("duplicate claim key: " + c.key);
    }

    SdJwtCredential cred;
    cred.issuer_did = issuer.did;
    cred.holder_did = holder_did;
    cred.credential_type = options.credential_type;
    cred.issued_at = options.issued_at != 0 ? options.issued_at : unix_now();
    cred.expires_at = cred.issued_at + options.validity_seconds;
    cred.holder_jwk = holder_key.uncompressed();
    cred.decoy_count = options.decoy_count;

    RandomSource rng = options.rng;
    for (const auto& c : claims) {
        SaltedDisclosure d{rng.bytes(16), c};
        cred.digests.push_back(base64url_encode(d.digest()));
        cred.svc.push_back(std::move(d));
    }
    for (size_t i = 0; i < options.decoy_count; ++i) {
        auto decoy = sha256(rng.bytes(32));
        cred.digests.push_back(base64url_encode(decoy));
    }
    // Fisher-Yates so digest order leaks nothing about claim order
    for (size_t i = cred.digests.size(); i > 1; --i) {
        size_t j;
        if (rng.deterministic())
            j = rng.drbg()->next_below(i);
        else {
            auto b = rng.bytes(8);
            uint64_t v = 0;
            for (int k = 0; k < 8; ++k) v = (v << 8) | b[k];
            j = v % i;
        }
        std::swap(cred.digests[i - 1], cred.digests[j]);
    }

    cred.issuer_signature =
        issuer.signing_key.sign(wire::sd_issuer_signing_input(cred));
    return cred;
}

SdJwtPresentation sd_present(const SdJwtCredential& credential,
                             const std::vector<std::string>& disclose_keys,
                             const PresentationRequest& request,
                             const HolderIdentity& holder) {
    if (holder.did != credential.holder_did)
        throw ProtocolError("credential does not belong to this holder");
    if (request.nonce.size() < 16)
        throw ProtocolError("nonce must be at least 16 bytes");

    std::vector<std::string> keys(disclose_keys.begin(), disclose_keys.end());
    if (keys.empty() && request.requested_keys) keys = *request.requested_keys;

    SdJwtPresentation pres;
    pres.credential = credential;
    pres.credential.svc.clear();
    pres.audience = request.audience;
    pres.nonce = request.nonce;
    pres.kb_issued_at = unix_now();

    std::set<std::string> seen;
    for (const auto& key : keys) {
        if (!seen.insert(key).second) continue;
        auto it = std::find_if(
            credential.svc.begin(), credential.svc.end(),
            [&](const SaltedDisclosure& d) { return d.claim.key == key; });
        if (it == credential.svc.end())
            throw ProtocolError("unknown claim key: " + key);
        pres.disclosed.push_back(*it);
    }

    pres.kb_signature =
        holder.signing_key.sign(wire::sd_kb_signing_input(pres));
    return pres;
}

VerifyOutcome sd_verify(const SdJwtPresentation& presentation,
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
        issuer_input = wire::sd_issuer_signing_input(presentation.credential);
        kb_input = wire::sd_kb_signing_input(presentation);
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

    // key binding against the cnf key baked into the signed payload
    Es256PublicKey holder_key{presentation.credential.holder_jwk};
    if (!holder_key.verify(kb_input, presentation.kb_signature))
        return VerifyOutcome::reject(RejectReason::bad_signature,
                                     "key binding");

    for (const auto& d : presentation.disclosed) {
        std::string digest;
        try {
            digest = base64url_encode(d.digest());
        } catch (const std::exception&) {
            return VerifyOutcome::reject(RejectReason::malformed);
        }
        if (std::find(presentation.credential.digests.begin(),
                      presentation.credential.digests.end(),
                      digest) == presentation.credential.digests.end())
            return VerifyOutcome::reject(RejectReason::digest_not_found,
                                         d.claim.key);
    }

    int64_t now = options.now != 0 ? options.now : unix_now();
    if (now > presentation.credential.expires_at + options.skew_seconds)
        return VerifyOutcome::reject(RejectReason::expired);

    if (options.nonce_store) options.nonce_store->mark_used(nonce);
    return VerifyOutcome::accept();
}

}  // namespace csdjwt::sd
