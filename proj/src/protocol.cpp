#include "csdjwt/protocol.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "csdjwt/wire.hpp"

namespace csdjwt {

int64_t unix_now() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::none: return "none";
        case RejectReason::unknown_did: return "unknown_did";
        case RejectReason::bad_signature: return "bad_signature";
        case RejectReason::nonce_mismatch: return "nonce_mismatch";
        case RejectReason::nonce_reused: return "nonce_reused";
        case RejectReason::audience_mismatch: return "audience_mismatch";
        case RejectReason::witness_invalid: return "witness_invalid";
        case RejectReason::did_claim_mismatch: return "did_claim_mismatch";
        case RejectReason::expired: return "expired";
        case RejectReason::malformed: return "malformed";
        case RejectReason::digest_not_found: return "digest_not_found";
        case RejectReason::root_mismatch: return "root_mismatch";
    }
    return "unknown";
}

DidDocument IssuerIdentity::did_document() const {
    DidDocument doc;
    doc.did = did;
    doc.verification_keys.push_back(
        {signing_key_id, "ES256", signing_key.public_key().sec1});
    auto pk = accumulator_keys.pk.to_bytes();
    doc.accumulator_keys.push_back(
        {accumulator_key_id, "bn254", Bytes(pk.begin(), pk.end())});
    return doc;
}

DidDocument HolderIdentity::did_document() const {
    DidDocument doc;
    doc.did = did;
    doc.verification_keys.push_back(
        {signing_key_id, "ES256", signing_key.public_key().sec1});
    return doc;
}

const WvcEntry* WitnessValueContainer::find(const std::string& key) const {
    for (const auto& e : entries)
        if (e.claim.key == key) return &e;
    return nullptr;
}

bool NonceStore::is_used(std::span<const uint8_t> nonce) const {
    std::lock_guard<std::mutex> lock(mu_);
    return used_.count(Bytes(nonce.begin(), nonce.end())) > 0;
}

void NonceStore::mark_used(std::span<const uint8_t> nonce) {
    std::lock_guard<std::mutex> lock(mu_);
    used_.insert(Bytes(nonce.begin(), nonce.end()));
}

Json NonceStore::to_json() const {
    std::lock_guard<std::mutex> lock(mu_);
    Json arr = Json::array();
    for (const auto& n : used_) arr.push_back(base64url_encode(n));
    return Json{{"used", arr}};
}

NonceStore NonceStore::from_json(const Json& j) {
    NonceStore s;
    for (const auto& v : j.at("used")) {
        auto raw = base64url_decode(v.get<std::string>());
        if (!raw) throw ProtocolError("bad nonce store entry");
        s.used_.insert(*raw);
    }
    return s;
}

void NonceStore::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ProtocolError("cannot write nonce store: " + path);
    out << to_json().dump() << "\n";
}

NonceStore NonceStore::load_or_empty(const std::string& path) {
    std::ifstream in(path);
    if (!in) return NonceStore();
    return from_json(Json::parse(in));
}

VerifiableCredential issue_credential(const IssuerIdentity& issuer,
                                      const std::string& holder_did,
                                      std::span<const Claim> claims,
                                      const IssueOptions& options) {
    std::set<std::string> keys;
    for (const auto& c : claims) {
        validate_claim_key(c.key);
        if (c.key == kIssuerDidClaimKey || c.key == kHolderDidClaimKey)
            throw ProtocolError("claim key is reserved: " + c.key);
        if (!keys.insert(c.key).second)
            throw ProtocolError("duplicate claim key: " + c.key);
    }

    VerifiableCredential vc;
    vc.payload.issuer_did = issuer.did;
    vc.payload.holder_did = holder_did;
    vc.payload.credential_type = options.credential_type;
    vc.payload.issued_at =
        options.issued_at != 0 ? options.issued_at : unix_now();
    vc.payload.expires_at = vc.payload.issued_at + options.validity_seconds;
    vc.payload.accumulator_pk_ref =
        issuer.did + "#" + issuer.accumulator_key_id;

    std::vector<Claim> all(claims.begin(), claims.end());
    all.push_back(Claim{kIssuerDidClaimKey, issuer.did});
    all.push_back(Claim{kHolderDidClaimKey, holder_did});

    std::vector<accumulator::Element> elements;
    elements.reserve(all.size());
    for (const auto& c : all) elements.push_back(hash_to_element(c));

    auto params = accumulator::SystemParams::bn254_default();
    RandomSource rng = options.rng;
    auto v0 = accumulator::init_accumulator(params, rng);
    vc.payload.accumulator_value =
        accumulator::accumulate_batch(v0, elements, issuer.accumulator_keys.sk);
    auto witnesses = accumulator::compute_witnesses_batch(
        vc.payload.accumulator_value, elements, issuer.accumulator_keys.sk,
        options.exec);

    vc.wvc.entries.reserve(all.size());
    for (size_t i = 0; i < all.size(); ++i)
        vc.wvc.entries.push_back({witnesses[i], all[i]});
    return vc;
}

VerifiablePresentation generate_presentation(
    const VerifiableCredential& vc, const std::vector<std::string>& disclose_keys,
    const PresentationRequest& request, const HolderIdentity& holder) {
    if (holder.did != vc.payload.holder_did)
        throw ProtocolError("credential does not belong to this holder");
    if (request.nonce.size() < 16)
        throw ProtocolError("nonce must be at least 16 bytes");

    std::vector<std::string> keys(disclose_keys.begin(), disclose_keys.end());
    if (keys.empty() && request.requested_keys) keys = *request.requested_keys;

    VerifiablePresentation vp;
    vp.accumulator_value = vc.payload.accumulator_value;
    vp.nonce = request.nonce;
    vp.audience = request.audience;
    vp.holder_did = vc.payload.holder_did;
    vp.issuer_did = vc.payload.issuer_did;
    vp.expires_at = vc.payload.expires_at;

    std::set<std::string> seen;
    for (const auto& key : keys) {
        if (key == kIssuerDidClaimKey || key == kHolderDidClaimKey)
            continue;  // always disclosed below
        if (!seen.insert(key).second) continue;
        const WvcEntry* e = vc.wvc.find(key);
        if (!e) throw ProtocolError("unknown claim key: " + key);
        vp.disclosed.push_back(*e);
    }
    const WvcEntry* wi = vc.wvc.find(kIssuerDidClaimKey);
    const WvcEntry* ws = vc.wvc.find(kHolderDidClaimKey);
    if (!wi || !ws) throw ProtocolError("credential lacks DID claims");
    vp.disclosed.push_back(*wi);
    vp.disclosed.push_back(*ws);

    vp.holder_signature =
        holder.signing_key.sign(wire::csd_presentation_signing_input(vp));
    return vp;
}

VerifyOutcome verify_presentation(const VerifiablePresentation& vp,
                                  std::span<const uint8_t> expected_nonce,
                                  const std::string& expected_audience,
                                  const Registry& registry,
                                  const VerifyOptions& options) {
    // 1. challenge binding
    if (vp.nonce.size() < 16 ||
        !std::equal(vp.nonce.begin(), vp.nonce.end(), expected_nonce.begin(),
                    expected_nonce.end()))
        return VerifyOutcome::reject(RejectReason::nonce_mismatch);
    if (options.nonce_store && options.nonce_store->is_used(vp.nonce))
        return VerifyOutcome::reject(RejectReason::nonce_reused);
    if (vp.audience != expected_audience)
        return VerifyOutcome::reject(RejectReason::audience_mismatch);

    // 2. holder signature under the resolved key
    auto holder_doc = registry.resolve(vp.holder_did);
    if (!holder_doc)
        return VerifyOutcome::reject(RejectReason::unknown_did, vp.holder_did);
    auto issuer_doc = registry.resolve(vp.issuer_did);
    if (!issuer_doc)
        return VerifyOutcome::reject(RejectReason::unknown_did, vp.issuer_did);

    std::string signing_input;
    try {
        signing_input = wire::csd_presentation_signing_input(vp);
    } catch (const std::exception&) {
        return VerifyOutcome::reject(RejectReason::malformed);
    }
    bool sig_ok = false;
    for (const auto& key : holder_doc->verification_keys) {
        if (key.scheme != "ES256") continue;
        Es256PublicKey pk{key.bytes};
        if (pk.verify(signing_input, vp.holder_signature)) {
            sig_ok = true;
            break;
        }
    }
    if (!sig_ok) return VerifyOutcome::reject(RejectReason::bad_signature);

    // 3. DID claims must agree with the presentation header fields
    const WvcEntry* wi = nullptr;
    const WvcEntry* ws = nullptr;
    for (const auto& e : vp.disclosed) {
        if (e.claim.key == kIssuerDidClaimKey) wi = &e;
        if (e.claim.key == kHolderDidClaimKey) ws = &e;
    }
    if (!wi || !ws || !wi->claim.value.is_string() ||
        !ws->claim.value.is_string() ||
        wi->claim.value.get<std::string>() != vp.issuer_did ||
        ws->claim.value.get<std::string>() != vp.holder_did)
        return VerifyOutcome::reject(RejectReason::did_claim_mismatch);

    // 4. accumulator membership of every disclosed claim
    if (issuer_doc->accumulator_keys.empty())
        return VerifyOutcome::reject(RejectReason::unknown_did,
                                     "no accumulator key for " + vp.issuer_did);
    auto apk =
        accumulator::PublicKey::from_bytes(issuer_doc->accumulator_keys[0].bytes);
    if (!apk) return VerifyOutcome::reject(RejectReason::malformed);

    auto params = accumulator::SystemParams::bn254_default();
    try {
        std::vector<std::pair<accumulator::Element, accumulator::Witness>>
            pairs;
        pairs.reserve(vp.disclosed.size());
        for (const auto& e : vp.disclosed)
            pairs.push_back({hash_to_element(e.claim), e.witness});
        size_t bad = pairs.size();
        if (!accumulator::verify_witness_batch(vp.accumulator_value, pairs,
                                               *apk, params, options.exec,
                                               &bad)) {
            std::string key =
                bad < vp.disclosed.size() ? vp.disclosed[bad].claim.key : "";
            return VerifyOutcome::reject(RejectReason::witness_invalid, key);
        }
    } catch (const std::exception&) {
        return VerifyOutcome::reject(RejectReason::malformed);
    }

    // 5. expiry
    int64_t now = options.now != 0 ? options.now : unix_now();
    if (now > vp.expires_at + options.skew_seconds)
        return VerifyOutcome::reject(RejectReason::expired);

    if (options.nonce_store) options.nonce_store->mark_used(vp.nonce);
    return VerifyOutcome::accept();
}

}  // namespace csdjwt
