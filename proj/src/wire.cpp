#include "csdjwt/wire.hpp"

namespace csdjwt::wire {

namespace {

std::string b64(std::span<const uint8_t> bytes) {
    return base64url_encode(bytes);
}

std::string b64s(const std::string& text) {
    return base64url_encode(to_bytes(text));
}

Bytes unb64(std::string_view text, const char* what) {
    auto out = base64url_decode(text);
    if (!out) throw WireError(std::string("bad base64url in ") + what);
    return *out;
}

Json parse_json(const Bytes& raw, const char* what) {
    Json j = Json::parse(to_string(raw), nullptr, false);
    if (j.is_discarded())
        throw WireError(std::string("bad JSON in ") + what);
    return j;
}

std::string header_json(const char* alg, const char* fmt,
                        const char* typ = nullptr) {
    Json h{{"alg", alg}, {"fmt", fmt}};
    if (typ) h["typ"] = typ;
    return h.dump();
}

struct SplitToken {
    std::string header;
    std::string payload;
    std::string signature;
    std::vector<std::string> segments;
};

SplitToken split_token(const std::string& token) {
    SplitToken out;
    size_t tilde = token.find('~');
    std::string jwt =
        tilde == std::string::npos ? token : token.substr(0, tilde);
    size_t d1 = jwt.find('.');
    size_t d2 = d1 == std::string::npos ? std::string::npos
                                        : jwt.find('.', d1 + 1);
    if (d1 == std::string::npos || d2 == std::string::npos ||
        jwt.find('.', d2 + 1) != std::string::npos)
        throw WireError("token must start with a three-segment JWT");
    out.header = jwt.substr(0, d1);
    out.payload = jwt.substr(d1 + 1, d2 - d1 - 1);
    out.signature = jwt.substr(d2 + 1);
    while (tilde != std::string::npos) {
        size_t next = token.find('~', tilde + 1);
        std::string seg =
            next == std::string::npos
                ? token.substr(tilde + 1)
                : token.substr(tilde + 1, next - tilde - 1);
        if (seg.empty()) throw WireError("empty disclosure segment");
        out.segments.push_back(std::move(seg));
        tilde = next;
    }
    return out;
}

struct HeaderInfo {
    std::string alg, fmt, typ;
};

HeaderInfo parse_header(const std::string& h64) {
    Json j = parse_json(unb64(h64, "header"), "header");
    if (!j.is_object()) throw WireError("header is not an object");
    HeaderInfo info;
    info.alg = j.value("alg", "");
    info.fmt = j.value("fmt", "");
    info.typ = j.value("typ", "");
    return info;
}

// [bytes_b64url, key, value] disclosure-style segment
std::string encode_triple(std::span<const uint8_t> bytes, const Claim& claim) {
    Json arr = Json::array({b64(bytes), claim.key, claim.value});
    return b64s(arr.dump());
}

struct Triple {
    Bytes bytes;
    Claim claim;
};

Triple decode_triple(std::string_view segment, const char* what) {
    Json arr = parse_json(unb64(segment, what), what);
    if (!arr.is_array() || arr.size() != 3 || !arr[0].is_string() ||
        !arr[1].is_string())
        throw WireError(std::string("malformed disclosure in ") + what);
    Triple t;
    t.bytes = unb64(arr[0].get<std::string>(), what);
    t.claim.key = arr[1].get<std::string>();
    t.claim.value = arr[2];
    return t;
}

std::string require_string(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw WireError(std::string("missing string field ") + field);
    return j[field].get<std::string>();
}

int64_t require_int(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw WireError(std::string("missing integer field ") + field);
    return j[field].get<int64_t>();
}

accumulator::AccumulatorValue require_acc(const Json& j, const char* field) {
    auto raw = unb64(require_string(j, field), field);
    auto acc = accumulator::AccumulatorValue::from_bytes(raw);
    if (!acc) throw WireError("invalid accumulator point");
    return *acc;
}

accumulator::Witness require_witness_field(const Json& j, const char* field) {
    auto raw = unb64(require_string(j, field), field);
    auto w = accumulator::Witness::from_bytes(raw);
    if (!w) throw WireError("invalid witness point");
    return *w;
}

// ---- CSD payloads ----

std::string csd_credential_payload(const VerifiableCredential& vc) {
    const auto& p = vc.payload;
    const WvcEntry* wi = vc.wvc.find(kIssuerDidClaimKey);
    const WvcEntry* ws = vc.wvc.find(kHolderDidClaimKey);
    if (!wi || !ws)
        throw WireError("credential is missing its DID claim entries");
    Json j{{"acc", b64(p.accumulator_value.to_bytes())},
           {"alg", Json{{"acc", p.alg.accumulator},
                        {"hash", p.alg.hash},
                        {"sig", p.alg.signature}}},
           {"exp", p.expires_at},
           {"iat", p.issued_at},
           {"iss", p.issuer_did},
           {"pkr", p.accumulator_pk_ref},
           {"sub", p.holder_did},
           {"typ", p.credential_type},
           {"wi", b64(wi->witness.to_bytes())},
           {"ws", b64(ws->witness.to_bytes())}};
    return j.dump();
}

std::string csd_presentation_payload(const VerifiablePresentation& vp) {
    const WvcEntry* wi = nullptr;
    const WvcEntry* ws = nullptr;
    for (const auto& e : vp.disclosed) {
        if (e.claim.key == kIssuerDidClaimKey) wi = &e;
        if (e.claim.key == kHolderDidClaimKey) ws = &e;
    }
    if (!wi || !ws)
        throw WireError("presentation is missing its DID claim entries");
    Json j{{"a", b64(vp.accumulator_value.to_bytes())},
           {"d", vp.audience},
           {"e", vp.expires_at},
           {"i", vp.issuer_did},
           {"n", b64(vp.nonce)},
           {"s", vp.holder_did},
           {"wi", b64(wi->witness.to_bytes())},
           {"ws", b64(ws->witness.to_bytes())}};
    return j.dump();
}

std::vector<const WvcEntry*> user_entries(std::span<const WvcEntry> entries) {
    std::vector<const WvcEntry*> out;
    for (const auto& e : entries)
        if (e.claim.key != kIssuerDidClaimKey &&
            e.claim.key != kHolderDidClaimKey)
            out.push_back(&e);
    return out;
}

// ---- SD / MT payloads ----

Json cnf_json(const Bytes& jwk_uncompressed) {
    if (jwk_uncompressed.size() != 65 || jwk_uncompressed[0] != 0x04)
        throw WireError("holder JWK must be an uncompressed P-256 point");
    std::span<const uint8_t> x(jwk_uncompressed.data() + 1, 32);
    std::span<const uint8_t> y(jwk_uncompressed.data() + 33, 32);
    return Json{{"jwk", Json{{"crv", "P-256"},
                             {"kty", "EC"},
                             {"x", b64(x)},
                             {"y", b64(y)}}}};
}

Bytes cnf_from_json(const Json& j) {
    if (!j.contains("jwk")) throw WireError("cnf without jwk");
    const Json& jwk = j["jwk"];
    if (jwk.value("crv", "") != "P-256" || jwk.value("kty", "") != "EC")
        throw WireError("unsupported cnf key type");
    Bytes x = unb64(require_string(jwk, "x"), "cnf.x");
    Bytes y = unb64(require_string(jwk, "y"), "cnf.y");
    if (x.size() != 32 || y.size() != 32)
        throw WireError("bad cnf coordinate length");
    Bytes out;
    out.reserve(65);
    out.push_back(0x04);
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

std::string sd_payload(const sd::SdJwtCredential& c) {
    Json j{{"_sd", c.digests},
           {"_sd_alg", "sha-256"},
           {"cnf", cnf_json(c.holder_jwk)},
           {"exp", c.expires_at},
           {"iat", c.issued_at},
           {"iss", c.issuer_did},
           {"sub", c.holder_did},
           {"vct", c.credential_type}};
    return j.dump();
}

std::string mt_payload(const mt::MerkleCredential& c) {
    Json j{{"cnf", cnf_json(c.holder_jwk)},
           {"exp", c.expires_at},
           {"iat", c.issued_at},
           {"iss", c.issuer_did},
           {"root", b64(c.root)},
           {"sub", c.holder_did},
           {"vct", c.credential_type}};
    return j.dump();
}

std::string kb_payload(const std::string& audience, const Bytes& nonce,
                       int64_t kb_iat, const std::string& prefix) {
    auto hash = sha256(prefix);
    Json j{{"aud", audience},
           {"iat", kb_iat},
           {"nonce", b64(nonce)},
           {"sd_hash", b64(hash)}};
    return j.dump();
}

const char* kKbHeaderAlg = "ES256";

std::string kb_jwt(const char* fmt, const std::string& audience,
                   const Bytes& nonce, int64_t kb_iat,
                   const std::string& prefix, const Bytes& signature) {
    return b64s(header_json(kKbHeaderAlg, fmt, "kb+jwt")) + "." +
           b64s(kb_payload(audience, nonce, kb_iat, prefix)) + "." +
           b64(signature);
}

// issuer JWT part of an SD token
std::string sd_jwt_part(const sd::SdJwtCredential& c) {
    return b64s(header_json("ES256", kSdFormat, "vc+sd-jwt")) + "." +
           b64s(sd_payload(c)) + "." + b64(c.issuer_signature);
}

std::string mt_jwt_part(const mt::MerkleCredential& c) {
    return b64s(header_json("ES256", kMtFormat, "vc+mt-sd")) + "." +
           b64s(mt_payload(c)) + "." + b64(c.issuer_signature);
}

std::string proof_segment(const mt::MerkleMultiProof& proof) {
    Json sib = Json::array();
    for (const auto& s : proof.siblings) sib.push_back(b64(s));
    Json idx = Json::array();
    for (uint32_t i : proof.indices) idx.push_back(i);
    Json j{{"idx", idx}, {"n", proof.padded_count}, {"sib", sib}};
    return b64s(j.dump());
}

mt::MerkleMultiProof decode_proof_segment(const std::string& segment) {
    Json j = parse_json(unb64(segment, "proof"), "proof");
    mt::MerkleMultiProof proof;
    if (!j.is_object() || !j.contains("idx") || !j.contains("sib") ||
        !j.contains("n"))
        throw WireError("malformed inclusion proof");
    proof.padded_count = j["n"].get<uint32_t>();
    for (const auto& v : j["idx"]) proof.indices.push_back(v.get<uint32_t>());
    for (const auto& v : j["sib"]) {
        Bytes raw = unb64(v.get<std::string>(), "proof sibling");
        if (raw.size() != 32) throw WireError("bad sibling digest length");
        mt::Digest d;
        std::copy(raw.begin(), raw.end(), d.begin());
        proof.siblings.push_back(d);
    }
    return proof;
}

sd::SaltedDisclosure disclosure_from_segment(const std::string& segment) {
    Triple t = decode_triple(segment, "disclosure");
    return sd::SaltedDisclosure{std::move(t.bytes), std::move(t.claim)};
}

// shared part of the SD/MT credential decoders
template <typename Cred>
void parse_common_jwt_fields(Cred& c, const Json& payload) {
    c.issuer_did = require_string(payload, "iss");
    c.holder_did = require_string(payload, "sub");
    c.credential_type = require_string(payload, "vct");
    c.issued_at = require_int(payload, "iat");
    c.expires_at = require_int(payload, "exp");
    if (!payload.contains("cnf")) throw WireError("missing cnf");
    c.holder_jwk = cnf_from_json(payload["cnf"]);
}

HeaderInfo expect_header(const SplitToken& parts, const char* fmt,
                         const char* typ, const char* alg) {
    HeaderInfo h = parse_header(parts.header);
    if (h.fmt != fmt || h.alg != alg || (typ && h.typ != typ))
        throw WireError("unexpected token header");
    return h;
}

bool last_segment_is_jwt(const SplitToken& parts) {
    return !parts.segments.empty() &&
           parts.segments.back().find('.') != std::string::npos;
}

}  // namespace

TokenKind peek_kind(const std::string& token) {
    SplitToken parts = split_token(token);
    HeaderInfo h = parse_header(parts.header);
    if (h.fmt == kCsdFormat) {
        if (h.alg == "none") return TokenKind::csd_credential;
        if (h.alg == "ES256") return TokenKind::csd_presentation;
    } else if (h.fmt == kSdFormat && h.typ == "vc+sd-jwt") {
        return last_segment_is_jwt(parts) ? TokenKind::sd_presentation
                                          : TokenKind::sd_credential;
    } else if (h.fmt == kMtFormat && h.typ == "vc+mt-sd") {
        return last_segment_is_jwt(parts) ? TokenKind::mt_presentation
                                          : TokenKind::mt_credential;
    }
    throw WireError("unknown token format");
}

// ---------------- CSD ----------------

std::string encode_credential(const VerifiableCredential& vc) {
    std::string token = b64s(header_json("none", kCsdFormat)) + "." +
                        b64s(csd_credential_payload(vc)) + ".";
    for (const WvcEntry* e : user_entries(vc.wvc.entries))
        token += "~" + encode_triple(e->witness.to_bytes(), e->claim);
    return token;
}

VerifiableCredential decode_csd_credential(const std::string& token) {
    SplitToken parts = split_token(token);
    expect_header(parts, kCsdFormat, nullptr, "none");
    if (!parts.signature.empty())
        throw WireError("csd credential must carry an empty signature");
    Json p = parse_json(unb64(parts.payload, "payload"), "payload");

    VerifiableCredential vc;
    vc.payload.issuer_did = require_string(p, "iss");
    vc.payload.holder_did = require_string(p, "sub");
    vc.payload.credential_type = require_string(p, "typ");
    vc.payload.issued_at = require_int(p, "iat");
    vc.payload.expires_at = require_int(p, "exp");
    vc.payload.accumulator_value = require_acc(p, "acc");
    vc.payload.accumulator_pk_ref = require_string(p, "pkr");
    if (!p.contains("alg") || !p["alg"].is_object())
        throw WireError("missing alg identifiers");
    vc.payload.alg.accumulator = require_string(p["alg"], "acc");
    vc.payload.alg.hash = require_string(p["alg"], "hash");
    vc.payload.alg.signature = require_string(p["alg"], "sig");

    for (const auto& seg : parts.segments) {
        Triple t = decode_triple(seg, "wvc entry");
        auto w = accumulator::Witness::from_bytes(t.bytes);
        if (!w) throw WireError("invalid witness point");
        if (t.claim.key == kIssuerDidClaimKey ||
            t.claim.key == kHolderDidClaimKey)
            throw WireError("DID claims belong in the payload");
        vc.wvc.entries.push_back({*w, std::move(t.claim)});
    }
    vc.wvc.entries.push_back(
        {require_witness_field(p, "wi"),
         Claim{kIssuerDidClaimKey, vc.payload.issuer_did}});
    vc.wvc.entries.push_back(
        {require_witness_field(p, "ws"),
         Claim{kHolderDidClaimKey, vc.payload.holder_did}});
    return vc;
}

std::string csd_presentation_signing_input(const VerifiablePresentation& vp) {
    std::string input = b64s(header_json("ES256", kCsdFormat)) + "." +
                        b64s(csd_presentation_payload(vp));
    for (const WvcEntry* e : user_entries(vp.disclosed))
        input += "~" + encode_triple(e->witness.to_bytes(), e->claim);
    return input;
}

std::string encode_presentation(const VerifiablePresentation& vp) {
    std::string token = b64s(header_json("ES256", kCsdFormat)) + "." +
                        b64s(csd_presentation_payload(vp)) + "." +
                        b64(vp.holder_signature);
    for (const WvcEntry* e : user_entries(vp.disclosed))
        token += "~" + encode_triple(e->witness.to_bytes(), e->claim);
    return token;
}

VerifiablePresentation decode_csd_presentation(const std::string& token) {
    SplitToken parts = split_token(token);
    expect_header(parts, kCsdFormat, nullptr, "ES256");
    Json p = parse_json(unb64(parts.payload, "payload"), "payload");

    VerifiablePresentation vp;
    vp.accumulator_value = require_acc(p, "a");
    vp.audience = require_string(p, "d");
    vp.expires_at = require_int(p, "e");
    vp.issuer_did = require_string(p, "i");
    vp.nonce = unb64(require_string(p, "n"), "nonce");
    vp.holder_did = require_string(p, "s");
    vp.holder_signature = unb64(parts.signature, "signature");

    for (const auto& seg : parts.segments) {
        Triple t = decode_triple(seg, "disclosed entry");
        auto w = accumulator::Witness::from_bytes(t.bytes);
        if (!w) throw WireError("invalid witness point");
        if (t.claim.key == kIssuerDidClaimKey ||
            t.claim.key == kHolderDidClaimKey)
            throw WireError("DID claims belong in the payload");
        vp.disclosed.push_back({*w, std::move(t.claim)});
    }
    vp.disclosed.push_back({require_witness_field(p, "wi"),
                            Claim{kIssuerDidClaimKey, vp.issuer_did}});
    vp.disclosed.push_back({require_witness_field(p, "ws"),
                            Claim{kHolderDidClaimKey, vp.holder_did}});
    return vp;
}

// ---------------- SD ----------------

std::string sd_issuer_signing_input(const sd::SdJwtCredential& cred) {
    return b64s(header_json("ES256", kSdFormat, "vc+sd-jwt")) + "." +
           b64s(sd_payload(cred));
}

std::string encode_credential(const sd::SdJwtCredential& cred) {
    std::string token = sd_jwt_part(cred);
    for (const auto& d : cred.svc) token += "~" + d.encoded();
    return token;
}

sd::SdJwtCredential decode_sd_credential(const std::string& token) {
    SplitToken parts = split_token(token);
    expect_header(parts, kSdFormat, "vc+sd-jwt", "ES256");
    if (last_segment_is_jwt(parts))
        throw WireError("token is a presentation, not a credential");
    Json p = parse_json(unb64(parts.payload, "payload"), "payload");

    sd::SdJwtCredential c;
    parse_common_jwt_fields(c, p);
    if (!p.contains("_sd") || !p["_sd"].is_array())
        throw WireError("missing digest list");
    for (const auto& d : p["_sd"]) {
        if (!d.is_string()) throw WireError("bad digest entry");
        auto raw = unb64(d.get<std::string>(), "_sd");
        if (raw.size() != 32) throw WireError("bad digest length");
        c.digests.push_back(d.get<std::string>());
    }
    c.issuer_signature = unb64(parts.signature, "signature");
    for (const auto& seg : parts.segments)
        c.svc.push_back(disclosure_from_segment(seg));
    if (c.digests.size() < c.svc.size())
        throw WireError("more disclosures than digests");
    c.decoy_count = c.digests.size() - c.svc.size();
    return c;
}

std::string sd_kb_signing_input(const sd::SdJwtPresentation& pres) {
    std::string prefix = sd_jwt_part(pres.credential);
    for (const auto& d : pres.disclosed) prefix += "~" + d.encoded();
    prefix += "~";
    return b64s(header_json(kKbHeaderAlg, kSdFormat, "kb+jwt")) + "." +
           b64s(kb_payload(pres.audience, pres.nonce, pres.kb_issued_at,
                           prefix));
}

std::string encode_presentation(const sd::SdJwtPresentation& pres) {
    std::string prefix = sd_jwt_part(pres.credential);
    for (const auto& d : pres.disclosed) prefix += "~" + d.encoded();
    prefix += "~";
    return prefix + kb_jwt(kSdFormat, pres.audience, pres.nonce,
                           pres.kb_issued_at, prefix, pres.kb_signature);
}

namespace {

struct KbParts {
    std::string audience;
    Bytes nonce;
    int64_t iat = 0;
    Bytes signature;
    std::string sd_hash_b64;
};

KbParts parse_kb(const std::string& kb_segment, const char* fmt) {
    size_t d1 = kb_segment.find('.');
    size_t d2 = d1 == std::string::npos ? std::string::npos
                                        : kb_segment.find('.', d1 + 1);
    if (d1 == std::string::npos || d2 == std::string::npos)
        throw WireError("malformed key-binding JWT");
    HeaderInfo h = parse_header(kb_segment.substr(0, d1));
    if (h.fmt != fmt || h.typ != "kb+jwt" || h.alg != kKbHeaderAlg)
        throw WireError("unexpected key-binding header");
    Json p = parse_json(
        unb64(kb_segment.substr(d1 + 1, d2 - d1 - 1), "kb payload"),
        "kb payload");
    KbParts out;
    out.audience = require_string(p, "aud");
    out.nonce = unb64(require_string(p, "nonce"), "kb nonce");
    out.iat = require_int(p, "iat");
    out.sd_hash_b64 = require_string(p, "sd_hash");
    out.signature = unb64(kb_segment.substr(d2 + 1), "kb signature");
    return out;
}

}  // namespace

sd::SdJwtPresentation decode_sd_presentation(const std::string& token) {
    SplitToken parts = split_token(token);
    expect_header(parts, kSdFormat, "vc+sd-jwt", "ES256");
    if (!last_segment_is_jwt(parts))
        throw WireError("presentation lacks a key-binding JWT");

    sd::SdJwtPresentation pres;
    Json p = parse_json(unb64(parts.payload, "payload"), "payload");
    parse_common_jwt_fields(pres.credential, p);
    if (!p.contains("_sd") || !p["_sd"].is_array())
        throw WireError("missing digest list");
    for (const auto& d : p["_sd"])
        pres.credential.digests.push_back(d.get<std::string>());
    pres.credential.issuer_signature = unb64(parts.signature, "signature");

    for (size_t i = 0; i + 1 < parts.segments.size(); ++i)
        pres.disclosed.push_back(disclosure_from_segment(parts.segments[i]));

    KbParts kb = parse_kb(parts.segments.back(), kSdFormat);
    pres.audience = kb.audience;
    pres.nonce = kb.nonce;
    pres.kb_issued_at = kb.iat;
    pres.kb_signature = kb.signature;
    return pres;
}

// ---------------- MT ----------------

std::string mt_issuer_signing_input(const mt::MerkleCredential& cred) {
    return b64s(header_json("ES256", kMtFormat, "vc+mt-sd")) + "." +
           b64s(mt_payload(cred));
}

std::string encode_credential(const mt::MerkleCredential& cred) {
    std::string token = mt_jwt_part(cred);
    for (const auto& d : cred.svc) token += "~" + d.encoded();
    return token;
}

mt::MerkleCredential decode_mt_credential(const std::string& token) {
    SplitToken parts = split_token(token);
    expect_header(parts, kMtFormat, "vc+mt-sd", "ES256");
    if (last_segment_is_jwt(parts))
        throw WireError("token is a presentation, not a credential");
    Json p = parse_json(unb64(parts.payload, "payload"), "payload");

    mt::MerkleCredential c;
    parse_common_jwt_fields(c, p);
    Bytes root = unb64(require_string(p, "root"), "root");
    if (root.size() != 32) throw WireError("bad root length");
    std::copy(root.begin(), root.end(), c.root.begin());
    c.issuer_signature = unb64(parts.signature, "signature");
    for (const auto& seg : parts.segments)
        c.svc.push_back(disclosure_from_segment(seg));
    return c;
}

std::string mt_kb_signing_input(const mt::MerklePresentation& pres) {
    std::string prefix = mt_jwt_part(pres.credential);
    for (const auto& d : pres.disclosed) prefix += "~" + d.encoded();
    prefix += "~" + proof_segment(pres.proof) + "~";
    return b64s(header_json(kKbHeaderAlg, kMtFormat, "kb+jwt")) + "." +
           b64s(kb_payload(pres.audience, pres.nonce, pres.kb_issued_at,
                           prefix));
}

std::string encode_presentation(const mt::MerklePresentation& pres) {
    std::string prefix = mt_jwt_part(pres.credential);
    for (const auto& d : pres.disclosed) prefix += "~" + d.encoded();
    prefix += "~" + proof_segment(pres.proof) + "~";
    return prefix + kb_jwt(kMtFormat, pres.audience, pres.nonce,
                           pres.kb_issued_at, prefix, pres.kb_signature);
}

mt::MerklePresentation decode_mt_presentation(const std::string& token) {
    SplitToken parts = split_token(token);
    expect_header(parts, kMtFormat, "vc+mt-sd", "ES256");
    if (parts.segments.size() < 2 || !last_segment_is_jwt(parts))
        throw WireError("presentation lacks a proof or key-binding JWT");
    Json p = parse_json(unb64(parts.payload, "payload"), "payload");

    mt::MerklePresentation pres;
    parse_common_jwt_fields(pres.credential, p);
    Bytes root = unb64(require_string(p, "root"), "root");
    if (root.size() != 32) throw WireError("bad root length");
    std::copy(root.begin(), root.end(), pres.credential.root.begin());
    pres.credential.issuer_signature = unb64(parts.signature, "signature");

    for (size_t i = 0; i + 2 < parts.segments.size(); ++i)
        pres.disclosed.push_back(disclosure_from_segment(parts.segments[i]));
    pres.proof =
        decode_proof_segment(parts.segments[parts.segments.size() - 2]);

    KbParts kb = parse_kb(parts.segments.back(), kMtFormat);
    pres.audience = kb.audience;
    pres.nonce = kb.nonce;
    pres.kb_issued_at = kb.iat;
    pres.kb_signature = kb.signature;
    return pres;
}

// ---------------- measurement ----------------

std::string csd_credential_storage_json(const VerifiableCredential& vc) {
    const auto& p = vc.payload;
    const WvcEntry* wi = vc.wvc.find(kIssuerDidClaimKey);
    const WvcEntry* ws = vc.wvc.find(kHolderDidClaimKey);
    if (!wi || !ws)
        throw WireError("credential is missing its DID claim entries");
    Json wvc = Json::array();
    for (const WvcEntry* e : user_entries(vc.wvc.entries))
        wvc.push_back(
            Json::array({b64(e->witness.to_bytes()), e->claim.key,
                         e->claim.value}));
    Json j{{"acc", b64(p.accumulator_value.to_bytes())},
           {"alg", Json{{"acc", p.alg.accumulator},
                        {"hash", p.alg.hash},
                        {"sig", p.alg.signature}}},
           {"exp", p.expires_at},
           {"iat", p.issued_at},
           {"iss", p.issuer_did},
           {"pkr", p.accumulator_pk_ref},
           {"sub", p.holder_did},
           {"typ", p.credential_type},
           {"wi", b64(wi->witness.to_bytes())},
           {"ws", b64(ws->witness.to_bytes())},
           {"wvc", wvc}};
    return j.dump();
}

size_t credential_storage_bytes(const VerifiableCredential& vc) {
    return csd_credential_storage_json(vc).size();
}

size_t credential_storage_bytes(const sd::SdJwtCredential& cred) {
    return encode_credential(cred).size();
}

size_t credential_storage_bytes(const mt::MerkleCredential& cred) {
    return encode_credential(cred).size();
}

SizeReport measure(const VerifiableCredential& vc,
                   const VerifiablePresentation* vp) {
    SizeReport r;
    r.mechanism = "csd";
    r.total_claims = vc.wvc.entries.size() - 2;
    r.credential_bytes = credential_storage_bytes(vc);
    if (vp) {
        r.disclosed = vp->disclosed.size() - 2;
        r.presentation_bytes = encode_presentation(*vp).size();
    }
    return r;
}

SizeReport measure(const sd::SdJwtCredential& cred,
                   const sd::SdJwtPresentation* pres) {
    SizeReport r;
    r.mechanism = "sd";
    r.total_claims = cred.svc.size();
    r.credential_bytes = credential_storage_bytes(cred);
    if (pres) {
        r.disclosed = pres->disclosed.size();
        r.presentation_bytes = encode_presentation(*pres).size();
    }
    return r;
}

SizeReport measure(const mt::MerkleCredential& cred,
                   const mt::MerklePresentation* pres) {
    SizeReport r;
    r.mechanism = "mt";
    r.total_claims = cred.svc.size();
    r.credential_bytes = credential_storage_bytes(cred);
    if (pres) {
        r.disclosed = pres->disclosed.size();
        r.presentation_bytes = encode_presentation(*pres).size();
    }
    return r;
}

}  // namespace csdjwt::wire
