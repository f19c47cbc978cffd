#include "csdjwt/claims.hpp"

#include <cmath>

namespace csdjwt {

namespace {

void reject_non_finite(const Json& v) {
    if (v.is_number_float() && !std::isfinite(v.get<double>()))
        throw ClaimError("claim value contains a non-finite number");
    if (v.is_object() || v.is_array())
        for (const auto& item : v) reject_non_finite(item);
}

}  // namespace

void validate_claim_key(const std::string& key) {
    if (key.empty()) throw ClaimError("claim key must be non-empty");
    for (unsigned char c : key)
        if (c < 0x20 || c == 0x7f)
            throw ClaimError("claim key contains a control character");
}

std::string canonicalize(const Claim& claim) {
    validate_claim_key(claim.key);
    reject_non_finite(claim.value);
    // nlohmann keeps object members sorted and dump() emits no
    // insignificant whitespace and shortest round-trip numbers.
    return claim.key + ":" + claim.value.dump();
}

bn254::Fr hash_to_element(const Claim& claim) {
    auto digest = sha256(canonicalize(claim));
    return bn254::Fr::from_bytes_be_mod(digest);
}

std::vector<Claim> claims_from_json(const Json& object) {
    if (!object.is_object())
        throw ClaimError("claims document must be a JSON object");
    std::vector<Claim> out;
    out.reserve(object.size());
    for (const auto& [key, value] : object.items()) {
        validate_claim_key(key);
        out.push_back(Claim{key, value});
    }
    return out;
}

}  // namespace csdjwt
