#pragma once

#include <json.hpp>

#include "csdjwt/bn254/fp.hpp"
#include "csdjwt/bytes.hpp"

namespace csdjwt {

using Json = nlohmann::json;

// A key-value assertion inside a credential. Keys are UTF-8, non-empty,
// free of ASCII control characters and unique per credential; values are
// arbitrary JSON.
struct Claim {
    std::string key;
    Json value;

    bool operator==(const Claim& o) const {
        return key == o.key && value == o.value;
    }
};

// Thrown on malformed claims (bad key, non-finite number in the value).
class ClaimError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// "key" ++ ":" ++ canonical JSON of value (sorted object keys, no
// whitespace, shortest-form numbers). Injective over (key, value) and
// stable across platforms.
std::string canonicalize(const Claim& claim);

// Scalar image of a claim: big-endian SHA-256 of the canonical encoding,
// reduced modulo the accumulator group order.
bn254::Fr hash_to_element(const Claim& claim);

void validate_claim_key(const std::string& key);

// Parses a JSON object into one Claim per top-level member, in canonical
// (sorted) key order.
std::vector<Claim> claims_from_json(const Json& object);

}  // namespace csdjwt
