#pragma once

#include "csdjwt/merkle.hpp"
#include "csdjwt/protocol.hpp"
#include "csdjwt/sd_jwt.hpp"

namespace csdjwt::wire {

// Compact token grammar shared by all three mechanisms:
//
//   header_b64url "." payload_b64url "." signature_b64url ["~" segment]*
//
// Headers carry {"alg", "fmt", "typ"}; fmt is one of "csd-jwt", "sd-jwt",
// "mt-sd". Disclosure segments are base64url of the canonical JSON array
// [salt_or_witness_b64url, key, value]. SD/MT presentations end with a
// key-binding JWT segment; MT presentations carry the inclusion proof in
// the segment before it. No padding, no whitespace, byte-deterministic.

class WireError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsdFormat = "csd-jwt";
inline constexpr const char* kSdFormat = "sd-jwt";
inline constexpr const char* kMtFormat = "mt-sd";

enum class TokenKind {
    csd_credential,
    csd_presentation,
    sd_credential,
    sd_presentation,
    mt_credential,
    mt_presentation,
};

TokenKind peek_kind(const std::string& token);

std::string encode_credential(const VerifiableCredential& vc);
std::string encode_credential(const sd::SdJwtCredential& cred);
std::string encode_credential(const mt::MerkleCredential& cred);

std::string encode_presentation(const VerifiablePresentation& vp);
std::string encode_presentation(const sd::SdJwtPresentation& pres);
std::string encode_presentation(const mt::MerklePresentation& pres);

VerifiableCredential decode_csd_credential(const std::string& token);
sd::SdJwtCredential decode_sd_credential(const std::string& token);
mt::MerkleCredential decode_mt_credential(const std::string& token);

VerifiablePresentation decode_csd_presentation(const std::string& token);
sd::SdJwtPresentation decode_sd_presentation(const std::string& token);
mt::MerklePresentation decode_mt_presentation(const std::string& token);

// Byte strings covered by the signatures. Shared by issue/present (to
// sign) and verify (to check).
std::string csd_presentation_signing_input(const VerifiablePresentation& vp);
std::string sd_issuer_signing_input(const sd::SdJwtCredential& cred);
std::string mt_issuer_signing_input(const mt::MerkleCredential& cred);
std::string sd_kb_signing_input(const sd::SdJwtPresentation& pres);
std::string mt_kb_signing_input(const mt::MerklePresentation& pres);

// Holder-side storage footprint of a credential, in bytes. The CSD
// credential is an unsigned structure and is stored as one canonical
// JSON document (accumulator, metadata, witness-value container). SD/MT
// credentials are stored as issued: the signed JWT plus the base64url
// disclosure strings whose exact bytes the digests commit to.
size_t credential_storage_bytes(const VerifiableCredential& vc);
size_t credential_storage_bytes(const sd::SdJwtCredential& cred);
size_t credential_storage_bytes(const mt::MerkleCredential& cred);

std::string csd_credential_storage_json(const VerifiableCredential& vc);

// Byte-exact measurement record for the benchmarks.
struct SizeReport {
    std::string mechanism;
    size_t total_claims = 0;
    size_t disclosed = 0;
    size_t credential_bytes = 0;
    size_t presentation_bytes = 0;
};

SizeReport measure(const VerifiableCredential& vc,
                   const VerifiablePresentation* vp = nullptr);
SizeReport measure(const sd::SdJwtCredential& cred,
                   const sd::SdJwtPresentation* pres = nullptr);
SizeReport measure(const mt::MerkleCredential& cred,
                   const mt::MerklePresentation* pres = nullptr);

}  // namespace csdjwt::wire
