#pragma once

#include <map>
#include <mutex>

#include "csdjwt/claims.hpp"

namespace csdjwt {

// Mock verifiable data registry: an append-only map from DID to DID
// Document, optionally persisted to a single JSON file.

struct RegistryKey {
    std::string id;
    std::string scheme;  // "ES256" for verification keys, "bn254" for
                         // accumulator keys
    Bytes bytes;

    bool operator==(const RegistryKey&) const = default;
};

struct DidDocument {
    std::string did;
    std::vector<RegistryKey> verification_keys;
    std::vector<RegistryKey> accumulator_keys;

    const RegistryKey* find_verification_key(const std::string& id) const;
    const RegistryKey* find_accumulator_key(const std::string& id) const;

    Json to_json() const;
    static DidDocument from_json(const Json& j);

    bool operator==(const DidDocument&) const = default;
};

class RegistryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Registry {
  public:
    Registry() = default;
    Registry(Registry&& o) noexcept : documents_(std::move(o.documents_)) {}
    Registry& operator=(Registry&& o) noexcept {
        documents_ = std::move(o.documents_);
        return *this;
    }

    // Fails on duplicate DID; documents are immutable once registered.
    void register_document(const DidDocument& doc);

    std::optional<DidDocument> resolve(const std::string& did) const;

    size_t size() const;

    Json to_json() const;
    static Registry from_json(const Json& j);

    void save(const std::string& path) const;
    static Registry load(const std::string& path);
    // Missing file loads as an empty registry.
    static Registry load_or_empty(const std::string& path);

  private:
    mutable std::mutex mu_;
    std::map<std::string, DidDocument> documents_;
};

// JSON envelope for key material on disk:
// {"kind": ..., "curve": ..., "encoding": ..., "bytes_b64url": ...}
struct KeyEnvelope {
    std::string kind;
    std::string curve;
    std::string encoding;
    Bytes bytes;

    Json to_json() const;
    static KeyEnvelope from_json(const Json& j);
    void save(const std::string& path) const;
    static KeyEnvelope load(const std::string& path);
};

}  // namespace csdjwt
