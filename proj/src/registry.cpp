#include "csdjwt/registry.hpp"

#include <fstream>
#include <set>

namespace csdjwt {

namespace {

Json key_to_json(const RegistryKey& k) {
    return Json{{"id", k.id},
                {"scheme", k.scheme},
                {"bytes_b64url", base64url_encode(k.bytes)}};
}

RegistryKey key_from_json(const Json& j) {
    auto bytes = base64url_decode(j.at("bytes_b64url").get<std::string>());
    if (!bytes) throw RegistryError("bad base64url in registry key");
    return RegistryKey{j.at("id").get<std::string>(),
                       j.at("scheme").get<std::string>(), *bytes};
}

}  // namespace

const RegistryKey* DidDocument::find_verification_key(
    const std::string& id) const {
    for (const auto& k : verification_keys)
        if (k.id == id) return &k;
    return nullptr;
}

const RegistryKey* DidDocument::find_accumulator_key(
    const std::string& id) const {
    for (const auto& k : accumulator_keys)
        if (k.id == id) return &k;
    return nullptr;
}

Json DidDocument::to_json() const {
    Json vks = Json::array();
    for (const auto& k : verification_keys) vks.push_back(key_to_json(k));
    Json aks = Json::array();
    for (const auto& k : accumulator_keys) aks.push_back(key_to_json(k));
    return Json{{"did", did},
                {"verification_keys", vks},
                {"accumulator_keys", aks}};
}

DidDocument DidDocument::from_json(const Json& j) {
    DidDocument doc;
    doc.did = j.at("did").get<std::string>();
    for (const auto& k : j.at("verification_keys"))
        doc.verification_keys.push_back(key_from_json(k));
    for (const auto& k : j.at("accumulator_keys"))
        doc.accumulator_keys.push_back(key_from_json(k));
    std::set<std::string> ids;
    for (const auto& k : doc.verification_keys)
        if (!ids.insert(k.id).second)
            throw RegistryError("duplicate key id in document");
    for (const auto& k : doc.accumulator_keys)
        if (!ids.insert(k.id).second)
            throw RegistryError("duplicate key id in document");
    return doc;
}

void Registry::register_document(const DidDocument& doc) {
    if (doc.did.empty()) throw RegistryError("empty did");
    std::lock_guard<std::mutex> lock(mu_);
    auto [_, inserted] = documents_.emplace(doc.did, doc);
    if (!inserted) throw RegistryError("duplicate did: " + doc.did);
}

std::optional<DidDocument> Registry::resolve(const std::string& did) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = documents_.find(did);
    if (it == documents_.end()) return std::nullopt;
    return it->second;
}

size_t Registry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return documents_.size();
}

Json Registry::to_json() const {
    std::lock_guard<std::mutex> lock(mu_);
    Json docs = Json::array();
    for (const auto& [_, doc] : documents_) docs.push_back(doc.to_json());
    return Json{{"documents", docs}};
}

Registry Registry::from_json(const Json& j) {
    Registry reg;
    for (const auto& d : j.at("documents"))
        reg.register_document(DidDocument::from_json(d));
    return reg;
}

void Registry::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw RegistryError("cannot write registry file: " + path);
    out << to_json().dump() << "\n";
}

Registry Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot read registry file: " + path);
    Json j = Json::parse(in, nullptr, true);
    return from_json(j);
}

Registry Registry::load_or_empty(const std::string& path) {
    std::ifstream in(path);
    if (!in) return Registry();
    Json j = Json::parse(in, nullptr, true);
    return from_json(j);
}

Json KeyEnvelope::to_json() const {
    return Json{{"kind", kind},
                {"curve", curve},
                {"encoding", encoding},
                {"bytes_b64url", base64url_encode(bytes)}};
}

KeyEnvelope KeyEnvelope::from_json(const Json& j) {
    auto bytes = base64url_decode(j.at("bytes_b64url").get<std::string>());
    if (!bytes) throw RegistryError("bad base64url in key envelope");
    return KeyEnvelope{j.at("kind").get<std::string>(),
                       j.at("curve").get<std::string>(),
                       j.at("encoding").get<std::string>(), *bytes};
}

void KeyEnvelope::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw RegistryError("cannot write key file: " + path);
    out << to_json().dump() << "\n";
}

KeyEnvelope KeyEnvelope::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot read key file: " + path);
    return from_json(Json::parse(in, nullptr, true));
}

}  // namespace csdjwt
