#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "csdjwt/bench.hpp"

using namespace csdjwt;

namespace {

// exit codes: 0 accept/success, 2 I/O, 3 decode, 4 argument,
// 10+reason for protocol rejections
constexpr int kExitIo = 2;
constexpr int kExitDecode = 3;
constexpr int kExitArgs = 4;
constexpr int kExitRejectBase = 10;

int reject_exit_code(RejectReason r) {
    return kExitRejectBase + (int)r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    while (!data.empty() && (data.back() == '\n' || data.back() == '\r'))
        data.pop_back();
    return data;
}

void write_file(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

std::string did_file_stem(const std::string& did) {
    std::string out = did;
    for (char& c : out)
        if (c == ':' || c == '/') c = '_';
    return out;
}

std::string key_path(const std::string& dir, const std::string& did,
                     const char* suffix) {
    return dir + "/" + did_file_stem(did) + suffix;
}

Es256PrivateKey load_signing_key(const std::string& dir,
                                 const std::string& did) {
    auto env = KeyEnvelope::load(key_path(dir, did, ".sig.json"));
    if (env.kind != "ecdsa-p256-secret" || env.bytes.size() != 32)
        throw std::runtime_error("unexpected signing key envelope");
    return Es256PrivateKey::from_scalar(env.bytes);
}

accumulator::KeyPair load_accumulator_keys(const std::string& dir,
                                           const std::string& did) {
    auto env = KeyEnvelope::load(key_path(dir, did, ".acc.json"));
    if (env.kind != "accumulator-secret" || env.bytes.size() != 32)
        throw std::runtime_error("unexpected accumulator key envelope");
    accumulator::KeyPair kp;
    kp.sk.alpha = bn254::Fr::from_bytes_be_mod(env.bytes);
    kp.pk.q_tilde =
        accumulator::SystemParams::bn254_default().generator_g2.mul(
            kp.sk.alpha);
    return kp;
}

Bytes parse_nonce(const std::string& text) {
    auto raw = base64url_decode(text);
    if (!raw || raw->size() < 16)
        throw std::runtime_error(
            "nonce must be base64url of at least 16 bytes");
    return *raw;
}

Es256PublicKey holder_public_key(const Registry& registry,
                                 const std::string& did) {
    auto doc = registry.resolve(did);
    if (!doc) throw std::runtime_error("holder did not registered: " + did);
    for (const auto& k : doc->verification_keys)
        if (k.scheme == "ES256") return Es256PublicKey{k.bytes};
    throw std::runtime_error("no ES256 key registered for " + did);
}

struct GridOptions {
    std::string mechanisms = "csd,sd,mt";
    std::string claims;
    std::string disclose;
    size_t reps = 100;
    uint64_t seed = 42;
    size_t value_padding = 0;
    std::string out = "-";
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

bench::BenchConfig grid_config(const GridOptions& opt) {
    bench::BenchConfig cfg;
    cfg.mechanisms = split_list(opt.mechanisms);
    for (const auto& m : cfg.mechanisms)
        if (m != "csd" && m != "sd" && m != "mt")
            throw std::runtime_error("unknown mechanism: " + m);
    if (!opt.claims.empty()) {
        cfg.claim_counts.clear();
        for (const auto& s : split_list(opt.claims))
            cfg.claim_counts.push_back(std::stoul(s));
    }
    if (!opt.disclose.empty()) {
        cfg.disclosure_fractions.clear();
        for (const auto& s : split_list(opt.disclose))
            cfg.disclosure_fractions.push_back(std::stod(s));
    }
    cfg.repetitions = opt.reps;
    cfg.seed = opt.seed;
    cfg.value_padding = opt.value_padding;
    return cfg;
}

void add_grid_flags(CLI::App* cmd, GridOptions& opt) {
    cmd->add_option("--mechanism", opt.mechanisms,
                    "comma list from {csd,sd,mt}");
    cmd->add_option("--claims", opt.claims,
                    "comma list of claim counts (default 10..100 step 10)");
    cmd->add_option(
        "--disclose", opt.disclose,
        "comma list of disclosure fractions f; each grid point presents "
        "floor(f*N)+1 claims (default 0,0.1,...,0.9)");
    cmd->add_option("--reps", opt.reps, "repetitions per grid point");
    cmd->add_option("--seed", opt.seed, "RNG seed for reproducible runs");
    cmd->add_option("--value-padding", opt.value_padding,
                    "pad synthetic claim values to this many bytes");
    cmd->add_option("--out", opt.out, "output CSV path ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "csdjwt: accumulator-based selective disclosure for verifiable "
        "credentials, with SD-JWT and Merkle-tree baselines"};
    app.require_subcommand(1);

    // ---- keygen ----
    std::string kg_role, kg_did, kg_registry, kg_outdir = ".";
    uint64_t kg_seed = 0;
    bool kg_seeded = false;
    auto* keygen = app.add_subcommand(
        "keygen", "generate keys for a party and register its DID document");
    keygen->add_option("--role", kg_role, "issuer or holder")->required();
    keygen->add_option("--did", kg_did, "party DID")->required();
    keygen->add_option("--registry", kg_registry, "registry JSON file")
        ->required();
    keygen->add_option("--out-dir", kg_outdir, "key output directory");
    keygen->add_option("--seed", kg_seed, "derive keys from this seed")
        ->each([&](const std::string&) { kg_seeded = true; });

    // ---- issue ----
    std::string is_registry, is_keys = ".", is_issuer, is_holder, is_claims;
    std::string is_mech = "csd", is_out = "-", is_type;
    int64_t is_validity = 86400 * 365;
    uint64_t is_seed = 0;
    bool is_seeded = false;
    auto* issue = app.add_subcommand(
        "issue", "issue a credential over a JSON object of claims");
    issue->add_option("--registry", is_registry)->required();
    issue->add_option("--keys", is_keys, "issuer key directory");
    issue->add_option("--issuer", is_issuer, "issuer DID")->required();
    issue->add_option("--holder", is_holder, "holder DID")->required();
    issue->add_option("--claims", is_claims, "claims JSON file")->required();
    issue->add_option("--mechanism", is_mech, "csd | sd | mt");
    issue->add_option("--type", is_type, "credential type string");
    issue->add_option("--validity", is_validity, "validity in seconds");
    issue->add_option("--out", is_out, "credential token output");
    issue->add_option("--seed", is_seed, "deterministic issuance randomness")
        ->each([&](const std::string&) { is_seeded = true; });

    // ---- present ----
    std::string pr_credential, pr_keys = ".", pr_holder, pr_disclose;
    std::string pr_nonce, pr_audience, pr_out = "-";
    auto* present = app.add_subcommand(
        "present", "build a holder-signed selective presentation");
    present->add_option("--credential", pr_credential)->required();
    present->add_option("--keys", pr_keys, "holder key directory");
    present->add_option("--holder", pr_holder, "holder DID")->required();
    present->add_option("--disclose", pr_disclose,
                        "comma list of claim keys to disclose");
    present->add_option("--nonce", pr_nonce, "verifier nonce (base64url)")
        ->required();
    present->add_option("--audience", pr_audience, "verifier identifier")
        ->required();
    present->add_option("--out", pr_out, "presentation token output");

    // ---- verify ----
    std::string vf_presentation, vf_registry, vf_nonce, vf_audience;
    std::string vf_nonce_store;
    int64_t vf_at = 0;
    auto* verify = app.add_subcommand(
        "verify",
        "verify a presentation; exit 0 on accept, 10+reason on reject");
    verify->add_option("--presentation", vf_presentation)->required();
    verify->add_option("--registry", vf_registry)->required();
    verify->add_option("--nonce", vf_nonce, "expected nonce (base64url)")
        ->required();
    verify->add_option("--audience", vf_audience, "expected audience")
        ->required();
    verify->add_option("--nonce-store", vf_nonce_store,
                       "persistent single-use nonce ledger");
    verify->add_option("--at", vf_at, "verification time (unix seconds)");

    // ---- benches ----
    GridOptions bs_opt, bv_opt, bl_opt;
    auto* bench_storage = app.add_subcommand(
        "bench-storage", "credential storage bytes per mechanism and N");
    add_grid_flags(bench_storage, bs_opt);
    auto* bench_vp = app.add_subcommand(
        "bench-vp", "presentation bytes per mechanism, N and disclosed k");
    add_grid_flags(bench_vp, bv_opt);
    auto* bench_latency = app.add_subcommand(
        "bench-latency",
        "issue/present/verify wall-clock latency per mechanism and N");
    add_grid_flags(bench_latency, bl_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*keygen) {
            if (kg_role != "issuer" && kg_role != "holder")
                throw CLI::ValidationError("--role must be issuer or holder");
            RandomSource rng =
                kg_seeded ? RandomSource(kg_seed) : RandomSource();

            Registry registry = Registry::load_or_empty(kg_registry);
            if (registry.resolve(kg_did))
                throw std::runtime_error("did already registered: " + kg_did);
            auto signing = Es256PrivateKey::generate(rng);
            KeyEnvelope sig_env{"ecdsa-p256-secret", "p-256", "scalar-be32",
                                Bytes(signing.scalar().begin(),
                                      signing.scalar().end())};
            sig_env.save(key_path(kg_outdir, kg_did, ".sig.json"));

            DidDocument doc;
            doc.did = kg_did;
            doc.verification_keys.push_back(
                {"sig-1", "ES256", signing.public_key().sec1});
            if (kg_role == "issuer") {
                auto [params, kp] = accumulator::setup(128, rng);
                auto alpha = kp.sk.alpha.to_bytes_be();
                KeyEnvelope acc_env{"accumulator-secret", "bn254",
                                    "scalar-be32",
                                    Bytes(alpha.begin(), alpha.end())};
                acc_env.save(key_path(kg_outdir, kg_did, ".acc.json"));
                auto pk = kp.pk.to_bytes();
                KeyEnvelope acc_pub{"accumulator-public", "bn254",
                                    "g2-compressed",
                                    Bytes(pk.begin(), pk.end())};
                acc_pub.save(key_path(kg_outdir, kg_did, ".acc.pub.json"));
                doc.accumulator_keys.push_back(
                    {"acc-1", "bn254", Bytes(pk.begin(), pk.end())});
            }
            registry.register_document(doc);
            registry.save(kg_registry);
            std::cout << "registered " << kg_did << "\n";
            return 0;
        }

        if (*issue) {
            Registry registry = Registry::load(is_registry);
            IssuerIdentity issuer;
            issuer.did = is_issuer;
            issuer.signing_key = load_signing_key(is_keys, is_issuer);
            if (!registry.resolve(is_issuer))
                throw std::runtime_error("issuer did not registered");

            std::ifstream cf(is_claims);
            if (!cf) throw std::runtime_error("cannot read " + is_claims);
            auto claims = claims_from_json(Json::parse(cf));

            RandomSource rng =
                is_seeded ? RandomSource(is_seed) : RandomSource();
            std::string token;
            if (is_mech == "csd") {
                issuer.accumulator_keys =
                    load_accumulator_keys(is_keys, is_issuer);
                IssueOptions opt;
                if (!is_type.empty()) opt.credential_type = is_type;
                opt.validity_seconds = is_validity;
                opt.rng = rng;
                token = wire::encode_credential(
                    issue_credential(issuer, is_holder, claims, opt));
            } else if (is_mech == "sd") {
                sd::SdIssueOptions opt;
                if (!is_type.empty()) opt.credential_type = is_type;
                opt.validity_seconds = is_validity;
                opt.rng = rng;
                token = wire::encode_credential(
                    sd::sd_issue(issuer, is_holder,
                                 holder_public_key(registry, is_holder),
                                 claims, opt));
            } else if (is_mech == "mt") {
                mt::MtIssueOptions opt;
                if (!is_type.empty()) opt.credential_type = is_type;
                opt.validity_seconds = is_validity;
                opt.rng = rng;
                token = wire::encode_credential(
                    mt::mt_issue(issuer, is_holder,
                                 holder_public_key(registry, is_holder),
                                 claims, opt));
            } else {
                throw CLI::ValidationError("unknown mechanism " + is_mech);
            }
            write_file(is_out, token + "\n");
            return 0;
        }

        if (*present) {
            HolderIdentity holder;
            holder.did = pr_holder;
            holder.signing_key = load_signing_key(pr_keys, pr_holder);

            PresentationRequest req;
            req.nonce = parse_nonce(pr_nonce);
            req.audience = pr_audience;
            auto keys = split_list(pr_disclose);

            std::string token = read_file(pr_credential);
            std::string out;
            switch (wire::peek_kind(token)) {
                case wire::TokenKind::csd_credential:
                    out = wire::encode_presentation(generate_presentation(
                        wire::decode_csd_credential(token), keys, req,
                        holder));
                    break;
                case wire::TokenKind::sd_credential:
                    out = wire::encode_presentation(
                        sd::sd_present(wire::decode_sd_credential(token),
                                       keys, req, holder));
                    break;
                case wire::TokenKind::mt_credential:
                    out = wire::encode_presentation(
                        mt::mt_present(wire::decode_mt_credential(token),
                                       keys, req, holder));
                    break;
                default:
                    throw wire::WireError("input is not a credential token");
            }
            write_file(pr_out, out + "\n");
            return 0;
        }

        if (*verify) {
            Registry registry = Registry::load(vf_registry);
            Bytes nonce = parse_nonce(vf_nonce);
            NonceStore store;
            bool persist = !vf_nonce_store.empty();
            if (persist) store = NonceStore::load_or_empty(vf_nonce_store);

            VerifyOptions opt;
            opt.now = vf_at;
            opt.nonce_store = &store;

            std::string token = read_file(vf_presentation);
            VerifyOutcome outcome;
            switch (wire::peek_kind(token)) {
                case wire::TokenKind::csd_presentation:
                    outcome = verify_presentation(
                        wire::decode_csd_presentation(token), nonce,
                        vf_audience, registry, opt);
                    break;
                case wire::TokenKind::sd_presentation:
                    outcome =
                        sd::sd_verify(wire::decode_sd_presentation(token),
                                      nonce, vf_audience, registry, opt);
                    break;
                case wire::TokenKind::mt_presentation:
                    outcome =
                        mt::mt_verify(wire::decode_mt_presentation(token),
                                      nonce, vf_audience, registry, opt);
                    break;
                default:
                    throw wire::WireError("input is not a presentation token");
            }
            if (!outcome.accepted) {
                std::cerr << "reject: " << to_string(outcome.reason);
                if (!outcome.detail.empty())
                    std::cerr << " (" << outcome.detail << ")";
                std::cerr << "\n";
                return reject_exit_code(outcome.reason);
            }
            if (persist) store.save(vf_nonce_store);
            std::cout << "accept\n";
            return 0;
        }

        if (*bench_storage) {
            auto rows = bench::run_storage(grid_config(bs_opt));
            write_file(bs_opt.out, bench::to_csv(rows));
            return 0;
        }
        if (*bench_vp) {
            auto rows = bench::run_vp(grid_config(bv_opt));
            write_file(bv_opt.out, bench::to_csv(rows));
            return 0;
        }
        if (*bench_latency) {
            auto rows = bench::run_latency(grid_config(bl_opt));
            write_file(bl_opt.out, bench::to_csv(rows));
            return 0;
        }
    } catch (const wire::WireError& e) {
        std::cerr << "decode error: " << e.what() << "\n";
        return kExitDecode;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const ProtocolError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
