#include "csdjwt/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace csdjwt::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0)
        .count();
}

struct Stats {
    double mean = 0, stddev = 0;
};

Stats stats_of(const std::vector<double>& xs) {
    Stats s;
    if (xs.empty()) return s;
    for (double x : xs) s.mean += x;
    s.mean /= (double)xs.size();
    double var = 0;
    for (double x : xs) var += (x - s.mean) * (x - s.mean);
    s.stddev = xs.size() > 1 ? std::sqrt(var / (double)(xs.size() - 1)) : 0.0;
    return s;
}

constexpr int64_t kBenchIssuedAt = 1754006400;  // fixed epoch for size runs

struct Issued {
    VerifiableCredential csd;
    sd::SdJwtCredential sd_cred;
    mt::MerkleCredential mt_cred;
};

}  // namespace

Actors make_actors(uint64_t seed) {
    Drbg root(seed);
    Actors a;
    a.issuer.did = "did:ex:i1";
    a.issuer.signing_key = Es256PrivateKey::generate(RandomSource(root.next_u64()));
    auto [params, keys] = accumulator::setup(128, RandomSource(root.next_u64()));
    a.issuer.accumulator_keys = keys;
    a.holder.did = "did:ex:h1";
    a.holder.signing_key = Es256PrivateKey::generate(RandomSource(root.next_u64()));
    a.registry.register_document(a.issuer.did_document());
    a.registry.register_document(a.holder.did_document());
    return a;
}

std::vector<Claim> synthetic_claims(size_t n, size_t value_padding) {
    std::vector<Claim> out;
    out.reserve(n);
    for (size_t i = 1; i <= n; ++i) {
        std::string value = "claim_value_" + std::to_string(i);
        while (value.size() < value_padding) value += 'x';
        out.push_back(Claim{"claim_key_" + std::to_string(i), value});
    }
    return out;
}

std::vector<size_t> spaced_indices(size_t n, size_t k) {
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t j = 0; j < k; ++j) out.push_back(j * n / k);
    return out;
}

size_t disclosed_count(double fraction, size_t n) {
    size_t k = (size_t)(fraction * (double)n) + 1;
    return std::min(k, n);
}

namespace {

Issued issue_all(const Actors& actors, std::span<const Claim> claims,
                 uint64_t cell_seed) {
    Drbg cell(cell_seed);
    Issued out;
    IssueOptions copt;
    copt.issued_at = kBenchIssuedAt;
    copt.rng = RandomSource(cell.next_u64());
    out.csd = issue_credential(actors.issuer, actors.holder.did, claims, copt);

    sd::SdIssueOptions sopt;
    sopt.issued_at = kBenchIssuedAt;
    sopt.rng = RandomSource(cell.next_u64());
    out.sd_cred = sd::sd_issue(actors.issuer, actors.holder.did,
                               actors.holder.signing_key.public_key(), claims,
                               sopt);

    mt::MtIssueOptions mopt;
    mopt.issued_at = kBenchIssuedAt;
    mopt.rng = RandomSource(cell.next_u64());
    out.mt_cred = mt::mt_issue(actors.issuer, actors.holder.did,
                               actors.holder.signing_key.public_key(), claims,
                               mopt);
    return out;
}

std::vector<std::string> keys_at(std::span<const Claim> claims,
                                 std::span<const size_t> indices) {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (size_t idx : indices) out.push_back(claims[idx].key);
    return out;
}

}  // namespace

size_t credential_bytes_at(const std::string& mechanism, size_t n,
                           uint64_t seed, size_t value_padding) {
    Actors actors = make_actors(seed);
    auto claims = synthetic_claims(n, value_padding);
    Issued issued = issue_all(actors, claims, seed ^ (n * 0x9e3779b97f4a7c15ull));
    if (mechanism == "csd") return wire::credential_storage_bytes(issued.csd);
    if (mechanism == "sd")
        return wire::credential_storage_bytes(issued.sd_cred);
    if (mechanism == "mt")
        return wire::credential_storage_bytes(issued.mt_cred);
    throw std::invalid_argument("unknown mechanism: " + mechanism);
}

size_t presentation_bytes_at(const std::string& mechanism, size_t n, size_t k,
                             uint64_t seed, size_t value_padding) {
    Actors actors = make_actors(seed);
    auto claims = synthetic_claims(n, value_padding);
    uint64_t cell_seed = seed ^ (n * 0x9e3779b97f4a7c15ull) ^ (k * 0xff51afd7ed558ccdull);
    Issued issued = issue_all(actors, claims, cell_seed);
    auto indices = spaced_indices(n, k);
    auto keys = keys_at(claims, indices);

    Drbg cell(cell_seed + 1);
    PresentationRequest req;
    req.nonce = cell.bytes(16);
    req.audience = "vrf-1";

    if (mechanism == "csd") {
        auto vp = generate_presentation(issued.csd, keys, req, actors.holder);
        return wire::encode_presentation(vp).size();
    }
    if (mechanism == "sd") {
        auto pres = sd::sd_present(issued.sd_cred, keys, req, actors.holder);
        return wire::encode_presentation(pres).size();
    }
    if (mechanism == "mt") {
        auto pres = mt::mt_present(issued.mt_cred, keys, req, actors.holder);
        return wire::encode_presentation(pres).size();
    }
    throw std::invalid_argument("unknown mechanism: " + mechanism);
}

std::vector<StorageRow> run_storage(const BenchConfig& config) {
    std::vector<StorageRow> rows;
    for (const auto& mech : config.mechanisms)
        for (size_t n : config.claim_counts)
            rows.push_back(
                {mech, n,
                 credential_bytes_at(mech, n, config.seed,
                                     config.value_padding)});
    return rows;
}

std::vector<VpRow> run_vp(const BenchConfig& config) {
    std::vector<VpRow> rows;
    for (const auto& mech : config.mechanisms)
        for (size_t n : config.claim_counts)
            for (double f : config.disclosure_fractions) {
                size_t k = disclosed_count(f, n);
                rows.push_back(
                    {mech, n, k,
                     presentation_bytes_at(mech, n, k, config.seed,
                                           config.value_padding)});
            }
    return rows;
}

std::vector<LatencyRow> run_latency(const BenchConfig& config) {
    std::vector<LatencyRow> rows;
    Actors actors = make_actors(config.seed);
    const size_t reps = std::max<size_t>(1, config.repetitions);
    const size_t warmup = reps > 2 ? 2 : 0;

    for (const auto& mech : config.mechanisms) {
        for (size_t n : config.claim_counts) {
            auto claims = synthetic_claims(n, config.value_padding);
            size_t k = disclosed_count(0.5, n);
            auto keys = keys_at(claims, spaced_indices(n, k));
            Drbg cell(config.seed ^ n);
            PresentationRequest req;
            req.nonce = cell.bytes(16);
            req.audience = "vrf-1";

            std::vector<double> t_issue, t_present, t_verify;
            for (size_t rep = 0; rep < reps + warmup; ++rep) {
                VerifyOptions vopt;
                vopt.now = kBenchIssuedAt + 60;
                if (mech == "csd") {
                    IssueOptions opt;
                    opt.issued_at = kBenchIssuedAt;
                    opt.rng = RandomSource(cell.next_u64());
                    auto t0 = Clock::now();
                    auto vc = issue_credential(actors.issuer,
                                               actors.holder.did, claims, opt);
                    double d_issue = ms_since(t0);
                    t0 = Clock::now();
                    auto vp = generate_presentation(vc, keys, req, actors.holder);
                    double d_present = ms_since(t0);
                    t0 = Clock::now();
                    auto out = verify_presentation(vp, req.nonce, req.audience,
                                                   actors.registry, vopt);
                    double d_verify = ms_since(t0);
                    if (!out.accepted)
                        throw std::runtime_error("bench verification failed");
                    if (rep >= warmup) {
                        t_issue.push_back(d_issue);
                        t_present.push_back(d_present);
                        t_verify.push_back(d_verify);
                    }
                } else if (mech == "sd") {
                    sd::SdIssueOptions opt;
                    opt.issued_at = kBenchIssuedAt;
                    opt.rng = RandomSource(cell.next_u64());
                    auto t0 = Clock::now();
                    auto cred = sd::sd_issue(
                        actors.issuer, actors.holder.did,
                        actors.holder.signing_key.public_key(), claims, opt);
                    double d_issue = ms_since(t0);
                    t0 = Clock::now();
                    auto pres = sd::sd_present(cred, keys, req, actors.holder);
                    double d_present = ms_since(t0);
                    t0 = Clock::now();
                    auto out = sd::sd_verify(pres, req.nonce, req.audience,
                                             actors.registry, vopt);
                    double d_verify = ms_since(t0);
                    if (!out.accepted)
                        throw std::runtime_error("bench verification failed");
                    if (rep >= warmup) {
                        t_issue.push_back(d_issue);
                        t_present.push_back(d_present);
                        t_verify.push_back(d_verify);
                    }
                } else if (mech == "mt") {
                    mt::MtIssueOptions opt;
                    opt.issued_at = kBenchIssuedAt;
                    opt.rng = RandomSource(cell.next_u64());
                    auto t0 = Clock::now();
                    auto cred = mt::mt_issue(
                        actors.issuer, actors.holder.did,
                        actors.holder.signing_key.public_key(), claims, opt);
                    double d_issue = ms_since(t0);
                    t0 = Clock::now();
                    auto pres = mt::mt_present(cred, keys, req, actors.holder);
                    double d_present = ms_since(t0);
                    t0 = Clock::now();
                    auto out = mt::mt_verify(pres, req.nonce, req.audience,
                                             actors.registry, vopt);
                    double d_verify = ms_since(t0);
                    if (!out.accepted)
                        throw std::runtime_error("bench verification failed");
                    if (rep >= warmup) {
                        t_issue.push_back(d_issue);
                        t_present.push_back(d_present);
                        t_verify.push_back(d_verify);
                    }
                }
            }
            auto si = stats_of(t_issue);
            auto sp = stats_of(t_present);
            auto sv = stats_of(t_verify);
            rows.push_back({mech, "issue", n, 0, si.mean, si.stddev});
            rows.push_back({mech, "present", n, k, sp.mean, sp.stddev});
            rows.push_back({mech, "verify", n, k, sv.mean, sv.stddev});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<StorageRow>& rows) {
    std::ostringstream out;
    out << "mechanism,claims,credential_bytes\n";
    for (const auto& r : rows)
        out << r.mechanism << "," << r.claims << "," << r.credential_bytes
            << "\n";
    return out.str();
}

std::string to_csv(const std::vector<VpRow>& rows) {
    std::ostringstream out;
    out << "mechanism,claims,disclosed,presentation_bytes\n";
    for (const auto& r : rows)
        out << r.mechanism << "," << r.claims << "," << r.disclosed << ","
            << r.presentation_bytes << "\n";
    return out.str();
}

std::string to_csv(const std::vector<LatencyRow>& rows) {
    std::ostringstream out;
    out << "mechanism,phase,claims,disclosed,mean_ms,stddev_ms\n";
    char buf[64];
    for (const auto& r : rows) {
        out << r.mechanism << "," << r.phase << "," << r.claims << ","
            << r.disclosed << ",";
        snprintf(buf, sizeof(buf), "%.6f,%.6f", r.mean_ms, r.stddev_ms);
        out << buf << "\n";
    }
    return out.str();
}

}  // namespace csdjwt::bench
