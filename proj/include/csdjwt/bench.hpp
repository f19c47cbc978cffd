#pragma once

#include "csdjwt/wire.hpp"

namespace csdjwt::bench {

// Benchmark grid reproducing the storage and presentation-size
// experiments: synthetic claims claim_key_i / claim_value_i, claim counts
// 10..100, disclosure fractions 0%..90% each mapped to floor(f*N)+1
// disclosed claims, sizes measured on the exact wire strings.

struct BenchConfig {
    std::vector<std::string> mechanisms = {"csd", "sd", "mt"};
    std::vector<size_t> claim_counts = {10, 20, 30, 40, 50,
                                        60, 70, 80, 90, 100};
    std::vector<double> disclosure_fractions = {0.0, 0.1, 0.2, 0.3, 0.4,
                                                0.5, 0.6, 0.7, 0.8, 0.9};
    size_t repetitions = 100;
    uint64_t seed = 42;
    // pad synthetic claim values with 'x' up to this many bytes (0 keeps
    // the natural claim_value_i text)
    size_t value_padding = 0;
};

struct Actors {
    IssuerIdentity issuer;
    HolderIdentity holder;
    Registry registry;
};

Actors make_actors(uint64_t seed);

std::vector<Claim> synthetic_claims(size_t n, size_t value_padding = 0);

// evenly spaced disclosure pattern: floor(j*n/k) for j in [0, k)
std::vector<size_t> spaced_indices(size_t n, size_t k);

size_t disclosed_count(double fraction, size_t n);

struct StorageRow {
    std::string mechanism;
    size_t claims = 0;
    size_t credential_bytes = 0;
};

struct VpRow {
    std::string mechanism;
    size_t claims = 0;
    size_t disclosed = 0;
    size_t presentation_bytes = 0;
};

struct LatencyRow {
    std::string mechanism;
    std::string phase;  // issue | present | verify
    size_t claims = 0;
    size_t disclosed = 0;
    double mean_ms = 0;
    double stddev_ms = 0;
};

std::vector<StorageRow> run_storage(const BenchConfig& config);
std::vector<VpRow> run_vp(const BenchConfig& config);
std::vector<LatencyRow> run_latency(const BenchConfig& config);

// single grid point measurements used by the CLI and the acceptance suite
size_t credential_bytes_at(const std::string& mechanism, size_t n,
                           uint64_t seed, size_t value_padding = 0);
size_t presentation_bytes_at(const std::string& mechanism, size_t n, size_t k,
                             uint64_t seed, size_t value_padding = 0);

std::string to_csv(const std::vector<StorageRow>& rows);
std::string to_csv(const std::vector<VpRow>& rows);
std::string to_csv(const std::vector<LatencyRow>& rows);

}  // namespace csdjwt::bench
