#pragma once

#include <stdexcept>
#include <vector>

#include "csdjwt/bn254/pairing.hpp"
#include "csdjwt/bytes.hpp"

namespace csdjwt::accumulator {

using bn254::Fr;
using bn254::G1;
using bn254::G2;

// Positive pairing-based accumulator over BN254. The accumulator value is
// V = prod(y_i + alpha) * V0 in G1; the witness for y is W = (y+alpha)^-1 * V;
// membership holds iff e(W, y*G2 + Q) == e(V, G2) with Q = alpha*G2.

struct SystemParams {
    unsigned security_level = 128;
    G1 generator_g1;
    G2 generator_g2;

    static SystemParams bn254_default();
};

struct SecretKey {
    Fr alpha;
};

struct PublicKey {
    G2 q_tilde;  // alpha * generator_g2

    std::array<uint8_t, 64> to_bytes() const { return q_tilde.to_bytes(); }
    static std::optional<PublicKey> from_bytes(std::span<const uint8_t> b);
};

struct AccumulatorValue {
    G1 point;

    std::array<uint8_t, 32> to_bytes() const { return point.to_bytes(); }
    static std::optional<AccumulatorValue> from_bytes(
        std::span<const uint8_t> b);
    bool operator==(const AccumulatorValue& o) const {
        return point.equals(o.point);
    }
};

struct Witness {
    G1 point;

    std::array<uint8_t, 32> to_bytes() const { return point.to_bytes(); }
    static std::optional<Witness> from_bytes(std::span<const uint8_t> b);
    bool operator==(const Witness& o) const { return point.equals(o.point); }
};

using Element = Fr;

class AccumulatorError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct KeyPair {
    SecretKey sk;
    PublicKey pk;
};

// Samples the trapdoor. Only security level 128 (BN254) is supported.
std::pair<SystemParams, KeyPair> setup(unsigned security_level,
                                       RandomSource rng = {});

// Fresh initial value V0 = s * G1 for random nonzero s.
AccumulatorValue init_accumulator(const SystemParams& params,
                                  RandomSource rng = {});

// V' = prod(y_i + alpha) * V. Order independent; rejects duplicates and
// the (negligible-probability) trapdoor collision y = -alpha.
AccumulatorValue accumulate_batch(const AccumulatorValue& value,
                                  std::span<const Element> elements,
                                  const SecretKey& sk);

enum class Exec { serial, parallel };

// W_i = (y_i + alpha)^-1 * V, one per element, in input order. The value
// must be the accumulator over exactly these elements. Scalar inversions
// are batched (Montgomery trick); the point multiplications are the
// data-parallel kernel, OpenMP-backed when exec is parallel. Both paths
// produce bit-identical results.
std::vector<Witness> compute_witnesses_batch(const AccumulatorValue& value,
                                             std::span<const Element> elements,
                                             const SecretKey& sk,
                                             Exec exec = Exec::serial);

// Pairing membership check; uses only public material.
bool verify_witness(const AccumulatorValue& value, const Element& element,
                    const Witness& witness, const PublicKey& pk,
                    const SystemParams& params);

// All-of batch form of verify_witness. Shares the pairing of the
// accumulator value across all pairs, so it costs one Miller loop per
// claim instead of two. When failed_index is given and the serial path
// runs, it receives the position of the first failing pair.
bool verify_witness_batch(const AccumulatorValue& value,
                          std::span<const std::pair<Element, Witness>> pairs,
                          const PublicKey& pk, const SystemParams& params,
                          Exec exec = Exec::serial,
                          size_t* failed_index = nullptr);

// Uniform scalar in [1, r-1].
Fr random_scalar_nonzero(RandomSource& rng);

}  // namespace csdjwt::accumulator
