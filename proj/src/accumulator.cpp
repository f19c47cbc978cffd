#include "csdjwt/accumulator.hpp"

#include <algorithm>
#include <set>

namespace csdjwt::accumulator {

SystemParams SystemParams::bn254_default() {
    SystemParams p;
    p.security_level = 128;
    p.generator_g1 = G1::generator();
    p.generator_g2 = G2::generator();
    return p;
}

std::optional<PublicKey> PublicKey::from_bytes(std::span<const uint8_t> b) {
    auto q = G2::from_bytes(b);
    if (!q || q->is_infinity()) return std::nullopt;
    return PublicKey{*q};
}

std::optional<AccumulatorValue> AccumulatorValue::from_bytes(
    std::span<const uint8_t> b) {
    auto p = G1::from_bytes(b);
    if (!p) return std::nullopt;
    return AccumulatorValue{*p};
}

std::optional<Witness> Witness::from_bytes(std::span<const uint8_t> b) {
    auto p = G1::from_bytes(b);
    if (!p) return std::nullopt;
    return Witness{*p};
}

Fr random_scalar_nonzero(RandomSource& rng) {
    for (;;) {
        auto raw = rng.bytes(32);
        Fr s = Fr::from_bytes_be_mod(raw);
        if (!s.is_zero()) return s;
    }
}

std::pair<SystemParams, KeyPair> setup(unsigned security_level,
                                       RandomSource rng) {
    if (security_level != 128)
        throw AccumulatorError("unsupported security level");
    SystemParams params = SystemParams::bn254_default();
    Fr alpha = random_scalar_nonzero(rng);
    PublicKey pk{params.generator_g2.mul(alpha)};
    return {params, KeyPair{SecretKey{alpha}, pk}};
}

AccumulatorValue init_accumulator(const SystemParams& params,
                                  RandomSource rng) {
    Fr s = random_scalar_nonzero(rng);
    return AccumulatorValue{params.generator_g1.mul(s)};
}

namespace {

void check_elements(std::span<const Element> elements, const SecretKey& sk) {
    std::set<std::array<uint8_t, 32>> seen;
    for (const Element& y : elements) {
        if (!seen.insert(y.to_bytes_be()).second)
            throw AccumulatorError("duplicate element");
        if ((y + sk.alpha).is_zero())
            throw AccumulatorError("element collides with the trapdoor");
    }
}

}  // namespace

AccumulatorValue accumulate_batch(const AccumulatorValue& value,
                                  std::span<const Element> elements,
                                  const SecretKey& sk) {
    check_elements(elements, sk);
    Fr product = Fr::one();
    for (const Element& y : elements) product *= y + sk.alpha;
    return AccumulatorValue{value.point.mul(product)};
}

std::vector<Witness> compute_witnesses_batch(const AccumulatorValue& value,
                                             std::span<const Element> elements,
                                             const SecretKey& sk, Exec exec) {
    check_elements(elements, sk);
    const size_t n = elements.size();

    // batch inversion of (y_i + alpha)
    std::vector<Fr> terms(n), prefix(n);
    Fr running = Fr::one();
    for (size_t i = 0; i < n; ++i) {
        terms[i] = elements[i] + sk.alpha;
        prefix[i] = running;
        running *= terms[i];
    }
    Fr inv = running.inverse();
    std::vector<Fr> scalars(n);
    for (size_t i = n; i-- > 0;) {
        scalars[i] = inv * prefix[i];
        inv *= terms[i];
    }

    std::vector<Witness> out(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (size_t i = 0; i < n; ++i)
            out[i] = Witness{value.point.mul(scalars[i])};
    } else {
        for (size_t i = 0; i < n; ++i)
            out[i] = Witness{value.point.mul(scalars[i])};
    }
    return out;
}

bool verify_witness(const AccumulatorValue& value, const Element& element,
                    const Witness& witness, const PublicKey& pk,
                    const SystemParams& params) {
    if (value.point.is_infinity() || witness.point.is_infinity()) return false;
    G2 rhs = params.generator_g2.mul(element).add(pk.q_tilde);
    // e(W, y*G2 + Q) * e(-V, G2) == 1
    std::array<std::pair<G1, G2>, 2> pairs = {
        std::make_pair(witness.point, rhs),
        std::make_pair(value.point.negate(), params.generator_g2),
    };
    return bn254::pairing_product_is_one(pairs);
}

bool verify_witness_batch(const AccumulatorValue& value,
                          std::span<const std::pair<Element, Witness>> pairs,
                          const PublicKey& pk, const SystemParams& params,
                          Exec exec, size_t* failed_index) {
    const size_t n = pairs.size();
    if (n == 0) return true;
    if (value.point.is_infinity()) {
        if (failed_index) *failed_index = 0;
        return false;
    }
    const bn254::Fp12 expected =
        bn254::pairing(value.point, params.generator_g2);
    auto check_one = [&](size_t i) {
        const auto& [element, witness] = pairs[i];
        if (witness.point.is_infinity()) return false;
        G2 rhs = params.generator_g2.mul(element).add(pk.q_tilde);
        return bn254::final_exponentiation(
                   bn254::miller_loop(witness.point, rhs)) == expected;
    };

    bool all_ok = true;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(&& : all_ok)
        for (size_t i = 0; i < n; ++i) all_ok = all_ok && check_one(i);
    } else {
        for (size_t i = 0; i < n && all_ok; ++i) {
            all_ok = check_one(i);
            if (!all_ok && failed_index) *failed_index = i;
        }
    }
    return all_ok;
}

}  // namespace csdjwt::accumulator
