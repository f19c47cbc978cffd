#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csdjwt/accumulator.hpp"

using namespace csdjwt;
using namespace csdjwt::accumulator;
using bn254::Fr;

#include "support/oracles.hpp"

using namespace csdjwt::testsupport;

namespace {

Fr rand_fr(Drbg& rng) {
    auto b = rng.bytes(32);
    return Fr::from_bytes_be_mod(b);
}

}  // namespace

TEST_CASE("setup rejects unsupported security level") {
    CHECK_THROWS_AS(setup(80), AccumulatorError);
    CHECK_THROWS_AS(setup(256), AccumulatorError);
}

TEST_CASE("setup produces distinct trapdoors and consistent public key") {
    auto [params, kp1] = setup(128);
    auto [params2, kp2] = setup(128);
    CHECK(kp1.sk.alpha != kp2.sk.alpha);
    CHECK(kp1.pk.q_tilde.equals(params.generator_g2.mul(kp1.sk.alpha)));
    CHECK(params.generator_g1.to_bytes().size() == 32);
    CHECK(kp1.pk.to_bytes().size() == 64);
}

TEST_CASE("init_accumulator seeding") {
    auto params = SystemParams::bn254_default();
    auto v1 = init_accumulator(params, RandomSource(1));
    auto v2 = init_accumulator(params, RandomSource(1));
    auto v3 = init_accumulator(params, RandomSource(2));
    CHECK(v1 == v2);
    CHECK_FALSE(v1 == v3);
    CHECK_FALSE(v1.point.is_infinity());
    auto u1 = init_accumulator(params);
    auto u2 = init_accumulator(params);
    CHECK_FALSE(u1 == u2);
}

TEST_CASE("accumulate_batch basics") {
    auto [params, kp] = setup(128, RandomSource(7));
    auto v0 = init_accumulator(params, RandomSource(8));

    SUBCASE("empty batch is the identity scalar") {
        auto v = accumulate_batch(v0, {}, kp.sk);
        CHECK(v == v0);
    }
    SUBCASE("order independence") {
        std::vector<Element> e = {Fr::from_u64(11), Fr::from_u64(22),
                                  Fr::from_u64(33)};
        std::vector<Element> rev(e.rbegin(), e.rend());
        CHECK(accumulate_batch(v0, e, kp.sk) ==
              accumulate_batch(v0, rev, kp.sk));
    }
    SUBCASE("duplicate elements rejected") {
        std::vector<Element> e = {Fr::from_u64(5), Fr::from_u64(5)};
        CHECK_THROWS_AS(accumulate_batch(v0, e, kp.sk), AccumulatorError);
    }
    SUBCASE("trapdoor collision rejected") {
        std::vector<Element> e = {-kp.sk.alpha};
        CHECK_THROWS_AS(accumulate_batch(v0, e, kp.sk), AccumulatorError);
    }
}

TEST_CASE("scalar factor matches the small worked example") {
    // alpha=5, elements {2,3}: the factor is (2+5)*(3+5) = 56
    SecretKey sk{Fr::from_u64(5)};
    auto params = SystemParams::bn254_default();
    auto v0 = init_accumulator(params, RandomSource(99));
    std::vector<Element> e = {Fr::from_u64(2), Fr::from_u64(3)};
    auto v = accumulate_batch(v0, e, sk);
    CHECK(v.point.equals(v0.point.mul(Fr::from_u64(56))));
}

TEST_CASE("accumulator matches shift-and-add oracle") {
    Drbg rng(0x0acc);
    auto params = SystemParams::bn254_default();
    for (int trial = 0; trial < 40; ++trial) {
        SecretKey sk{rand_fr(rng)};
        auto v0 = init_accumulator(params, RandomSource(rng.next_u64()));
        size_t n = 1 + rng.next_below(8);
        std::vector<Element> elems;
        for (size_t i = 0; i < n; ++i) elems.push_back(rand_fr(rng));

        // oracle recomputes the product directly from the trapdoor
        U256 prod{{1, 0, 0, 0}};
        for (const auto& y : elems)
            prod = oracle_mulmod(prod, oracle_addmod(U256::from_fr(y),
                                                     U256::from_fr(sk.alpha)));
        auto expect = v0.point.mul(fr_from_u256(prod));

        auto got = accumulate_batch(v0, elems, sk);
        CHECK(got.point.to_bytes() == expect.to_bytes());

        // witnesses: oracle multiplies back with the known trapdoor
        auto wits = compute_witnesses_batch(got, elems, sk);
        REQUIRE(wits.size() == n);
        for (size_t i = 0; i < n; ++i) {
            Fr term = elems[i] + sk.alpha;
            CHECK(wits[i].point.mul(term).to_bytes() == got.point.to_bytes());
            // and equals the accumulator over the other elements
            U256 rest{{1, 0, 0, 0}};
            for (size_t j = 0; j < n; ++j)
                if (j != i)
                    rest = oracle_mulmod(
                        rest, oracle_addmod(U256::from_fr(elems[j]),
                                            U256::from_fr(sk.alpha)));
            CHECK(wits[i].point.to_bytes() ==
                  v0.point.mul(fr_from_u256(rest)).to_bytes());
        }
    }
}

TEST_CASE("single element witness is the initial value") {
    auto [params, kp] = setup(128, RandomSource(3));
    auto v0 = init_accumulator(params, RandomSource(4));
    std::vector<Element> e = {Fr::from_u64(42)};
    auto v = accumulate_batch(v0, e, kp.sk);
    auto w = compute_witnesses_batch(v, e, kp.sk);
    CHECK(w[0].point.equals(v0.point));
}

TEST_CASE("witness verification end to end") {
    Drbg rng(0x1eaf);
    auto [params, kp] = setup(128, RandomSource(11));
    auto v0 = init_accumulator(params, RandomSource(12));
    std::vector<Element> elems;
    for (int i = 0; i < 5; ++i) elems.push_back(rand_fr(rng));
    auto v = accumulate_batch(v0, elems, kp.sk);
    auto wits = compute_witnesses_batch(v, elems, kp.sk);

    for (size_t i = 0; i < elems.size(); ++i)
        CHECK(verify_witness(v, elems[i], wits[i], kp.pk, params));

    SUBCASE("tampered witness fails") {
        Witness bad{wits[0].point.add(params.generator_g1)};
        CHECK_FALSE(verify_witness(v, elems[0], bad, kp.pk, params));
    }
    SUBCASE("non-member element fails against every witness") {
        Element outsider = rand_fr(rng);
        for (const auto& w : wits)
            CHECK_FALSE(verify_witness(v, outsider, w, kp.pk, params));
    }
    SUBCASE("batch verify") {
        std::vector<std::pair<Element, Witness>> pairs;
        for (size_t i = 0; i < elems.size(); ++i)
            pairs.push_back({elems[i], wits[i]});
        CHECK(verify_witness_batch(v, pairs, kp.pk, params, Exec::serial));
        CHECK(verify_witness_batch(v, pairs, kp.pk, params, Exec::parallel));
        pairs[2].second.point = pairs[2].second.point.dbl();
        CHECK_FALSE(verify_witness_batch(v, pairs, kp.pk, params, Exec::serial));
        CHECK_FALSE(
            verify_witness_batch(v, pairs, kp.pk, params, Exec::parallel));
    }
}

TEST_CASE("serial and parallel witness kernels agree bit-exactly") {
    Drbg rng(0x9001);
    auto [params, kp] = setup(128, RandomSource(21));
    auto v0 = init_accumulator(params, RandomSource(22));
    std::vector<Element> elems;
    for (int i = 0; i < 64; ++i) elems.push_back(rand_fr(rng));
    auto v = accumulate_batch(v0, elems, kp.sk);
    auto ws = compute_witnesses_batch(v, elems, kp.sk, Exec::serial);
    auto wp = compute_witnesses_batch(v, elems, kp.sk, Exec::parallel);
    REQUIRE(ws.size() == wp.size());
    for (size_t i = 0; i < ws.size(); ++i)
        CHECK(ws[i].to_bytes() == wp[i].to_bytes());
}

TEST_CASE("constant size encoding across set sizes") {
    Drbg rng(0x517e);
    auto [params, kp] = setup(128, RandomSource(31));
    auto v0 = init_accumulator(params, RandomSource(32));
    for (size_t n : {0u, 1u, 10u, 100u}) {
        std::vector<Element> elems;
        for (size_t i = 0; i < n; ++i) elems.push_back(rand_fr(rng));
        auto v = accumulate_batch(v0, elems, kp.sk);
        CHECK(v.to_bytes().size() == 32);
    }
}

TEST_CASE("determinism") {
    auto [params, kp] = setup(128, RandomSource(41));
    auto v0 = init_accumulator(params, RandomSource(42));
    std::vector<Element> elems = {Fr::from_u64(1000), Fr::from_u64(2000),
                                  Fr::from_u64(3000)};
    auto v1 = accumulate_batch(v0, elems, kp.sk);
    auto v2 = accumulate_batch(v0, elems, kp.sk);
    CHECK(v1.to_bytes() == v2.to_bytes());
    auto w1 = compute_witnesses_batch(v1, elems, kp.sk);
    auto w2 = compute_witnesses_batch(v2, elems, kp.sk);
    for (size_t i = 0; i < elems.size(); ++i)
        CHECK(w1[i].to_bytes() == w2[i].to_bytes());
}
