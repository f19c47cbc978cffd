#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csdjwt/bn254/pairing.hpp"
#include "csdjwt/bytes.hpp"

using namespace csdjwt;
using namespace csdjwt::bn254;

namespace {

Fp fp_from_hex(const std::string& hex) {
    std::array<uint8_t, 32> buf{};
    for (int i = 0; i < 32; ++i)
        buf[i] = (uint8_t)std::stoi(hex.substr(2 * i, 2), nullptr, 16);
    auto v = Fp::from_bytes_be(buf);
    REQUIRE(v.has_value());
    return *v;
}

// Golden pairing values computed with an independent reference (naive
// affine Miller loop plus a single full-exponent final power); see
// tests/oracles/bn254_reference.py. Coefficients are listed in the
// polynomial basis 1, w, w^2, ..., w^5 over Fp2, each as (c0, c1).
Fp12 fp12_from_hex(const char* const coeffs[12]) {
    Fp2 w[6];
    for (int k = 0; k < 6; ++k)
        w[k] = Fp2(fp_from_hex(coeffs[2 * k]), fp_from_hex(coeffs[2 * k + 1]));
    return Fp12(Fp6(w[0], w[2], w[4]), Fp6(w[1], w[3], w[5]));
}

const char* kEgg[12] = {
    "12c70e90e12b7874510cd1707e8856f71bf7f61d72631e268fca81000db9a1f5", "084f330485b09e866bc2f2ea2b897394deaf3f12aa31f28cb0552990967d4704",
    "2c53748bcd21a7c038fb30ddc8ac3bf0af25d7859cfbc12c30c866276c565909", "27ed208e7a0b55ae6e710bbfbd2fd922669c026360e37cc5b2ab862411536104",
    "0e841c2ac18a4003ac9326b9558380e0bc27fdd375e3605f96b819a358d34bde", "2067586885c3318eeffa1938c754fe3c60224ee5ae15e66af6b5104c47c8c5d8",
    "1ad9db1937fd72f4ac462173d31d3d6117411fa48dba8d499d762b47edb3b54a", "279db296f9d479292532c7c493d8e0722b6efae42158387564889c79fc038ee3",
    "01676555de427abc409c4a394bc5426886302996919d4bf4bdd02236e14b3636", "2b03614464f04dd772d86df88674c270ffc8747ea13e72da95e3594468f222c4",
    "0dc26f240656bbe2029bd441d77c221f0ba4c70c94b29b5f17f0f6d08745a069", "108c19d15f9446f744d0f110405d3856d6cc3bda6c4d537663729f5257628417",
};
const char* kEab[12] = {
    "2ebd7a75de99ea60a8390e2c6e103d6f6994285f5e96506508f5dae17c67d998", "0ae855d3c659e2c10016f173e3ab0386d1eaa4da47bc58f891f38f58d027a931",
    "2bbe69a5358461af17b0fc887613f2ad6b035bcf00ce00e64444ca5ceb256e98", "0eedc139a3606b3efdaa2ec224f6daa0bbc2edf6825b8894066b21f87cea556f",
    "1621429d6875bd52692b8b625ce18c1f15deb51883005edc4ae353c34e5f0c0c", "3040a794cf7d035882cf06e58c4e99e000424b0c9965e0c46654e2f8d012eaa5",
    "04a006e45f52c0e4877fae213f9c50b33ee9108a99772ee78af5e1407761f0f3", "24b0ffe4528b03c66cb93728367134297d039a501cc6784b0f5ed9687947de59",
    "100e18cff433b63963a477d344caaef521bebe3d5ed86e6ee99062e291e43bab", "223aff3fc69bb44919b947cb45ea8d10e1e2db7f1b48c153f646918a73b2122c",
    "25ca16898aa50841a734aae5f223831709cb44be3a0d182631fcd329159d95b8", "08989a1c7af3ab37c9a958c67c5875c5646a22a89e56f4209faa3b2d4e7ed4d0",
};
const char* kEpi[12] = {
    "1df11e6880cf9e07e61cdc5be7d4cf20e9f262c9318c631202ac10515090dc60", "0f71de69e2f1609310fbb966fac29a6347eae61a433be75a4f5d41988031b1ad",
    "0d169c333bab88792dd2ade13eed0b027ee18bd8cb2fd670f16add6392d4433d", "149d48040bf73809f5837de732c8b3eaca73b3c599ad1acb1d5ca8b8a0675534",
    "0c23e5fdc867874d4619a5d8dfc9585fb010a69859971d5ed344d6b1ca0dd1bb", "264a64e5c73ff2204a47566de45a8c3a92ba5c72a3d5ac5092aab1e0ebb1be47",
    "170cc7b4548535a6d42356a602d5ad3bd6d0df6003348eec7ea27755ddf53deb", "16bddde74d7e1ae7aa4d1267e4d41551269490a5a2a3eba6b02aa1b11482e598",
    "181a7fd8c433eaac63e34eda65bf1cc806de6916831af9e922806465042f7843", "219d3bd59803e2b5f83483a78fa0728b2641c857a1964370cab46cfde3f409ca",
    "1ac8cd4bc239bdd4c343f30c89e6e3b3a1f58dbf529ebdda0401b81412b04b47", "1ef78319253bd298e2d5faf246c86e4dd2fbc207364b169d825ff49814433a72",
};

Fr fr_rand(Drbg& rng) {
    auto b = rng.bytes(32);
    return Fr::from_bytes_be_mod(b);
}

}  // namespace

TEST_CASE("fp arithmetic basics") {
    Fp a = Fp::from_u64(123456789);
    Fp b = Fp::from_u64(987654321);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * a.inverse() == Fp::one());
    CHECK(a * Fp::one() == a);
    CHECK((a + (-a)).is_zero());

    // round trip through bytes
    auto bytes = a.to_bytes_be();
    CHECK(*Fp::from_bytes_be(bytes) == a);
}

TEST_CASE("fp random algebra") {
    Drbg rng(0xf00d);
    for (int i = 0; i < 200; ++i) {
        auto ab = rng.bytes(32);
        auto bb = rng.bytes(32);
        Fp a = Fp::from_bytes_be_mod(ab);
        Fp b = Fp::from_bytes_be_mod(bb);
        CHECK((a + b) * (a - b) == a.square() - b.square());
        if (!b.is_zero()) CHECK(a * b * b.inverse() == a);
    }
}

TEST_CASE("fp sqrt") {
    Drbg rng(0xbeef);
    int residues = 0;
    for (int i = 0; i < 50; ++i) {
        auto raw = rng.bytes(32);
        Fp a = Fp::from_bytes_be_mod(raw);
        Fp sq = a.square();
        auto root = fp_sqrt(sq);
        REQUIRE(root.has_value());
        CHECK(root->square() == sq);
        if (fp_sqrt(a).has_value()) ++residues;
    }
    CHECK(residues > 5);
    CHECK(residues < 45);
}

TEST_CASE("fp2 algebra and sqrt") {
    Drbg rng(0xc0ffee);
    for (int i = 0; i < 100; ++i) {
        Fp2 a(Fp::from_bytes_be_mod(rng.bytes(32)),
              Fp::from_bytes_be_mod(rng.bytes(32)));
        Fp2 b(Fp::from_bytes_be_mod(rng.bytes(32)),
              Fp::from_bytes_be_mod(rng.bytes(32)));
        CHECK(a * b == b * a);
        CHECK(a.square() == a * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Fp2::one());
        auto root = fp2_sqrt(a.square());
        REQUIRE(root.has_value());
        CHECK(root->square() == a.square());
    }
}

TEST_CASE("fp6/fp12 algebra") {
    Drbg rng(0x5eed);
    auto rand2 = [&] {
        return Fp2(Fp::from_bytes_be_mod(rng.bytes(32)),
                   Fp::from_bytes_be_mod(rng.bytes(32)));
    };
    for (int i = 0; i < 25; ++i) {
        Fp6 a(rand2(), rand2(), rand2());
        Fp6 b(rand2(), rand2(), rand2());
        CHECK(a * b == b * a);
        CHECK(a * a.inverse() == Fp6::one());
        CHECK(a.mul_by_01(b.c0, b.c1) == a * Fp6(b.c0, b.c1, Fp2::zero()));

        Fp12 f(a, b);
        Fp12 g(b, a);
        CHECK(f * g == g * f);
        CHECK(f.square() == f * f);
        CHECK(f * f.inverse() == Fp12::one());
    }
}

TEST_CASE("fp12 frobenius matches generic exponentiation") {
    Drbg rng(0xface);
    auto rand2 = [&] {
        return Fp2(Fp::from_bytes_be_mod(rng.bytes(32)),
                   Fp::from_bytes_be_mod(rng.bytes(32)));
    };
    Fp12 f(Fp6(rand2(), rand2(), rand2()), Fp6(rand2(), rand2(), rand2()));
    Fp12 fp = f.pow(std::span<const uint64_t>(FpParams::modulus.data(), 4));
    CHECK(f.frobenius() == fp);
    CHECK(f.frobenius_p2() == f.frobenius().frobenius());
    CHECK(f.frobenius_p3() == f.frobenius_p2().frobenius());
}

TEST_CASE("curve group laws") {
    G1 g = G1::generator();
    CHECK(g.on_curve());
    CHECK(g.mul(Fr::from_u64(0)).is_infinity());
    CHECK(g.add(g).equals(g.mul(Fr::from_u64(2))));
    CHECK(g.mul(Fr::from_u64(5)).add(g.mul(Fr::from_u64(7)))
              .equals(g.mul(Fr::from_u64(12))));
    // group order annihilates the generator
    CHECK(g.p.mul(FrParams::modulus).is_infinity());

    G2 h = G2::generator();
    CHECK(h.on_curve());
    CHECK(h.in_subgroup());
    CHECK(h.add(h).equals(h.mul(Fr::from_u64(2))));
    CHECK(h.p.mul(FrParams::modulus).is_infinity());
}

TEST_CASE("point compression round trip") {
    Drbg rng(0xabcd);
    for (int i = 0; i < 20; ++i) {
        G1 p = G1::generator().mul(fr_rand(rng));
        auto enc = p.to_bytes();
        auto dec = G1::from_bytes(enc);
        REQUIRE(dec.has_value());
        CHECK(dec->equals(p));

        G2 q = G2::generator().mul(fr_rand(rng));
        auto enc2 = q.to_bytes();
        auto dec2 = G2::from_bytes(enc2);
        REQUIRE(dec2.has_value());
        CHECK(dec2->equals(q));
    }
    // x off-curve must fail to decode
    std::array<uint8_t, 32> junk{};
    junk[31] = 5;
    bool ok = true;
    for (int t = 0; t < 4; ++t) {
        junk[30] = (uint8_t)t;
        auto d = G1::from_bytes(junk);
        if (d && !d->on_curve()) ok = false;
    }
    CHECK(ok);
}

TEST_CASE("pairing golden vectors") {
    G1 g = G1::generator();
    G2 h = G2::generator();

    CHECK(pairing(g, h) == fp12_from_hex(kEgg));
    CHECK(pairing(g.mul(Fr::from_u64(7)), h.mul(Fr::from_u64(13))) ==
          fp12_from_hex(kEab));
    CHECK(pairing(g.mul(Fr::from_u64(31415926535ull)),
                  h.mul(Fr::from_u64(27182818284ull))) == fp12_from_hex(kEpi));
}

TEST_CASE("pairing bilinearity") {
    Drbg rng(0x1234);
    G1 g = G1::generator();
    G2 h = G2::generator();
    Fp12 e = pairing(g, h);
    CHECK_FALSE(e.is_one());

    for (int i = 0; i < 4; ++i) {
        Fr a = fr_rand(rng);
        Fr b = fr_rand(rng);
        Fp12 lhs = pairing(g.mul(a), h.mul(b));
        Fr ab = a * b;
        auto limbs = ab.to_limbs();
        Fp12 rhs = e.pow(std::span<const uint64_t>(limbs.data(), 4));
        CHECK(lhs == rhs);
        CHECK(pairing(g.mul(a), h) == pairing(g, h.mul(a)));
    }
}

TEST_CASE("pairing of identity is one") {
    CHECK(pairing(G1::infinity(), G2::generator()).is_one());
    CHECK(pairing(G1::generator(), G2::infinity()).is_one());
}

TEST_CASE("pairing product check") {
    Drbg rng(0x777);
    Fr a = fr_rand(rng);
    G1 g = G1::generator();
    G2 h = G2::generator();
    // e(aG, H) * e(-G, aH) == 1
    std::vector<std::pair<G1, G2>> pairs = {
        {g.mul(a), h},
        {g.negate(), h.mul(a)},
    };
    CHECK(pairing_product_is_one(pairs));
    pairs[1].second = h.mul(a + Fr::one());
    CHECK_FALSE(pairing_product_is_one(pairs));
}
