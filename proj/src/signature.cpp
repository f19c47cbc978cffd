#include "csdjwt/signature.hpp"

#include <openssl/bn.h>
#include <openssl/core_names.h>
#include <openssl/ec.h>
#include <openssl/ecdsa.h>
#include <openssl/evp.h>
#include <openssl/param_build.h>

#include <cstring>

namespace csdjwt {

namespace {

struct EvpPkeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, EvpPkeyDeleter>;

[[noreturn]] void fail(const char* what) {
    throw SignatureError(std::string("es256: ") + what);
}

PkeyPtr pkey_from_parts(const uint8_t* priv32, std::span<const uint8_t> pub) {
    OSSL_PARAM_BLD* bld = OSSL_PARAM_BLD_new();
    if (!bld) fail("param alloc");
    BIGNUM* d = nullptr;
    OSSL_PARAM_BLD_push_utf8_string(bld, OSSL_PKEY_PARAM_GROUP_NAME,
                                    "prime256v1", 0);
    if (priv32) {
        d = BN_bin2bn(priv32, 32, nullptr);
        OSSL_PARAM_BLD_push_BN(bld, OSSL_PKEY_PARAM_PRIV_KEY, d);
    }
    if (!pub.empty())
        OSSL_PARAM_BLD_push_octet_string(bld, OSSL_PKEY_PARAM_PUB_KEY,
                                         pub.data(), pub.size());
    OSSL_PARAM* params = OSSL_PARAM_BLD_to_param(bld);
    OSSL_PARAM_BLD_free(bld);

    EVP_PKEY_CTX* ctx = EVP_PKEY_CTX_new_from_name(nullptr, "EC", nullptr);
    EVP_PKEY* pkey = nullptr;
    int ok = ctx && EVP_PKEY_fromdata_init(ctx) > 0 &&
             EVP_PKEY_fromdata(ctx, &pkey,
                               priv32 ? EVP_PKEY_KEYPAIR : EVP_PKEY_PUBLIC_KEY,
                               params) > 0;
    EVP_PKEY_CTX_free(ctx);
    OSSL_PARAM_free(params);
    if (d) BN_clear_free(d);
    if (!ok || !pkey) fail("key construction failed");
    return PkeyPtr(pkey);
}

Bytes compressed_pub_from_scalar(const uint8_t* priv32) {
    EC_GROUP* group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    EC_POINT* pub = EC_POINT_new(group);
    BIGNUM* d = BN_bin2bn(priv32, 32, nullptr);
    BN_CTX* ctx = BN_CTX_new();
    Bytes out;
    if (group && pub && d && ctx &&
        EC_POINT_mul(group, pub, d, nullptr, nullptr, ctx) == 1) {
        size_t len = EC_POINT_point2oct(group, pub, POINT_CONVERSION_COMPRESSED,
                                        nullptr, 0, ctx);
        out.resize(len);
        EC_POINT_point2oct(group, pub, POINT_CONVERSION_COMPRESSED, out.data(),
                           len, ctx);
    }
    BN_CTX_free(ctx);
    BN_clear_free(d);
    EC_POINT_free(pub);
    EC_GROUP_free(group);
    if (out.size() != 33) fail("public point derivation failed");
    return out;
}

// scalar reduced into [1, n-1]
std::array<uint8_t, 32> reduce_scalar(std::span<const uint8_t> raw) {
    EC_GROUP* group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    const BIGNUM* order = EC_GROUP_get0_order(group);
    BIGNUM* d = BN_bin2bn(raw.data(), (int)raw.size(), nullptr);
    BN_CTX* ctx = BN_CTX_new();
    BN_nnmod(d, d, order, ctx);
    if (BN_is_zero(d)) BN_one(d);
    std::array<uint8_t, 32> out{};
    BN_bn2binpad(d, out.data(), 32);
    BN_CTX_free(ctx);
    BN_clear_free(d);
    EC_GROUP_free(group);
    return out;
}

}  // namespace

Es256PrivateKey Es256PrivateKey::generate(RandomSource rng) {
    return from_scalar(rng.bytes(32));
}

Es256PrivateKey Es256PrivateKey::from_scalar(std::span<const uint8_t> s) {
    if (s.size() != 32) fail("private scalar must be 32 bytes");
    Es256PrivateKey key;
    key.scalar_ = reduce_scalar(s);
    key.pub_.sec1 = compressed_pub_from_scalar(key.scalar_.data());
    return key;
}

Bytes Es256PrivateKey::sign(std::span<const uint8_t> message) const {
    PkeyPtr pkey = pkey_from_parts(scalar_.data(), pub_.sec1);
    EVP_MD_CTX* md = EVP_MD_CTX_new();
    size_t der_len = 0;
    Bytes der;
    int ok = md &&
             EVP_DigestSignInit(md, nullptr, EVP_sha256(), nullptr,
                                pkey.get()) == 1 &&
             EVP_DigestSign(md, nullptr, &der_len, message.data(),
                            message.size()) == 1;
    if (ok) {
        der.resize(der_len);
        ok = EVP_DigestSign(md, der.data(), &der_len, message.data(),
                            message.size()) == 1;
        der.resize(der_len);
    }
    EVP_MD_CTX_free(md);
    if (!ok) fail("signing failed");

    const uint8_t* p = der.data();
    ECDSA_SIG* sig = d2i_ECDSA_SIG(nullptr, &p, (long)der.size());
    if (!sig) fail("signature decode failed");
    Bytes out(64);
    BN_bn2binpad(ECDSA_SIG_get0_r(sig), out.data(), 32);
    BN_bn2binpad(ECDSA_SIG_get0_s(sig), out.data() + 32, 32);
    ECDSA_SIG_free(sig);
    return out;
}

Bytes Es256PrivateKey::sign(std::string_view message) const {
    return sign(std::span<const uint8_t>(
        reinterpret_cast<const uint8_t*>(message.data()), message.size()));
}

Bytes Es256PublicKey::uncompressed() const {
    EC_GROUP* group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    EC_POINT* pt = EC_POINT_new(group);
    BN_CTX* ctx = BN_CTX_new();
    Bytes out;
    if (group && pt && ctx &&
        EC_POINT_oct2point(group, pt, sec1.data(), sec1.size(), ctx) == 1) {
        size_t len = EC_POINT_point2oct(
            group, pt, POINT_CONVERSION_UNCOMPRESSED, nullptr, 0, ctx);
        out.resize(len);
        EC_POINT_point2oct(group, pt, POINT_CONVERSION_UNCOMPRESSED,
                           out.data(), len, ctx);
    }
    BN_CTX_free(ctx);
    EC_POINT_free(pt);
    EC_GROUP_free(group);
    if (out.size() != 65) fail("point conversion failed");
    return out;
}

bool Es256PublicKey::verify(std::span<const uint8_t> message,
                            std::span<const uint8_t> signature) const {
    if (signature.size() != 64 ||
        (sec1.size() != 33 && sec1.size() != 65))
        return false;
    ECDSA_SIG* sig = ECDSA_SIG_new();
    BIGNUM* r = BN_bin2bn(signature.data(), 32, nullptr);
    BIGNUM* s = BN_bin2bn(signature.data() + 32, 32, nullptr);
    if (!sig || !r || !s || ECDSA_SIG_set0(sig, r, s) != 1) {
        ECDSA_SIG_free(sig);
        return false;
    }
    uint8_t* der = nullptr;
    int der_len = i2d_ECDSA_SIG(sig, &der);
    ECDSA_SIG_free(sig);
    if (der_len <= 0) return false;

    bool ok = false;
    try {
        PkeyPtr pkey = pkey_from_parts(nullptr, sec1);
        EVP_MD_CTX* md = EVP_MD_CTX_new();
        ok = md &&
             EVP_DigestVerifyInit(md, nullptr, EVP_sha256(), nullptr,
                                  pkey.get()) == 1 &&
             EVP_DigestVerify(md, der, (size_t)der_len, message.data(),
                              message.size()) == 1;
        EVP_MD_CTX_free(md);
    } catch (const SignatureError&) {
        ok = false;
    }
    OPENSSL_free(der);
    return ok;
}

bool Es256PublicKey::verify(std::string_view message,
                            std::span<const uint8_t> signature) const {
    return verify(std::span<const uint8_t>(
                      reinterpret_cast<const uint8_t*>(message.data()),
                      message.size()),
                  signature);
}

}  // namespace csdjwt
