#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>

namespace csdjwt::bn254 {

// Base field and scalar field of the BN254 curve (the curve also known as
// alt_bn128). Elements are kept in Montgomery form with four 64-bit limbs,
// little-endian limb order.

struct FpParams {
    static constexpr std::array<uint64_t, 4> modulus = {
        0x3c208c16d87cfd47ull, 0x97816a916871ca8dull,
        0xb85045b68181585dull, 0x30644e72e131a029ull};
    // 2^256 mod p (Montgomery representation of 1)
    static constexpr std::array<uint64_t, 4> r1 = {
        0xd35d438dc58f0d9dull, 0x0a78eb28f5c70b3dull,
        0x666ea36f7879462cull, 0x0e0a77c19a07df2full};
    // 2^512 mod p
    static constexpr std::array<uint64_t, 4> r2 = {
        0xf32cfc5b538afa89ull, 0xb5e71911d44501fbull,
        0x47ab1eff0a417ff6ull, 0x06d89f71cab8351full};
    // -p^-1 mod 2^64
    static constexpr uint64_t ninv = 0x87d20782e4866389ull;
};

struct FrParams {
    static constexpr std::array<uint64_t, 4> modulus = {
        0x43e1f593f0000001ull, 0x2833e84879b97091ull,
        0xb85045b68181585dull, 0x30644e72e131a029ull};
    static constexpr std::array<uint64_t, 4> r1 = {
        0xac96341c4ffffffbull, 0x36fc76959f60cd29ull,
        0x666ea36f7879462eull, 0x0e0a77c19a07df2full};
    static constexpr std::array<uint64_t, 4> r2 = {
        0x1bb8e645ae216da7ull, 0x53fe3ab1e35c59e3ull,
        0x8c49833d53bb8085ull, 0x0216d0b17f4e44a5ull};
    static constexpr uint64_t ninv = 0xc2e1f593efffffffull;
};

namespace detail {

inline bool limbs_gte(const std::array<uint64_t, 4>& a,
                      const std::array<uint64_t, 4>& b) {
    for (int i = 3; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
}

inline uint64_t limbs_sub(std::array<uint64_t, 4>& a,
                          const std::array<uint64_t, 4>& b) {
    uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 d =
            (unsigned __int128)a[i] - b[i] - borrow;
        a[i] = (uint64_t)d;
        borrow = (uint64_t)(d >> 64) & 1;
    }
    return borrow;
}

inline uint64_t limbs_add(std::array<uint64_t, 4>& a,
                          const std::array<uint64_t, 4>& b) {
    uint64_t carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 s = (unsigned __int128)a[i] + b[i] + carry;
        a[i] = (uint64_t)s;
        carry = (uint64_t)(s >> 64);
    }
    return carry;
}

}  // namespace detail

template <typename Params>
class Fe {
  public:
    constexpr Fe() : v_{0, 0, 0, 0} {}

    static Fe zero() { return Fe(); }
    static Fe one() { return from_mont(Params::r1); }

    static Fe from_u64(uint64_t x) {
        Fe out;
        out.v_ = {x, 0, 0, 0};
        out.v_ = mont_mul(out.v_, Params::r2);
        return out;
    }

    // Interprets 32 big-endian bytes; fails when the value is >= modulus.
    static std::optional<Fe> from_bytes_be(std::span<const uint8_t> bytes) {
        if (bytes.size() != 32) return std::nullopt;
        std::array<uint64_t, 4> raw = load_be(bytes);
        if (detail::limbs_gte(raw, Params::modulus)) return std::nullopt;
        Fe out;
        out.v_ = mont_mul(raw, Params::r2);
        return out;
    }

    // Interprets 32 big-endian bytes reduced modulo the field order.
    static Fe from_bytes_be_mod(std::span<const uint8_t> bytes) {
        std::array<uint64_t, 4> raw = load_be(bytes);
        while (detail::limbs_gte(raw, Params::modulus))
            detail::limbs_sub(raw, Params::modulus);
        Fe out;
        out.v_ = mont_mul(raw, Params::r2);
        return out;
    }

    std::array<uint8_t, 32> to_bytes_be() const {
        std::array<uint64_t, 4> std_form = mont_mul(v_, {1, 0, 0, 0});
        std::array<uint8_t, 32> out{};
        for (int i = 0; i < 4; ++i) {
            uint64_t limb = std_form[3 - i];
            for (int j = 0; j < 8; ++j)
                out[i * 8 + j] = (uint8_t)(limb >> (56 - 8 * j));
        }
        return out;
    }

    std::array<uint64_t, 4> to_limbs() const {
        return mont_mul(v_, {1, 0, 0, 0});
    }

    bool is_zero() const {
        return (v_[0] | v_[1] | v_[2] | v_[3]) == 0;
    }

    bool operator==(const Fe& o) const { return v_ == o.v_; }
    bool operator!=(const Fe& o) const { return v_ != o.v_; }

    Fe operator+(const Fe& o) const {
        Fe out = *this;
        uint64_t carry = detail::limbs_add(out.v_, o.v_);
        if (carry || detail::limbs_gte(out.v_, Params::modulus))
            detail::limbs_sub(out.v_, Params::modulus);
        return out;
    }

    Fe operator-(const Fe& o) const {
        Fe out = *this;
        if (detail::limbs_sub(out.v_, o.v_))
            detail::limbs_add(out.v_, Params::modulus);
        return out;
    }

    Fe operator-() const { return zero() - *this; }

    Fe operator*(const Fe& o) const {
        Fe out;
        out.v_ = mont_mul(v_, o.v_);
        return out;
    }

    Fe& operator+=(const Fe& o) { return *this = *this + o; }
    Fe& operator-=(const Fe& o) { return *this = *this - o; }
    Fe& operator*=(const Fe& o) { return *this = *this * o; }

    Fe square() const { return *this * *this; }

    Fe dbl() const { return *this + *this; }

    // Exponent given as little-endian 64-bit limbs, most significant bit
    // scanned first.
    Fe pow(std::span<const uint64_t> exp) const {
        Fe result = one();
        bool started = false;
        for (int i = (int)exp.size() - 1; i >= 0; --i) {
            for (int b = 63; b >= 0; --b) {
                if (started) result = result.square();
                if ((exp[i] >> b) & 1) {
                    if (started)
                        result *= *this;
                    else {
                        result = *this;
                        started = true;
                    }
                }
            }
        }
        return result;
    }

    Fe inverse() const {
        std::array<uint64_t, 4> e = Params::modulus;
        e[0] -= 2;  // low limbs are 0x...47 / 0x...01, no borrow propagates
        return pow(std::span<const uint64_t>(e.data(), 4));
    }

    static Fe from_mont(const std::array<uint64_t, 4>& m) {
        Fe out;
        out.v_ = m;
        return out;
    }
    const std::array<uint64_t, 4>& mont_limbs() const { return v_; }

  private:
    static std::array<uint64_t, 4> load_be(std::span<const uint8_t> bytes) {
        std::array<uint64_t, 4> raw{};
        for (int i = 0; i < 4; ++i) {
            uint64_t limb = 0;
            for (int j = 0; j < 8; ++j)
                limb = (limb << 8) | bytes[i * 8 + j];
            raw[3 - i] = limb;
        }
        return raw;
    }

    // CIOS Montgomery multiplication. Inputs below 2^256, second operand
    // below the modulus; output below the modulus.
    static std::array<uint64_t, 4> mont_mul(const std::array<uint64_t, 4>& a,
                                            const std::array<uint64_t, 4>& b) {
        uint64_t t[6] = {0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            uint64_t carry = 0;
            for (int j = 0; j < 4; ++j) {
                unsigned __int128 s =
                    (unsigned __int128)a[i] * b[j] + t[j] + carry;
                t[j] = (uint64_t)s;
                carry = (uint64_t)(s >> 64);
            }
            unsigned __int128 s = (unsigned __int128)t[4] + carry;
            t[4] = (uint64_t)s;
            t[5] = (uint64_t)(s >> 64);

            uint64_t m = t[0] * Params::ninv;
            unsigned __int128 acc =
                (unsigned __int128)m * Params::modulus[0] + t[0];
            carry = (uint64_t)(acc >> 64);
            for (int j = 1; j < 4; ++j) {
                acc = (unsigned __int128)m * Params::modulus[j] + t[j] + carry;
                t[j - 1] = (uint64_t)acc;
                carry = (uint64_t)(acc >> 64);
            }
            acc = (unsigned __int128)t[4] + carry;
            t[3] = (uint64_t)acc;
            t[4] = t[5] + (uint64_t)(acc >> 64);
        }
        std::array<uint64_t, 4> out = {t[0], t[1], t[2], t[3]};
        if (t[4] || detail::limbs_gte(out, Params::modulus))
            detail::limbs_sub(out, Params::modulus);
        return out;
    }

    std::array<uint64_t, 4> v_;
};

using Fp = Fe<FpParams>;
using Fr = Fe<FrParams>;

// Exponent tables used by square roots and Legendre-style checks.
inline constexpr std::array<uint64_t, 4> kPPlus1Over4 = {
    0x4f082305b61f3f52ull, 0x65e05aa45a1c72a3ull,
    0x6e14116da0605617ull, 0x0c19139cb84c680aull};
inline constexpr std::array<uint64_t, 4> kPMinus3Over4 = {
    0x4f082305b61f3f51ull, 0x65e05aa45a1c72a3ull,
    0x6e14116da0605617ull, 0x0c19139cb84c680aull};
inline constexpr std::array<uint64_t, 4> kPMinus1Over2 = {
    0x9e10460b6c3e7ea3ull, 0xcbc0b548b438e546ull,
    0xdc2822db40c0ac2eull, 0x183227397098d014ull};

// sqrt in Fp for p = 3 mod 4; empty when the input is a non-residue.
inline std::optional<Fp> fp_sqrt(const Fp& a) {
    Fp cand = a.pow(std::span<const uint64_t>(kPPlus1Over4.data(), 4));
    if (cand.square() != a) return std::nullopt;
    return cand;
}

}  // namespace csdjwt::bn254
