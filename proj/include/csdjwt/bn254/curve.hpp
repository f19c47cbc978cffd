#pragma once

#include <optional>
#include <vector>

#include "csdjwt/bn254/fp_tower.hpp"

namespace csdjwt::bn254 {

// Jacobian-coordinate point on y^2 = x^3 + b over the coefficient field F.
// The point at infinity is encoded as z == 0.
template <typename F>
struct JacobianPoint {
    F x, y, z;

    static JacobianPoint infinity() {
        return {F::one(), F::one(), F::zero()};
    }
    static JacobianPoint from_affine(const F& ax, const F& ay) {
        return {ax, ay, F::one()};
    }

    bool is_infinity() const { return z.is_zero(); }

    JacobianPoint dbl() const {
        if (is_infinity()) return *this;
        F a = x.square();
        F b = y.square();
        F c = b.square();
        F d = ((x + b).square() - a - c).dbl();
        F e = a.dbl() + a;
        F f = e.square();
        F x3 = f - d.dbl();
        F y3 = e * (d - x3) - c.dbl().dbl().dbl();
        F z3 = (y * z).dbl();
        return {x3, y3, z3};
    }

    JacobianPoint add(const JacobianPoint& o) const {
        if (is_infinity()) return o;
        if (o.is_infinity()) return *this;
        F z1z1 = z.square();
        F z2z2 = o.z.square();
        F u1 = x * z2z2;
        F u2 = o.x * z1z1;
        F s1 = y * o.z * z2z2;
        F s2 = o.y * z * z1z1;
        if (u1 == u2) {
            if (s1 != s2) return infinity();
            return dbl();
        }
        F h = u2 - u1;
        F i = h.dbl().square();
        F j = h * i;
        F rr = (s2 - s1).dbl();
        F v = u1 * i;
        F x3 = rr.square() - j - v.dbl();
        F y3 = rr * (v - x3) - (s1 * j).dbl();
        F z3 = ((z + o.z).square() - z1z1 - z2z2) * h;
        return {x3, y3, z3};
    }

    JacobianPoint negate() const { return {x, -y, z}; }

    // Scalar multiplication; k given as little-endian 64-bit limbs in
    // standard (non-Montgomery) form.
    JacobianPoint mul(const std::array<uint64_t, 4>& k) const {
        JacobianPoint acc = infinity();
        bool started = false;
        for (int i = 3; i >= 0; --i) {
            for (int b = 63; b >= 0; --b) {
                if (started) acc = acc.dbl();
                if ((k[i] >> b) & 1) {
                    if (started)
                        acc = acc.add(*this);
                    else {
                        acc = *this;
                        started = true;
                    }
                }
            }
        }
        return acc;
    }

    // Affine coordinates; must not be called on the point at infinity.
    std::pair<F, F> to_affine() const {
        F zinv = z.inverse();
        F zinv2 = zinv.square();
        return {x * zinv2, y * zinv2 * zinv};
    }

    bool equals(const JacobianPoint& o) const {
        if (is_infinity() || o.is_infinity())
            return is_infinity() == o.is_infinity();
        F z1z1 = z.square();
        F z2z2 = o.z.square();
        if (x * z2z2 != o.x * z1z1) return false;
        return y * o.z * z2z2 == o.y * z * z1z1;
    }
};

// First pairing group: E(Fp) with b = 3, prime order r (cofactor 1).
class G1 {
  public:
    JacobianPoint<Fp> p;

    G1() : p(JacobianPoint<Fp>::infinity()) {}
    explicit G1(const JacobianPoint<Fp>& pt) : p(pt) {}

    static G1 generator() {
        return G1(JacobianPoint<Fp>::from_affine(Fp::one(), Fp::from_u64(2)));
    }
    static G1 infinity() { return G1(); }

    bool is_infinity() const { return p.is_infinity(); }
    G1 add(const G1& o) const { return G1(p.add(o.p)); }
    G1 dbl() const { return G1(p.dbl()); }
    G1 negate() const { return G1(p.negate()); }
    G1 mul(const Fr& k) const { return G1(p.mul(k.to_limbs())); }
    bool equals(const G1& o) const { return p.equals(o.p); }

    bool on_curve() const;

    // 32-byte compressed encoding: big-endian x with the top bit carrying
    // the parity of y. The identity is not encodable.
    std::array<uint8_t, 32> to_bytes() const;
    static std::optional<G1> from_bytes(std::span<const uint8_t> bytes);
};

// Second pairing group: the sextic twist E'(Fp2) with b' = 3/xi.
class G2 {
  public:
    JacobianPoint<Fp2> p;

    G2() : p(JacobianPoint<Fp2>::infinity()) {}
    explicit G2(const JacobianPoint<Fp2>& pt) : p(pt) {}

    static G2 generator();
    static G2 infinity() { return G2(); }
    static const Fp2& twist_b();

    bool is_infinity() const { return p.is_infinity(); }
    G2 add(const G2& o) const { return G2(p.add(o.p)); }
    G2 negate() const { return G2(p.negate()); }
    G2 mul(const Fr& k) const { return G2(p.mul(k.to_limbs())); }
    bool equals(const G2& o) const { return p.equals(o.p); }

    bool on_curve() const;
    bool in_subgroup() const;

    // 64-byte compressed encoding: big-endian x.c1 || x.c0 with the top
    // bit of the first byte carrying the parity of y.
    std::array<uint8_t, 64> to_bytes() const;
    static std::optional<G2> from_bytes(std::span<const uint8_t> bytes);
};

}  // namespace csdjwt::bn254
