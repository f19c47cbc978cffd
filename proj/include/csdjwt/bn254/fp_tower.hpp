#pragma once

#include "csdjwt/bn254/fp.hpp"

namespace csdjwt::bn254 {

// Extension tower for the pairing:
//   Fp2  = Fp[i] / (i^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),   xi = 9 + i
//   Fp12 = Fp6[w] / (w^2 - v)

struct Fp2 {
    Fp c0, c1;

    Fp2() = default;
    Fp2(const Fp& a, const Fp& b) : c0(a), c1(b) {}

    static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }
    static Fp2 xi() { return {Fp::from_u64(9), Fp::one()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }

    Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fp2 operator-() const { return {-c0, -c1}; }

    Fp2 operator*(const Fp2& o) const {
        Fp v0 = c0 * o.c0;
        Fp v1 = c1 * o.c1;
        Fp s = (c0 + c1) * (o.c0 + o.c1);
        return {v0 - v1, s - v0 - v1};
    }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

    Fp2 square() const {
        Fp a = c0 + c1;
        Fp b = c0 - c1;
        return {a * b, (c0 * c1).dbl()};
    }

    Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }

    Fp2 scale(const Fp& k) const { return {c0 * k, c1 * k}; }

    Fp2 conjugate() const { return {c0, -c1}; }

    // multiply by xi = 9 + i
    Fp2 mul_by_xi() const {
        Fp t0 = c0.dbl().dbl().dbl() + c0;  // 9*c0
        Fp t1 = c1.dbl().dbl().dbl() + c1;  // 9*c1
        return {t0 - c1, t1 + c0};
    }

    Fp2 inverse() const {
        Fp d = (c0.square() + c1.square()).inverse();
        return {c0 * d, -(c1 * d)};
    }

    Fp2 pow(std::span<const uint64_t> exp) const {
        Fp2 result = one();
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
};

// sqrt in Fp2 for p = 3 mod 4 (complex method); empty for non-residues.
inline std::optional<Fp2> fp2_sqrt(const Fp2& a) {
    if (a.is_zero()) return Fp2::zero();
    Fp2 a1 = a.pow(std::span<const uint64_t>(kPMinus3Over4.data(), 4));
    Fp2 x0 = a1 * a;
    Fp2 alpha = a1 * x0;
    Fp2 x;
    if (alpha == Fp2(-Fp::one(), Fp::zero())) {
        x = Fp2(-x0.c1, x0.c0);  // i * x0
    } else {
        Fp2 b = (alpha + Fp2::one())
                    .pow(std::span<const uint64_t>(kPMinus1Over2.data(), 4));
        x = b * x0;
    }
    if (x.square() != a) return std::nullopt;
    return x;
}

struct Fp6 {
    Fp2 c0, c1, c2;  // c0 + c1*v + c2*v^2

    Fp6() = default;
    Fp6(const Fp2& a, const Fp2& b, const Fp2& c) : c0(a), c1(b), c2(c) {}

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const {
        return c0.is_zero() && c1.is_zero() && c2.is_zero();
    }
    bool operator==(const Fp6& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
    }
    bool operator!=(const Fp6& o) const { return !(*this == o); }

    Fp6 operator+(const Fp6& o) const {
        return {c0 + o.c0, c1 + o.c1, c2 + o.c2};
    }
    Fp6 operator-(const Fp6& o) const {
        return {c0 - o.c0, c1 - o.c1, c2 - o.c2};
    }
    Fp6 operator-() const { return {-c0, -c1, -c2}; }

    Fp6 operator*(const Fp6& o) const {
        Fp2 v0 = c0 * o.c0;
        Fp2 v1 = c1 * o.c1;
        Fp2 v2 = c2 * o.c2;
        Fp2 t0 = ((c1 + c2) * (o.c1 + o.c2) - v1 - v2).mul_by_xi() + v0;
        Fp2 t1 = (c0 + c1) * (o.c0 + o.c1) - v0 - v1 + v2.mul_by_xi();
        Fp2 t2 = (c0 + c2) * (o.c0 + o.c2) - v0 - v2 + v1;
        return {t0, t1, t2};
    }

    Fp6& operator+=(const Fp6& o) { return *this = *this + o; }
    Fp6& operator-=(const Fp6& o) { return *this = *this - o; }
    Fp6& operator*=(const Fp6& o) { return *this = *this * o; }

    Fp6 square() const { return *this * *this; }

    // multiply by v
    Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

    // multiply by (b0 + b1*v), used by the sparse line multiplication
    Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const {
        Fp2 t0 = c0 * b0;
        Fp2 t1 = c1 * b1;
        Fp2 r0 = ((c1 + c2) * b1 - t1).mul_by_xi() + t0;
        Fp2 r1 = (c0 + c1) * (b0 + b1) - t0 - t1;
        Fp2 r2 = (c0 + c2) * b0 - t0 + t1;
        return {r0, r1, r2};
    }

    Fp6 scale(const Fp2& k) const { return {c0 * k, c1 * k, c2 * k}; }

    Fp6 inverse() const {
        Fp2 a = c0.square() - (c1 * c2).mul_by_xi();
        Fp2 b = c2.square().mul_by_xi() - c0 * c1;
        Fp2 c = c1.square() - c0 * c2;
        Fp2 f = (c0 * a + (c2 * b + c1 * c).mul_by_xi()).inverse();
        return {a * f, b * f, c * f};
    }
};

struct Fp12 {
    Fp6 c0, c1;  // c0 + c1*w

    Fp12() = default;
    Fp12(const Fp6& a, const Fp6& b) : c0(a), c1(b) {}

    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp12& o) const { return !(*this == o); }
    bool is_one() const { return *this == one(); }

    Fp12 operator*(const Fp12& o) const {
        Fp6 v0 = c0 * o.c0;
        Fp6 v1 = c1 * o.c1;
        Fp6 s = (c0 + c1) * (o.c0 + o.c1);
        return {v0 + v1.mul_by_v(), s - v0 - v1};
    }
    Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

    Fp12 square() const {
        Fp6 t = c0 * c1;
        Fp6 a = (c0 + c1) * (c0 + c1.mul_by_v()) - t - t.mul_by_v();
        return {a, t + t};
    }

    Fp12 conjugate() const { return {c0, -c1}; }

    Fp12 inverse() const {
        Fp6 d = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * d, -(c1 * d)};
    }

    // multiply by a sparse line c + b*w + a*v*w
    Fp12 mul_by_line(const Fp2& a, const Fp2& b, const Fp2& c) const {
        Fp6 t0 = c1.mul_by_01(b, a);
        Fp6 t1 = c0.mul_by_01(b, a);
        Fp6 r0 = c0.scale(c) + t0.mul_by_v();
        Fp6 r1 = c1.scale(c) + t1;
        return {r0, r1};
    }

    Fp12 pow(std::span<const uint64_t> exp) const {
        Fp12 result = one();
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

    Fp12 frobenius() const;
    Fp12 frobenius_p2() const;
    Fp12 frobenius_p3() const;

    // Squaring valid only for elements of the cyclotomic subgroup (where
    // every pairing output and final-exponentiation intermediate lives);
    // roughly 3x cheaper than the generic square.
    Fp12 cyclotomic_square() const {
        auto fp4_sq = [](const Fp2& a0, const Fp2& a1) {
            Fp2 t0 = a0.square();
            Fp2 t1 = a1.square();
            Fp2 s = (a0 + a1).square();
            return std::pair<Fp2, Fp2>(t0 + t1.mul_by_xi(), s - t0 - t1);
        };
        // coefficients of w^0..w^5, grouped into Fp4 pairs (f_i, f_{i+3})
        auto [a0, a1] = fp4_sq(c0.c0, c1.c1);
        auto [b0, b1] = fp4_sq(c1.c0, c0.c2);
        auto [e0, e1] = fp4_sq(c0.c1, c1.c2);
        Fp2 vc0 = e1.mul_by_xi();  // (w^3) * C^2, low coefficient
        auto tri = [](const Fp2& s) { return s.dbl() + s; };
        Fp2 g0 = tri(a0) - c0.c0.dbl();
        Fp2 g1 = tri(vc0) + c1.c0.dbl();
        Fp2 g2 = tri(b0) - c0.c1.dbl();
        Fp2 g3 = tri(a1) + c1.c1.dbl();
        Fp2 g4 = tri(e0) - c0.c2.dbl();
        Fp2 g5 = tri(b1) + c1.c2.dbl();
        return {Fp6(g0, g2, g4), Fp6(g1, g3, g5)};
    }
};

}  // namespace csdjwt::bn254
