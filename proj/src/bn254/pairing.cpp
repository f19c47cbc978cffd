#include "csdjwt/bn254/pairing.hpp"

namespace csdjwt::bn254 {

namespace {

Fp fp_std(const std::array<uint64_t, 4>& limbs) {
    std::array<uint8_t, 32> be{};
    for (int i = 0; i < 4; ++i) {
        uint64_t limb = limbs[3 - i];
        for (int j = 0; j < 8; ++j)
            be[i * 8 + j] = (uint8_t)(limb >> (56 - 8 * j));
    }
    return *Fp::from_bytes_be(be);
}

Fp2 fp2_std(const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b) {
    return {fp_std(a), fp_std(b)};
}

// gammaK[i-1] = xi^(i * (p^K - 1) / 6), the Frobenius twist factors for
// the coefficient of w^i.
const std::array<Fp2, 5>& gamma1() {
    static const std::array<Fp2, 5> kGamma1 = {
        fp2_std({0xd60b35dadcc9e470ull, 0x5c521e08292f2176ull, 0xe8b99fdd76e68b60ull, 0x1284b71c2865a7dfull},
                {0xca5cf05f80f362acull, 0x747992778eeec7e5ull, 0xa6327cfe12150b8eull, 0x246996f3b4fae7e6ull}),
        fp2_std({0x99e39557176f553dull, 0xb78cc310c2c3330cull, 0x4c0bec3cf559b143ull, 0x2fb347984f7911f7ull},
                {0x1665d51c640fcba2ull, 0x32ae2a1d0b7c9dceull, 0x4ba4cc8bd75a0794ull, 0x16c9e55061ebae20ull}),
        fp2_std({0xdc54014671a0135aull, 0xdbaae0eda9c95998ull, 0xdc5ec698b6e2f9b9ull, 0x063cf305489af5dcull},
                {0x82d37f632623b0e3ull, 0x21807dc98fa25bd2ull, 0x0704b5a7ec796f2bull, 0x07c03cbcac41049aull}),
        fp2_std({0x848a1f55921ea762ull, 0xd33365f7be94ec72ull, 0x80f3c0b75a181e84ull, 0x05b54f5e64eea801ull},
                {0xc13b4711cd2b8126ull, 0x3685d2ea1bdec763ull, 0x9f3a80b03b0b1c92ull, 0x2c145edbe7fd8aeeull}),
        fp2_std({0x2ea2c810eab7692full, 0x425c459b55aa1bd3ull, 0xe93a3661a4353ff4ull, 0x0183c1e74f798649ull},
                {0x24c6b8ee6e0c2c4bull, 0xb080cb99678e2ac0ull, 0xa27fb246c7729f7dull, 0x12acf2ca76fd0675ull}),
    };
    return kGamma1;
}

const std::array<Fp2, 5>& gamma2() {
    static const std::array<Fp2, 5> kGamma2 = {
        fp2_std({0xe4bd44e5607cfd49ull, 0xc28f069fbb966e3dull, 0x5e6dd9e7e0acccb0ull, 0x30644e72e131a029ull},
                {0, 0, 0, 0}),
        fp2_std({0xe4bd44e5607cfd48ull, 0xc28f069fbb966e3dull, 0x5e6dd9e7e0acccb0ull, 0x30644e72e131a029ull},
                {0, 0, 0, 0}),
        fp2_std({0x3c208c16d87cfd46ull, 0x97816a916871ca8dull, 0xb85045b68181585dull, 0x30644e72e131a029ull},
                {0, 0, 0, 0}),
        fp2_std({0x5763473177fffffeull, 0xd4f263f1acdb5c4full, 0x59e26bcea0d48bacull, 0x0000000000000000ull},
                {0, 0, 0, 0}),
        fp2_std({0x5763473177ffffffull, 0xd4f263f1acdb5c4full, 0x59e26bcea0d48bacull, 0x0000000000000000ull},
                {0, 0, 0, 0}),
    };
    return kGamma2;
}

const std::array<Fp2, 5>& gamma3() {
    static const std::array<Fp2, 5> kGamma3 = {
        fp2_std({0xe86f7d391ed4a67full, 0x894cb38dbe55d24aull, 0xefe9608cd0acaa90ull, 0x19dc81cfcc82e4bbull},
                {0x7694aa2bf4c0c101ull, 0x7f03a5e397d439ecull, 0x06cbeee33576139dull, 0x00abf8b60be77d73ull}),
        fp2_std({0x7b746ee87bdcfb6dull, 0x805ffd3d5d6942d3ull, 0xbaff1c77959f25acull, 0x0856e078b755ef0aull},
                {0x380cab2baaa586deull, 0x0fdf31bf98ff2631ull, 0xa9f30e6dec26094full, 0x04f1de41b3d1766full}),
        fp2_std({0x5fcc8ad066dce9edull, 0xbbd689a3bea870f4ull, 0xdbf17f1dca9e5ea3ull, 0x2a275b6d9896aa4cull},
                {0xb94d0cb3b2594c64ull, 0x7600ecc7d8cf6ebaull, 0xb14b900e9507e932ull, 0x28a411b634f09b8full}),
        fp2_std({0x0e1a92bc3ccbf066ull, 0xe633094575b06bcbull, 0x19bee0f7b5b2444eull, 0x0bc58c6611c08dabull},
                {0x5fe3ed9d730c239full, 0xa44a9e08737f96e5ull, 0xfeb0f6ef0cd21d04ull, 0x23d5e999e1910a12ull}),
        fp2_std({0xebde847076261b43ull, 0x2ed68098967c84a5ull, 0x711699fa3b4d3f69ull, 0x13c49044952c0905ull},
                {0x1f25041384282499ull, 0x3e2ddaea20028021ull, 0x9fb1b2282a48633dull, 0x16db366a59b1dd0bull}),
    };
    return kGamma3;
}

// BN parameter u and the NAF digits of 6u+2, least significant first.
constexpr uint64_t kBnU = 0x44e992b44a6909f1ull;
constexpr int8_t kNaf6UPlus2[] = {
    0, 0, 0, 1, 0, 1, 0, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0,
    0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0,
    -1, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 1};

struct AffineG2 {
    Fp2 x, y;
};

// Tangent line at the Jacobian point t, evaluated at the G1 point
// (px, py); also advances t to 2t. Coefficients (a, b, c) describe the
// sparse Fp12 element c + b*w + a*v*w.
void line_double(Fp12& f, JacobianPoint<Fp2>& t, const Fp& px, const Fp& py) {
    Fp2 zz = t.z.square();
    Fp2 a = t.x.square();
    Fp2 b = t.y.square();
    Fp2 c = b.square();
    Fp2 d = ((t.x + b).square() - a - c).dbl();
    Fp2 e = a.dbl() + a;
    Fp2 ff = e.square();
    Fp2 x3 = ff - d.dbl();
    Fp2 y3 = e * (d - x3) - c.dbl().dbl().dbl();
    Fp2 z3 = (t.y + t.z).square() - b - zz;

    Fp2 la = (t.x + e).square() - a - ff - b.dbl().dbl();
    Fp2 lb = -((e * zz).dbl().scale(px));
    Fp2 lc = (z3 * zz).dbl().scale(py);

    t = {x3, y3, z3};
    f = f.mul_by_line(la, lb, lc);
}

// Chord line through t and the affine point q, evaluated at (px, py);
// advances t to t+q. q2 caches q.y^2.
void line_add(Fp12& f, JacobianPoint<Fp2>& t, const AffineG2& q,
              const Fp2& q2, const Fp& px, const Fp& py) {
    Fp2 zz = t.z.square();
    Fp2 b = q.x * zz;
    Fp2 d = (((q.y + t.z).square() - q2 - zz)) * zz;
    Fp2 h = b - t.x;
    Fp2 i = h.square();
    Fp2 e = i.dbl().dbl();
    Fp2 j = h * e;
    Fp2 l1 = d - t.y - t.y;
    Fp2 v = t.x * e;

    Fp2 x3 = l1.square() - j - v.dbl();
    Fp2 z3 = (t.z + h).square() - zz - i;
    Fp2 y3 = (v - x3) * l1 - (t.y * j).dbl();

    Fp2 tt = (q.y + z3).square() - q2 - z3.square();
    Fp2 la = (l1 * q.x).dbl() - tt;
    Fp2 lb = -(l1.dbl().scale(px));
    Fp2 lc = z3.dbl().scale(py);

    t = {x3, y3, z3};
    f = f.mul_by_line(la, lb, lc);
}

// exponentiation by the curve parameter, inputs in the cyclotomic
// subgroup
Fp12 pow_u(const Fp12& f) {
    Fp12 result = Fp12::one();
    bool started = false;
    for (int b = 63; b >= 0; --b) {
        if (started) result = result.cyclotomic_square();
        if ((kBnU >> b) & 1) {
            if (started)
                result *= f;
            else {
                result = f;
                started = true;
            }
        }
    }
    return result;
}

}  // namespace

Fp12 Fp12::frobenius() const {
    const auto& g = gamma1();
    Fp6 a(c0.c0.conjugate(), c0.c1.conjugate() * g[1], c0.c2.conjugate() * g[3]);
    Fp6 b(c1.c0.conjugate() * g[0], c1.c1.conjugate() * g[2],
          c1.c2.conjugate() * g[4]);
    return {a, b};
}

Fp12 Fp12::frobenius_p2() const {
    const auto& g = gamma2();
    Fp6 a(c0.c0, c0.c1 * g[1], c0.c2 * g[3]);
    Fp6 b(c1.c0 * g[0], c1.c1 * g[2], c1.c2 * g[4]);
    return {a, b};
}

Fp12 Fp12::frobenius_p3() const {
    const auto& g = gamma3();
    Fp6 a(c0.c0.conjugate(), c0.c1.conjugate() * g[1], c0.c2.conjugate() * g[3]);
    Fp6 b(c1.c0.conjugate() * g[0], c1.c1.conjugate() * g[2],
          c1.c2.conjugate() * g[4]);
    return {a, b};
}

bool G1::on_curve() const {
    if (is_infinity()) return true;
    auto [ax, ay] = p.to_affine();
    return ay.square() == ax.square() * ax + Fp::from_u64(3);
}

std::array<uint8_t, 32> G1::to_bytes() const {
    auto [ax, ay] = p.to_affine();
    std::array<uint8_t, 32> out = ax.to_bytes_be();
    if (ay.to_bytes_be()[31] & 1) out[0] |= 0x80;
    return out;
}

std::optional<G1> G1::from_bytes(std::span<const uint8_t> bytes) {
    if (bytes.size() != 32) return std::nullopt;
    std::array<uint8_t, 32> buf;
    std::memcpy(buf.data(), bytes.data(), 32);
    bool odd = (buf[0] & 0x80) != 0;
    buf[0] &= 0x7f;
    auto x = Fp::from_bytes_be(buf);
    if (!x) return std::nullopt;
    auto y = fp_sqrt(x->square() * *x + Fp::from_u64(3));
    if (!y) return std::nullopt;
    Fp yy = *y;
    if (((yy.to_bytes_be()[31] & 1) != 0) != odd) yy = -yy;
    return G1(JacobianPoint<Fp>::from_affine(*x, yy));
}

const Fp2& G2::twist_b() {
    static const Fp2 b =
        Fp2(Fp::from_u64(3), Fp::zero()) * Fp2::xi().inverse();
    return b;
}

G2 G2::generator() {
    static const G2 gen = [] {
        Fp2 gx = fp2_std({0x46debd5cd992f6edull, 0x674322d4f75edaddull,
                          0x426a00665e5c4479ull, 0x1800deef121f1e76ull},
                         {0x97e485b7aef312c2ull, 0xf1aa493335a9e712ull,
                          0x7260bfb731fb5d25ull, 0x198e9393920d483aull});
        Fp2 gy = fp2_std({0x4ce6cc0166fa7daaull, 0xe3d1e7690c43d37bull,
                          0x4aab71808dcb408full, 0x12c85ea5db8c6debull},
                         {0x55acdadcd122975bull, 0xbc4b313370b38ef3ull,
                          0xec9e99ad690c3395ull, 0x090689d0585ff075ull});
        return G2(JacobianPoint<Fp2>::from_affine(gx, gy));
    }();
    return gen;
}

bool G2::on_curve() const {
    if (is_infinity()) return true;
    auto [ax, ay] = p.to_affine();
    return ay.square() == ax.square() * ax + twist_b();
}

bool G2::in_subgroup() const {
    if (is_infinity()) return true;
    if (!on_curve()) return false;
    return p.mul(FrParams::modulus).is_infinity();
}

std::array<uint8_t, 64> G2::to_bytes() const {
    auto [ax, ay] = p.to_affine();
    std::array<uint8_t, 64> out{};
    auto c1 = ax.c1.to_bytes_be();
    auto c0 = ax.c0.to_bytes_be();
    std::memcpy(out.data(), c1.data(), 32);
    std::memcpy(out.data() + 32, c0.data(), 32);
    bool odd;
    if (!ay.c0.is_zero())
        odd = (ay.c0.to_bytes_be()[31] & 1) != 0;
    else
        odd = (ay.c1.to_bytes_be()[31] & 1) != 0;
    if (odd) out[0] |= 0x80;
    return out;
}

std::optional<G2> G2::from_bytes(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) return std::nullopt;
    std::array<uint8_t, 32> b1, b0;
    std::memcpy(b1.data(), bytes.data(), 32);
    std::memcpy(b0.data(), bytes.data() + 32, 32);
    bool odd = (b1[0] & 0x80) != 0;
    b1[0] &= 0x7f;
    auto c1 = Fp::from_bytes_be(b1);
    auto c0 = Fp::from_bytes_be(b0);
    if (!c0 || !c1) return std::nullopt;
    Fp2 x(*c0, *c1);
    auto y = fp2_sqrt(x.square() * x + twist_b());
    if (!y) return std::nullopt;
    Fp2 yy = *y;
    bool yodd;
    if (!yy.c0.is_zero())
        yodd = (yy.c0.to_bytes_be()[31] & 1) != 0;
    else
        yodd = (yy.c1.to_bytes_be()[31] & 1) != 0;
    if (yodd != odd) yy = -yy;
    G2 out(JacobianPoint<Fp2>::from_affine(x, yy));
    if (!out.in_subgroup()) return std::nullopt;
    return out;
}

Fp12 miller_loop(const G1& p, const G2& q) {
    if (p.is_infinity() || q.is_infinity()) return Fp12::one();

    auto [px, py] = p.p.to_affine();
    auto [qx, qy] = q.p.to_affine();
    AffineG2 aq{qx, qy};
    AffineG2 nq{qx, -qy};
    Fp2 q2 = qy.square();

    Fp12 f = Fp12::one();
    JacobianPoint<Fp2> t = JacobianPoint<Fp2>::from_affine(qx, qy);

    constexpr int len = (int)sizeof(kNaf6UPlus2);
    for (int i = len - 2; i >= 0; --i) {
        f = f.square();
        line_double(f, t, px, py);
        if (kNaf6UPlus2[i] == 1)
            line_add(f, t, aq, q2, px, py);
        else if (kNaf6UPlus2[i] == -1)
            line_add(f, t, nq, q2, px, py);
    }

    // Frobenius correction points: q1 = pi(q), q2 = -pi^2(q).
    const auto& g = gamma1();
    AffineG2 q1{qx.conjugate() * g[1], qy.conjugate() * g[2]};
    AffineG2 qq2{qx * gamma2()[1], qy};

    line_add(f, t, q1, q1.y.square(), px, py);
    line_add(f, t, qq2, qq2.y.square(), px, py);
    return f;
}

Fp12 final_exponentiation(const Fp12& f) {
    // easy part: f^((p^6 - 1)(p^2 + 1))
    Fp12 t1 = f.conjugate() * f.inverse();
    t1 = t1.frobenius_p2() * t1;

    // hard part, Devegili-Scott-Dahab addition chain
    Fp12 fp1 = t1.frobenius();
    Fp12 fp2 = t1.frobenius_p2();
    Fp12 fp3 = t1.frobenius_p3();

    Fp12 fu1 = pow_u(t1);
    Fp12 fu2 = pow_u(fu1);
    Fp12 fu3 = pow_u(fu2);

    Fp12 y3 = fu1.frobenius().conjugate();
    Fp12 fu2p = fu2.frobenius();
    Fp12 fu3p = fu3.frobenius();
    Fp12 y2 = fu2.frobenius_p2();

    Fp12 y0 = fp1 * fp2 * fp3;
    Fp12 y1 = t1.conjugate();
    Fp12 y5 = fu2.conjugate();
    Fp12 y4 = (fu1 * fu2p).conjugate();
    Fp12 y6 = (fu3 * fu3p).conjugate();

    Fp12 t0 = y6.square() * y4 * y5;
    Fp12 t1b = y3 * y5 * t0;
    t0 = t0 * y2;
    t1b = t1b.square() * t0;
    t1b = t1b.square();
    t0 = t1b * y1;
    t1b = t1b * y0;
    t0 = t0.square() * t1b;
    return t0;
}

Fp12 pairing(const G1& p, const G2& q) {
    return final_exponentiation(miller_loop(p, q));
}

bool pairing_product_is_one(std::span<const std::pair<G1, G2>> pairs) {
    Fp12 acc = Fp12::one();
    for (const auto& [p, q] : pairs) acc *= miller_loop(p, q);
    return final_exponentiation(acc).is_one();
}

}  // namespace csdjwt::bn254
