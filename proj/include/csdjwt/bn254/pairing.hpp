#pragma once

#include "csdjwt/bn254/curve.hpp"

namespace csdjwt::bn254 {

// Optimal ate pairing e: G1 x G2 -> Fp12 (r-th roots of unity).
// Returns one when either input is the identity.
Fp12 pairing(const G1& p, const G2& q);

Fp12 miller_loop(const G1& p, const G2& q);
Fp12 final_exponentiation(const Fp12& f);

// Product-of-pairings check: prod e(p_i, q_i) == 1. Shares one final
// exponentiation across all Miller loops.
bool pairing_product_is_one(std::span<const std::pair<G1, G2>> pairs);

}  // namespace csdjwt::bn254
