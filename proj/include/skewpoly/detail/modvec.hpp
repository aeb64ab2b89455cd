/*
   Copyright 2026 The skewpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace skewpoly::detail {

// Residue arithmetic mod a prime p < 2^63.

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

uint64_t powm(uint64_t a, uint64_t e, uint64_t p);
/// Inverse of a nonzero residue; a must satisfy 0 < a < p.
uint64_t invm(uint64_t a, uint64_t p);

// Dense univariate polynomials over F_p: ascending coefficient vectors with
// no trailing zeros (zero polynomial = empty vector).

using Vec = std::vector<uint64_t>;

void vtrim(Vec& a);
int vdeg(const Vec& a); // -1 for zero
Vec vadd(const Vec& a, const Vec& b, uint64_t p);
Vec vsub(const Vec& a, const Vec& b, uint64_t p);
Vec vscale(const Vec& a, uint64_t c, uint64_t p);
Vec vmul(const Vec& a, const Vec& b, uint64_t p);
/// Euclidean division by a nonzero divisor: returns {quotient, remainder}.
std::pair<Vec, Vec> vdivmod(const Vec& a, const Vec& b, uint64_t p);
Vec vmonic(const Vec& a, uint64_t p);
/// Monic gcd.
Vec vgcd(Vec a, Vec b, uint64_t p);
struct VExt {
    Vec g, s, t; // g = s*a + t*b, g monic (or zero)
};
VExt vextgcd(const Vec& a, const Vec& b, uint64_t p);
/// h^e mod m, exponent an arbitrary-size nonnegative integer.
Vec vpowmod(const Vec& h, const mpz_class& e, const Vec& m, uint64_t p);
/// Rabin irreducibility test for a monic polynomial of degree >= 1.
bool virreducible(const Vec& m, uint64_t p);

} // namespace skewpoly::detail
