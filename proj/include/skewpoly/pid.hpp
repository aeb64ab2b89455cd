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

#include "skewpoly/scalar.hpp"

namespace skewpoly {

// Euclidean structure of the univariate polynomial domains F_p[y] and Q[y].
// All inputs must live in one polynomial domain; divisors must be nonzero.

std::pair<Scalar, Scalar> pid_divmod(const Scalar& a, const Scalar& b);
bool pid_divides(const Scalar& a, const Scalar& b); // a | b (a nonzero)
Scalar pid_monic(const Scalar& a);
Scalar pid_gcd(const Scalar& a, const Scalar& b); // monic (or zero)

struct PidExt {
    Scalar g, s, t; // g = s*a + t*b with g monic (or zero)
};
PidExt pid_ext_gcd(const Scalar& a, const Scalar& b);

/// Irreducibility over F_p (degree >= 1).
bool pid_irreducible(const Scalar& a);

struct PidFactorization {
    Scalar unit;                                 // constant
    std::vector<std::pair<Scalar, int>> factors; // monic irreducible, multiplicity
};
/// Complete factorization of a nonzero element of F_p[y]. Factors are monic
/// irreducibles sorted by degree then coefficient index, multiplicities
/// positive, and unit * product(factor^mult) == input.
PidFactorization pid_factor(const Scalar& a);

/// Enumerates the maximal ideals of F_p[y] through their monic irreducible
/// generators, ascending by degree and then by coefficient index (the
/// non-leading coefficients read as a base-p number).
class MaximalIdealStream {
public:
    explicit MaximalIdealStream(DomainPtr dom);
    /// Next monic irreducible generator; never exhausts.
    Scalar next();

private:
    DomainPtr dom_;
    uint32_t deg_ = 1;
    uint64_t idx_ = 0;
    uint64_t span_ = 0; // p^deg
};

} // namespace skewpoly
