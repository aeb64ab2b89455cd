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

// Shared test fixtures and an independent single-step rewriting oracle for
// skew multiplication. The oracle represents products as words of scalar and
// variable atoms and only ever applies the defining relations one adjacent
// pair at a time, so it exercises none of the production multiplication code.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "skewpoly/endo.hpp"
#include "skewpoly/monomial.hpp"
#include "skewpoly/orepoly.hpp"
#include "skewpoly/scalar.hpp"
#include "skewpoly/skewring.hpp"

namespace testsupport {

using namespace skewpoly;

inline DomainPtr gf4() { return Domain::galois_field(2, 2, {1, 1, 1}, "w"); }
inline DomainPtr gf9() { return Domain::galois_field(3, 2, {1, 0, 1}, "w"); }

/// GF(4)[x1,x2; Frobenius] with zero derivations, lex order.
inline RingPtr gf4_skew_ring() {
    DomainPtr d = gf4();
    return RingDescriptor::make_uniform(d, {"x1", "x2"}, EndoSpec::frobenius(d, 1),
                                        DerSpec::zero(d), {}, TermOrderSpec::lex());
}

/// Commutative F2[x1,x2], lex order.
inline RingPtr f2_comm_ring() {
    DomainPtr d = Domain::prime_field(2);
    return RingDescriptor::make_uniform(d, {"x1", "x2"}, EndoSpec::identity(d), DerSpec::zero(d),
                                        {}, TermOrderSpec::lex());
}

/// First Weyl algebra over Q: variables (x, t), t*x = x*t + 1, deglex order.
inline RingPtr weyl_ring() {
    DomainPtr d = Domain::rationals();
    std::map<std::pair<uint32_t, uint32_t>, Scalar> comm;
    comm[{0, 1}] = d->one();
    return RingDescriptor::make_uniform(d, {"x", "t"}, EndoSpec::identity(d), DerSpec::zero(d),
                                        std::move(comm), TermOrderSpec::deglex());
}

inline OreRingPtr gf4_ore_ring() {
    DomainPtr d = gf4();
    return OreRing::make(d, EndoSpec::frobenius(d, 1), DerSpec::zero(d), "x");
}

inline OreRingPtr f2_comm_ore_ring() {
    DomainPtr d = Domain::prime_field(2);
    return OreRing::make(d, EndoSpec::identity(d), DerSpec::zero(d), "x");
}

namespace oracle {

struct Atom {
    bool is_var = false;
    uint32_t k = 0; // variable index when is_var
    Scalar s;       // scalar value otherwise
};
using Word = std::vector<Atom>;

/// Index of a reducible adjacent pair under the given scan direction, or -1
/// when the word is in normal form (one optional scalar, then ascending vars).
inline int find_redex(const Word& w, bool leftmost) {
    const int n = static_cast<int>(w.size());
    auto reducible = [&](int i) {
        const Atom& a = w[i];
        const Atom& b = w[i + 1];
        if (!a.is_var && !b.is_var) return true;            // merge scalars
        if (a.is_var && !b.is_var) return true;             // x_k * scalar
        if (a.is_var && b.is_var && a.k > b.k) return true; // swap variables
        return false;
    };
    if (leftmost) {
        for (int i = 0; i + 1 < n; ++i)
            if (reducible(i)) return i;
    } else {
        for (int i = n - 2; i >= 0; --i)
            if (reducible(i)) return i;
    }
    return -1;
}

/// Applies one defining relation at position i; the resulting words (zero
/// words dropped) are appended to out.
inline void step(const RingDescriptor& ring, const Word& w, int i, std::vector<Word>& out) {
    const Atom& a = w[i];
    const Atom& b = w[i + 1];
    auto splice = [&](std::vector<Atom> mid) {
        Word nw(w.begin(), w.begin() + i);
        for (auto& m : mid) {
            if (!m.is_var && skewpoly::is_zero(m.s)) return; // zero annihilates the word
            nw.push_back(std::move(m));
        }
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        out.push_back(std::move(nw));
    };
    if (!a.is_var && !b.is_var) {
        splice({Atom{false, 0, mul(a.s, b.s)}});
    } else if (a.is_var && !b.is_var) {
        // x_k * s -> sigma_k(s) x_k + delta_k(s)
        splice({Atom{false, 0, ring.sigma(a.k).apply(b.s)}, Atom{true, a.k, Scalar{}}});
        splice({Atom{false, 0, ring.delta(a.k).apply(b.s)}});
    } else {
        // x_j * x_i (j > i) -> x_i x_j + d_{ij}
        splice({Atom{true, b.k, Scalar{}}, Atom{true, a.k, Scalar{}}});
        splice({Atom{false, 0, ring.commutator(b.k, a.k)}});
    }
}

inline void accumulate(const RingPtr& ring, const Word& w, SkewPoly& acc) {
    Scalar c = ring->domain()->one();
    MultiIndex u = mi_zero(ring->arity());
    for (const Atom& a : w) {
        if (a.is_var)
            u.e[a.k] += 1;
        else
            c = mul(c, a.s);
    }
    acc.add_term(u, c);
}

/// Product of f and g computed purely by single rewriting steps, choosing
/// either the leftmost or the rightmost reducible pair at every step.
inline SkewPoly mul_by_steps(const SkewPoly& f, const SkewPoly& g, bool leftmost) {
    const RingPtr& ring = f.ring();
    SkewPoly acc(ring);
    std::vector<Word> work;
    for (const auto& [uf, cf] : f.terms()) {
        for (const auto& [ug, cg] : g.terms()) {
            Word w;
            w.push_back(Atom{false, 0, cf});
            for (uint32_t k = 0; k < ring->arity(); ++k)
                for (uint32_t t = 0; t < uf.e[k]; ++t) w.push_back(Atom{true, k, Scalar{}});
            w.push_back(Atom{false, 0, cg});
            for (uint32_t k = 0; k < ring->arity(); ++k)
                for (uint32_t t = 0; t < ug.e[k]; ++t) w.push_back(Atom{true, k, Scalar{}});
            work.push_back(std::move(w));
        }
    }
    while (!work.empty()) {
        Word w = std::move(work.back());
        work.pop_back();
        int i = find_redex(w, leftmost);
        if (i < 0)
            accumulate(ring, w, acc);
        else
            step(*ring, w, i, work);
    }
    return acc;
}

inline OrePoly ore_mul_by_steps(const OrePoly& f, const OrePoly& g, bool leftmost) {
    RingPtr view = ring_of_ore(f.ring());
    SkewPoly p = mul_by_steps(from_ore(f, view), from_ore(g, view), leftmost);
    return to_ore(p, f.ring());
}

} // namespace oracle

inline OrePoly random_ore_poly(const OreRingPtr& ring, Rng& rng, uint32_t maxdeg,
                               bool force_nonzero) {
    std::vector<Scalar> c(rng.below(maxdeg + 1) + 1);
    for (auto& x : c) x = random_scalar(ring->domain(), rng);
    OrePoly f = OrePoly::from_coeffs(ring, std::move(c));
    if (force_nonzero && f.is_zero())
        return OrePoly::monomial(ring, ring->domain()->one(), rng.below(maxdeg + 1));
    return f;
}

} // namespace testsupport
