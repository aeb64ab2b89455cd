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

#include "skewpoly/detail/modvec.hpp"

#include <algorithm>

namespace skewpoly::detail {

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulm(acc, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return acc;
}

uint64_t invm(uint64_t a, uint64_t p) {
    // extended Euclid on (a, p)
    int64_t t = 0, nt = 1;
    uint64_t r = p, nr = a;
    while (nr != 0) {
        uint64_t q = r / nr;
        int64_t tmp = t - static_cast<int64_t>(q) * nt;
        t = nt;
        nt = tmp;
        uint64_t rmp = r - q * nr;
        r = nr;
        nr = rmp;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

void vtrim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int vdeg(const Vec& a) { return static_cast<int>(a.size()) - 1; }

Vec vadd(const Vec& a, const Vec& b, uint64_t p) {
    Vec c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        c[i] = addm(x, y, p);
    }
    vtrim(c);
    return c;
}

Vec vsub(const Vec& a, const Vec& b, uint64_t p) {
    Vec c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        c[i] = subm(x, y, p);
    }
    vtrim(c);
    return c;
}

Vec vscale(const Vec& a, uint64_t c, uint64_t p) {
    c %= p;
    if (c == 0) return {};
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = mulm(a[i], c, p);
    vtrim(out);
    return out;
}

Vec vmul(const Vec& a, const Vec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
        }
    }
    vtrim(c);
    return c;
}

std::pair<Vec, Vec> vdivmod(const Vec& a, const Vec& b, uint64_t p) {
    Vec r = a, q;
    uint64_t lead_inv = invm(b.back(), p);
    int db = vdeg(b);
    if (vdeg(r) >= db) q.assign(static_cast<size_t>(vdeg(r) - db) + 1, 0);
    while (vdeg(r) >= db) {
        size_t shift = static_cast<size_t>(vdeg(r) - db);
        uint64_t c = mulm(r.back(), lead_inv, p);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[shift + i] = subm(r[shift + i], mulm(c, b[i], p), p);
        }
        vtrim(r);
    }
    vtrim(q);
    return {q, r};
}

Vec vmonic(const Vec& a, uint64_t p) {
    if (a.empty()) return a;
    return vscale(a, invm(a.back(), p), p);
}

Vec vgcd(Vec a, Vec b, uint64_t p) {
    while (!b.empty()) {
        Vec r = vdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return vmonic(a, p);
}

VExt vextgcd(const Vec& a, const Vec& b, uint64_t p) {
    Vec r0 = a, r1 = b;
    Vec s0 = {1}, s1 = {};
    Vec t0 = {}, t1 = {1};
    if (!r0.empty() && r0 == Vec{0}) r0.clear();
    while (!r1.empty()) {
        auto [q, r] = vdivmod(r0, r1, p);
        Vec ns = vsub(s0, vmul(q, s1, p), p);
        Vec nt = vsub(t0, vmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (!r0.empty()) {
        uint64_t c = invm(r0.back(), p);
        r0 = vscale(r0, c, p);
        s0 = vscale(s0, c, p);
        t0 = vscale(t0, c, p);
    }
    return {r0, s0, t0};
}

Vec vpowmod(const Vec& h, const mpz_class& e, const Vec& m, uint64_t p) {
    Vec base = vdivmod(h, m, p).second;
    Vec acc = {1};
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) {
            acc = vdivmod(vmul(acc, base, p), m, p).second;
        }
        base = vdivmod(vmul(base, base, p), m, p).second;
        k >>= 1;
    }
    return acc;
}

bool virreducible(const Vec& m, uint64_t p) {
    int k = vdeg(m);
    if (k < 1) return false;
    if (k == 1) return true;
    Vec x = {0, 1};
    mpz_class P(static_cast<unsigned long>(p));
    // x^(p^k) == x mod m
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(k));
    if (vpowmod(x, pk, m, p) != vdivmod(x, m, p).second) return false;
    // gcd(x^(p^(k/t)) - x, m) == 1 for every prime t | k
    std::vector<int> primes;
    int rem = k;
    for (int t = 2; t * t <= rem; ++t) {
        if (rem % t == 0) {
            primes.push_back(t);
            while (rem % t == 0) rem /= t;
        }
    }
    if (rem > 1) primes.push_back(rem);
    for (int t : primes) {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(k / t));
        Vec d = vsub(vpowmod(x, e, m, p), x, p);
        if (vdeg(vgcd(d, m, p)) != 0) return false;
    }
    return true;
}

} // namespace skewpoly::detail
