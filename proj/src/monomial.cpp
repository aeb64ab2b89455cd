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

#include "skewpoly/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace skewpoly {

uint64_t MultiIndex::total() const {
    return std::accumulate(e.begin(), e.end(), uint64_t{0});
}

bool MultiIndex::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](uint32_t v) { return v == 0; });
}

MultiIndex mi_zero(uint32_t n) { return {std::vector<uint32_t>(n, 0)}; }

MultiIndex mi_unit(uint32_t n, uint32_t k) {
    MultiIndex m = mi_zero(n);
    m.e[k] = 1;
    return m;
}

namespace {
void require_arity(const MultiIndex& a, const MultiIndex& b, const char* op) {
    if (a.arity() != b.arity()) {
        throw InvalidConstruction(std::string(op) + ": arity mismatch (" + std::to_string(a.arity()) +
                                  " vs " + std::to_string(b.arity()) + ")");
    }
}
} // namespace

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    require_arity(a, b, "mi_add");
    MultiIndex c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] += b.e[i];
    return c;
}

std::optional<MultiIndex> mi_sub(const MultiIndex& a, const MultiIndex& b) {
    require_arity(a, b, "mi_sub");
    MultiIndex c = a;
    for (size_t i = 0; i < c.e.size(); ++i) {
        if (a.e[i] < b.e[i]) return std::nullopt;
        c.e[i] -= b.e[i];
    }
    return c;
}

bool mi_divides(const MultiIndex& a, const MultiIndex& b) {
    require_arity(a, b, "mi_divides");
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] > b.e[i]) return false;
    }
    return true;
}

MultiIndex mi_lcm(const MultiIndex& a, const MultiIndex& b) {
    require_arity(a, b, "mi_lcm");
    MultiIndex c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] = std::max(a.e[i], b.e[i]);
    return c;
}

std::string mi_to_string(const MultiIndex& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.e[i]);
    }
    return s + ")";
}

Cmp TermOrderSpec::compare(const MultiIndex& a, const MultiIndex& b) const {
    require_arity(a, b, "compare");
    if (kind == Kind::DegLex) {
        uint64_t da = a.total(), db = b.total();
        if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    }
    auto at = [&](size_t rank) -> size_t {
        if (prio.empty()) return a.e.size() - 1 - rank;
        return prio[rank];
    };
    for (size_t rank = 0; rank < a.e.size(); ++rank) {
        size_t i = at(rank);
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

std::string TermOrderSpec::describe() const {
    std::string s = kind == Kind::Lex ? "lex" : "deglex";
    if (!prio.empty()) {
        s += "[";
        for (size_t i = 0; i < prio.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(prio[i]);
        }
        s += "]";
    }
    return s;
}

namespace {
MultiIndex random_index(uint32_t arity, uint32_t height, Rng& rng) {
    MultiIndex m = mi_zero(arity);
    for (auto& v : m.e) v = static_cast<uint32_t>(rng.below(height + 1));
    return m;
}
} // namespace

OrderSanityReport order_sanity(const CompareFn& cmp, uint32_t arity, uint64_t samples, Rng& rng,
                               uint32_t height) {
    OrderSanityReport rep;
    rep.samples = samples;
    MultiIndex zero = mi_zero(arity);
    if (cmp(zero, zero) != Cmp::EQ) {
        rep.ok = false;
        rep.failure = "compare(0,0) != EQ";
        rep.witness = {zero};
        return rep;
    }
    for (uint64_t s = 0; s < samples; ++s) {
        MultiIndex a = random_index(arity, height, rng);
        MultiIndex b = random_index(arity, height, rng);
        MultiIndex c = random_index(arity, height, rng);
        if (!a.is_zero() && cmp(zero, a) != Cmp::LT) {
            rep.ok = false;
            rep.failure = "zero is not the strict minimum";
            rep.witness = {a};
            return rep;
        }
        Cmp ab = cmp(a, b), ba = cmp(b, a);
        if ((ab == Cmp::EQ) != (a == b)) {
            rep.ok = false;
            rep.failure = "EQ does not coincide with vector equality";
            rep.witness = {a, b};
            return rep;
        }
        if ((ab == Cmp::LT && ba != Cmp::GT) || (ab == Cmp::GT && ba != Cmp::LT) ||
            (ab == Cmp::EQ && ba != Cmp::EQ)) {
            rep.ok = false;
            rep.failure = "comparison is not antisymmetric";
            rep.witness = {a, b};
            return rep;
        }
        // transitivity on the sorted triple
        std::vector<MultiIndex> t = {a, b, c};
        std::sort(t.begin(), t.end(), [&](const MultiIndex& x, const MultiIndex& y) {
            return cmp(x, y) == Cmp::LT;
        });
        if (cmp(t[0], t[2]) == Cmp::GT) {
            rep.ok = false;
            rep.failure = "comparison is not transitive";
            rep.witness = {a, b, c};
            return rep;
        }
        if (ab == Cmp::LT) {
            Cmp shifted = cmp(mi_add(a, c), mi_add(b, c));
            if (shifted != Cmp::LT) {
                rep.ok = false;
                rep.failure = "a<b does not imply a+c<b+c";
                rep.witness = {a, b, c};
                return rep;
            }
        }
    }
    return rep;
}

OrderSanityReport order_sanity(const TermOrderSpec& o, uint32_t arity, uint64_t samples, Rng& rng) {
    return order_sanity([&o](const MultiIndex& a, const MultiIndex& b) { return o.compare(a, b); },
                        arity, samples, rng);
}

} // namespace skewpoly
