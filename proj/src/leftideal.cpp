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

#include "skewpoly/leftideal.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "skewpoly/detail/anyrowspace.hpp"
#include "skewpoly/linalg.hpp"

namespace skewpoly {

namespace {

void require_gb_ring(const RingPtr& ring, const char* op) {
    if (!ring->domain()->is_division_ring())
        throw UnsupportedRing(std::string(op) + " needs division-ring coefficients, got " +
                              ring->domain()->describe());
    for (uint32_t k = 0; k < ring->arity(); ++k) {
        if (!ring->sigma(k).is_automorphism())
            throw UnsupportedRing(std::string(op) + " needs automorphism twists");
    }
}

SkewPoly monomial_times(const RingPtr& ring, const MultiIndex& u, const SkewPoly& g) {
    return skew_mul(SkewPoly::monomial(ring, u, ring->domain()->one()), g);
}

SkewPoly make_monic(const SkewPoly& f) {
    LeadingData ld = leading(f);
    if (ld.zero || is_one(ld.coeff)) return f;
    return skew_scalar_mul(inv(ld.coeff), f);
}

/// S-polynomial: both sides are scaled left multiples with leading term
/// 1 * x^lcm, so the leads cancel exactly.
SkewPoly spoly(const RingPtr& ring, const SkewPoly& g1, const SkewPoly& g2) {
    LeadingData l1 = leading(g1), l2 = leading(g2);
    MultiIndex L = mi_lcm(l1.exp, l2.exp);
    SkewPoly p1 = monomial_times(ring, *mi_sub(L, l1.exp), g1);
    SkewPoly p2 = monomial_times(ring, *mi_sub(L, l2.exp), g2);
    p1 = skew_scalar_mul(inv(leading(p1).coeff), p1);
    p2 = skew_scalar_mul(inv(leading(p2).coeff), p2);
    return skew_sub(p1, p2);
}

/// Copies a polynomial into a ring that differs only in term order.
SkewPoly reorder(const SkewPoly& f, const RingPtr& target) {
    SkewPoly out(target);
    for (const auto& [u, c] : f.terms()) out.add_term(u, c);
    return out;
}

using detail::AnyRowSpace;

std::vector<Scalar> coords(const SkewPoly& f, const std::map<MultiIndex, size_t>& col,
                           size_t width) {
    std::vector<Scalar> v(width, f.ring()->domain()->zero());
    for (const auto& [u, c] : f.terms()) v[col.at(u)] = c;
    return v;
}

} // namespace

LeftIdeal LeftIdeal::make(RingPtr ring, std::vector<SkewPoly> gens) {
    for (const SkewPoly& g : gens) {
        if (g.is_zero()) throw InvalidConstruction("left ideal generators must be nonzero");
        if (g.ring() != ring && !g.ring()->equals(*ring))
            throw DomainMismatch("left ideal generators must share the ideal's ring");
    }
    return LeftIdeal{std::move(ring), std::move(gens)};
}

bool GroebnerBasis::contains_one() const {
    for (const SkewPoly& g : basis) {
        if (!g.is_zero() && leading(g).exp.is_zero()) return true;
    }
    return false;
}

SkewPoly left_reduce(const SkewPoly& f, const std::vector<SkewPoly>& G) {
    if (f.is_zero()) return f;
    const RingPtr& ring = f.ring();
    require_gb_ring(ring, "left_reduce");
    SkewPoly rem(ring);
    SkewPoly h = f;
    while (!h.is_zero()) {
        LeadingData ld = leading(h);
        const SkewPoly* red = nullptr;
        for (const SkewPoly& g : G) {
            if (!g.is_zero() && mi_divides(leading(g).exp, ld.exp)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            rem.add_term(ld.exp, ld.coeff);
            h.add_term(ld.exp, neg(ld.coeff));
            continue;
        }
        MultiIndex u = *mi_sub(ld.exp, leading(*red).exp);
        SkewPoly p = monomial_times(ring, u, *red);
        Scalar c = mul(ld.coeff, inv(leading(p).coeff));
        h = skew_sub(h, skew_scalar_mul(c, p));
    }
    return rem;
}

GroebnerBasis buchberger(const LeftIdeal& I) {
    const RingPtr& ring = I.ring;
    require_gb_ring(ring, "buchberger");
    GroebnerBasis gb;
    gb.ring = ring;

    std::vector<SkewPoly> basis;
    std::deque<std::pair<size_t, size_t>> queue;
    auto push = [&](SkewPoly g) {
        g = make_monic(g);
        for (size_t i = 0; i < basis.size(); ++i) queue.emplace_back(i, basis.size());
        basis.push_back(std::move(g));
        ++gb.stats.basis_additions;
    };

    for (const SkewPoly& g : I.gens) {
        SkewPoly r = left_reduce(g, basis);
        if (!r.is_zero()) push(std::move(r));
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        ++gb.stats.pairs_considered;
        SkewPoly s = spoly(ring, basis[i], basis[j]);
        SkewPoly r = left_reduce(s, basis);
        if (r.is_zero())
            ++gb.stats.reductions_to_zero;
        else
            push(std::move(r));
    }

    // inter-reduce: every element fully reduced against the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<SkewPoly> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            SkewPoly r = left_reduce(basis[i], others);
            if (r == basis[i]) continue;
            changed = true;
            if (r.is_zero()) {
                basis.erase(basis.begin() + i);
                --i;
            } else {
                basis[i] = make_monic(r);
            }
        }
    }

    std::sort(basis.begin(), basis.end(), [&](const SkewPoly& a, const SkewPoly& b) {
        return ring->order().less(leading(a).exp, leading(b).exp);
    });
    gb.basis = std::move(basis);
    return gb;
}

bool member(const SkewPoly& f, const GroebnerBasis& gb) {
    return left_reduce(f, gb.basis).is_zero();
}

bool member(const SkewPoly& f, const LeftIdeal& I) { return member(f, buchberger(I)); }

std::vector<MultiIndex> monomials_up_to(const RingPtr& ring, uint32_t d) {
    std::vector<MultiIndex> out;
    MultiIndex cur = mi_zero(ring->arity());
    // odometer over exponents with total degree <= d
    for (;;) {
        out.push_back(cur);
        uint32_t k = 0;
        for (;;) {
            if (k == ring->arity()) {
                std::sort(out.begin(), out.end(),
                          [&](const MultiIndex& a, const MultiIndex& b) {
                              return ring->order().less(a, b);
                          });
                return out;
            }
            cur.e[k] += 1;
            if (cur.total() <= d) break;
            cur.e[k] = 0;
            ++k;
        }
    }
}

MemberWitness member_bruteforce(const SkewPoly& f, const LeftIdeal& I, int cap) {
    const RingPtr& ring = I.ring;
    MemberWitness out;
    if (cap < 0) {
        int64_t maxdeg = f.total_degree();
        for (const SkewPoly& g : I.gens) maxdeg = std::max(maxdeg, g.total_degree());
        cap = 2 * static_cast<int>(std::max<int64_t>(maxdeg, 0)) + 2;
    }
    out.cap = static_cast<uint32_t>(cap);
    if (f.is_zero()) {
        out.yes = true;
        out.multipliers.assign(I.gens.size(), SkewPoly(ring));
        return out;
    }

    std::vector<MultiIndex> mults = monomials_up_to(ring, out.cap);
    std::vector<SkewPoly> products;
    std::vector<std::pair<size_t, MultiIndex>> tags; // generator index, multiplier exponent
    std::map<MultiIndex, size_t> col;
    auto intern = [&](const SkewPoly& p) {
        for (const auto& [u, c] : p.terms()) col.emplace(u, 0);
    };
    for (size_t j = 0; j < I.gens.size(); ++j) {
        for (const MultiIndex& u : mults) {
            SkewPoly p = monomial_times(ring, u, I.gens[j]);
            intern(p);
            products.push_back(std::move(p));
            tags.emplace_back(j, u);
        }
    }
    intern(f);
    size_t width = 0;
    for (auto& [u, idx] : col) idx = width++;

    AnyRowSpace rs(ring->domain(), width);
    for (const SkewPoly& p : products) rs.insert(coords(p, col, width));
    auto expr = rs.express(coords(f, col, width));
    if (!expr) return out;

    out.multipliers.assign(I.gens.size(), SkewPoly(ring));
    for (size_t i = 0; i < expr->size(); ++i) {
        if (is_zero((*expr)[i])) continue;
        auto [j, u] = tags[i];
        out.multipliers[j].add_term(u, (*expr)[i]);
    }
    // re-verify the certificate by expansion
    SkewPoly check(ring);
    for (size_t j = 0; j < I.gens.size(); ++j)
        check = skew_add(check, skew_mul(out.multipliers[j], I.gens[j]));
    if (check != f) {
        out.multipliers.clear();
        return out;
    }
    out.yes = true;
    return out;
}

std::vector<SkewPoly> eliminate(const LeftIdeal& I, const std::vector<uint32_t>& keep) {
    const RingPtr& ring = I.ring;
    std::vector<bool> kept(ring->arity(), false);
    for (uint32_t k : keep) {
        if (k >= ring->arity()) throw InvalidConstruction("eliminate: variable index out of range");
        kept[k] = true;
    }
    // block order: eliminated variables rank above every kept variable
    std::vector<uint32_t> prio;
    for (uint32_t k = ring->arity(); k-- > 0;)
        if (!kept[k]) prio.push_back(k);
    for (uint32_t k = ring->arity(); k-- > 0;)
        if (kept[k]) prio.push_back(k);
    RingPtr block = ring->with_order(TermOrderSpec::lex_with(prio));

    LeftIdeal bi{block, {}};
    for (const SkewPoly& g : I.gens) bi.gens.push_back(reorder(g, block));
    GroebnerBasis gb = buchberger(bi);

    std::vector<SkewPoly> out;
    for (const SkewPoly& g : gb.basis) {
        bool pure = true;
        for (const auto& [u, c] : g.terms()) {
            for (uint32_t k = 0; k < ring->arity() && pure; ++k)
                if (u.e[k] > 0 && !kept[k]) pure = false;
        }
        if (pure) out.push_back(reorder(g, ring));
    }
    return out;
}

std::vector<SkewPoly> slice_basis(const LeftIdeal& I, uint32_t d) {
    const RingPtr& ring = I.ring;
    RingPtr dr = ring->order().kind == TermOrderSpec::Kind::DegLex
                     ? ring
                     : ring->with_order(TermOrderSpec::deglex());
    LeftIdeal di{dr, {}};
    for (const SkewPoly& g : I.gens) di.gens.push_back(reorder(g, dr));
    GroebnerBasis gb = buchberger(di);

    // columns in descending deglex order so each echelon pivot is a leading
    // exponent; the echelon rows are then a canonical reduced basis
    std::vector<MultiIndex> monos = monomials_up_to(dr, d);
    std::reverse(monos.begin(), monos.end());
    std::map<MultiIndex, size_t> col;
    for (size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);

    AnyRowSpace rs(ring->domain(), monos.size());
    for (const SkewPoly& g : gb.basis) {
        int64_t gd = g.total_degree();
        if (gd > static_cast<int64_t>(d)) continue;
        for (const MultiIndex& u : monomials_up_to(dr, d - static_cast<uint32_t>(gd))) {
            SkewPoly p = monomial_times(dr, u, g);
            if (p.total_degree() > static_cast<int64_t>(d))
                throw InvalidConstruction("slice_basis: degree bound violated");
            rs.insert(coords(p, col, monos.size()));
        }
    }
    std::vector<SkewPoly> out;
    for (const auto& row : rs.rows_as_scalars()) {
        SkewPoly f(ring);
        for (size_t i = 0; i < row.size(); ++i)
            if (!is_zero(row[i])) f.add_term(monos[i], row[i]);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [&](const SkewPoly& a, const SkewPoly& b) {
        return ring->order().less(leading(a).exp, leading(b).exp);
    });
    return out;
}

StaircaseReport staircase_of(const GroebnerBasis& gb) {
    const RingPtr& ring = gb.ring;
    StaircaseReport rep;
    for (const SkewPoly& g : gb.basis) rep.leads.push_back(leading(g).exp);

    const uint32_t n = ring->arity();
    std::vector<int64_t> bound(n, -1); // least pure-power degree per axis
    for (const MultiIndex& u : rep.leads) {
        int axis = -1;
        bool pure = true;
        for (uint32_t k = 0; k < n; ++k) {
            if (u.e[k] == 0) continue;
            if (axis >= 0) {
                pure = false;
                break;
            }
            axis = static_cast<int>(k);
        }
        if (!pure) continue;
        if (axis < 0) {
            // constant lead: the ideal is the whole ring
            for (uint32_t k = 0; k < n; ++k) bound[k] = 0;
            break;
        }
        int64_t e = u.e[static_cast<uint32_t>(axis)];
        if (bound[axis] < 0 || e < bound[axis]) bound[axis] = e;
    }
    for (uint32_t k = 0; k < n; ++k) {
        if (bound[k] < 0) {
            rep.finite = false;
            rep.witness_axis = static_cast<int>(k);
            return rep;
        }
    }
    rep.finite = true;
    // enumerate the box under the pure-power bounds, filter by divisibility
    MultiIndex cur = mi_zero(n);
    for (bool done = false; !done;) {
        bool standard = true;
        for (const MultiIndex& u : rep.leads) {
            if (mi_divides(u, cur)) {
                standard = false;
                break;
            }
        }
        if (standard) rep.std_monomials.push_back(cur);
        uint32_t k = 0;
        for (;;) {
            if (k == n) {
                done = true;
                break;
            }
            cur.e[k] += 1;
            if (cur.e[k] < static_cast<uint32_t>(bound[k])) break;
            cur.e[k] = 0;
            ++k;
        }
    }
    std::sort(rep.std_monomials.begin(), rep.std_monomials.end(),
              [&](const MultiIndex& a, const MultiIndex& b) { return ring->order().less(a, b); });
    rep.dimension = rep.std_monomials.size();
    return rep;
}

StaircaseReport staircase(const LeftIdeal& I) { return staircase_of(buchberger(I)); }

} // namespace skewpoly
