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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewpoly/errors.hpp"
#include "skewpoly/rng.hpp"

namespace skewpoly {

/// Exponent vector in N^n.
struct MultiIndex {
    std::vector<uint32_t> e;

    uint32_t arity() const { return static_cast<uint32_t>(e.size()); }
    uint64_t total() const;
    bool is_zero() const;
    uint32_t operator[](size_t i) const { return e[i]; }

    bool operator==(const MultiIndex&) const = default;
    // structural key order for containers, unrelated to term orders
    auto operator<=>(const MultiIndex&) const = default;
};

MultiIndex mi_zero(uint32_t n);
MultiIndex mi_unit(uint32_t n, uint32_t k);
MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);
/// Componentwise difference; empty when some a_i < b_i.
std::optional<MultiIndex> mi_sub(const MultiIndex& a, const MultiIndex& b);
bool mi_divides(const MultiIndex& a, const MultiIndex& b); // a <= b componentwise
MultiIndex mi_lcm(const MultiIndex& a, const MultiIndex& b);
std::string mi_to_string(const MultiIndex& a);

enum class Cmp { LT, EQ, GT };

/// Term order on N^n. `prio` lists coordinate positions from most significant
/// to least; empty means (n-1, ..., 1, 0), i.e. the highest-index variable
/// dominates. Lex compares along `prio`; DegLex compares total degree first
/// and breaks ties the same way.
struct TermOrderSpec {
    enum class Kind { Lex, DegLex };

    Kind kind = Kind::Lex;
    std::vector<uint32_t> prio;

    static TermOrderSpec lex() { return {Kind::Lex, {}}; }
    static TermOrderSpec deglex() { return {Kind::DegLex, {}}; }
    static TermOrderSpec lex_with(std::vector<uint32_t> prio) { return {Kind::Lex, std::move(prio)}; }

    Cmp compare(const MultiIndex& a, const MultiIndex& b) const;
    bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) == Cmp::LT; }
    std::string describe() const;

    bool operator==(const TermOrderSpec&) const = default;
};

struct OrderSanityReport {
    bool ok = true;
    uint64_t samples = 0;
    std::string failure;
    std::vector<MultiIndex> witness;
};

using CompareFn = std::function<Cmp(const MultiIndex&, const MultiIndex&)>;

/// Checks the term-order axioms on random data: zero is the strict minimum,
/// comparison is a total order consistent under swap, and a < b implies
/// a+c < b+c. The comparator form exists so corrupted comparators can be
/// exercised as negative controls.
OrderSanityReport order_sanity(const CompareFn& cmp, uint32_t arity, uint64_t samples, Rng& rng,
                               uint32_t height = 6);
OrderSanityReport order_sanity(const TermOrderSpec& o, uint32_t arity, uint64_t samples, Rng& rng);

} // namespace skewpoly
