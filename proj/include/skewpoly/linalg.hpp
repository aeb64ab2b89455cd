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
#include <optional>
#include <vector>

#include "skewpoly/scalar.hpp"

namespace skewpoly {

namespace detail {

/// Arithmetic adaptor over Scalar values; valid for any division ring.
struct ScalarField {
    DomainPtr dom;
    using V = Scalar;
    V zero() const { return dom->zero(); }
    V one() const { return dom->one(); }
    bool is_zero(const V& a) const { return skewpoly::is_zero(a); }
    V add(const V& a, const V& b) const { return skewpoly::add(a, b); }
    V sub(const V& a, const V& b) const { return skewpoly::sub(a, b); }
    V mul(const V& a, const V& b) const { return skewpoly::mul(a, b); }
    V inv(const V& a) const { return skewpoly::inv(a); }
};

/// Table-driven adaptor over element indices of a finite field of size at
/// most 256; rows become dense uint16 vectors.
struct FlatField {
    DomainPtr dom;
    uint32_t q = 0;
    const uint16_t* tadd = nullptr;
    const uint16_t* tmul = nullptr;
    const uint16_t* tinv = nullptr;
    std::vector<uint16_t> tneg;

    explicit FlatField(DomainPtr d);

    using V = uint16_t;
    V zero() const { return 0; }
    V one() const { return 1; }
    bool is_zero(V a) const { return a == 0; }
    V add(V a, V b) const { return tadd[a * q + b]; }
    V sub(V a, V b) const { return tadd[a * q + tneg[b]]; }
    V mul(V a, V b) const { return tmul[a * q + b]; }
    V inv(V a) const { return tinv[a]; }
};

/// Incremental left row space over a division ring: the span of the inserted
/// rows under left scalar combinations, kept in reduced echelon form with a
/// full record of how each echelon row combines the inserted ones. All scalar
/// coefficients act from the left, so the elimination is valid over
/// noncommutative coefficient domains.
template <class F>
class BasicRowSpace {
public:
    using V = typename F::V;
    using Row = std::vector<V>;

    BasicRowSpace(F f, size_t width) : f_(std::move(f)), width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }
    size_t inserted() const { return inserted_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    /// rows()[i] == sum_j transform()[i][j] * inserted_j (left coefficients;
    /// entries beyond a transform row's length are zero).
    const std::vector<Row>& transform() const { return tf_; }

    /// Adds one row to the record; returns true when the rank grew.
    bool insert(Row v) {
        Row t(inserted_ + 1, f_.zero());
        t[inserted_] = f_.one();
        reduce(v, &t);
        ++inserted_;
        if (find_pivot(v) < 0) return false;
        normalize(v, t);
        // keep earlier rows fully reduced against the new pivot
        int p = find_pivot(v);
        for (size_t i = 0; i < rows_.size(); ++i) {
            const V c = rows_[i][p];
            if (f_.is_zero(c)) continue;
            axpy(rows_[i], c, v);
            axpy_tf(tf_[i], c, t);
        }
        size_t at = rows_.size();
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (p < pivots_[i]) {
                at = i;
                break;
            }
        }
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, p);
        tf_.insert(tf_.begin() + at, std::move(t));
        return true;
    }

    bool contains(Row v) const {
        reduce(v, nullptr);
        return find_pivot(v) < 0;
    }

    /// Left coefficients on the *inserted* rows expressing v, when v lies in
    /// the span; the result has length inserted().
    std::optional<Row> express(Row v) const {
        Row coeff(rows_.size(), f_.zero());
        for (size_t i = 0; i < rows_.size(); ++i) {
            const V c = v[pivots_[i]];
            if (f_.is_zero(c)) continue;
            coeff[i] = c;
            axpy(v, c, rows_[i]);
        }
        if (find_pivot(v) >= 0) return std::nullopt;
        Row out(inserted_, f_.zero());
        for (size_t i = 0; i < rows_.size(); ++i) {
            for (size_t j = 0; j < tf_[i].size(); ++j) {
                if (!f_.is_zero(tf_[i][j]))
                    out[j] = f_.add(out[j], f_.mul(coeff[i], tf_[i][j]));
            }
        }
        return out;
    }

private:
    int find_pivot(const Row& v) const {
        for (size_t j = 0; j < v.size(); ++j)
            if (!f_.is_zero(v[j])) return static_cast<int>(j);
        return -1;
    }

    // v -= c * w entrywise (left multiplication by c)
    void axpy(Row& v, const V& c, const Row& w) const {
        for (size_t j = 0; j < w.size(); ++j) {
            if (!f_.is_zero(w[j])) v[j] = f_.sub(v[j], f_.mul(c, w[j]));
        }
    }
    void axpy_tf(Row& v, const V& c, const Row& w) const {
        if (v.size() < w.size()) v.resize(w.size(), f_.zero());
        axpy(v, c, w);
    }

    void reduce(Row& v, Row* t) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const V c = v[pivots_[i]];
            if (f_.is_zero(c)) continue;
            axpy(v, c, rows_[i]);
            if (t) axpy_tf(*t, c, tf_[i]);
        }
    }

    void normalize(Row& v, Row& t) const {
        const V s = f_.inv(v[find_pivot(v)]);
        for (auto& x : v)
            if (!f_.is_zero(x)) x = f_.mul(s, x);
        for (auto& x : t)
            if (!f_.is_zero(x)) x = f_.mul(s, x);
    }

    F f_;
    size_t width_;
    std::vector<Row> rows_;
    std::vector<int> pivots_;
    std::vector<Row> tf_;
    size_t inserted_ = 0;
};

} // namespace detail

using RowSpace = detail::BasicRowSpace<detail::ScalarField>;
using FlatRowSpace = detail::BasicRowSpace<detail::FlatField>;

RowSpace make_row_space(DomainPtr dom, size_t width);
/// Requires a finite field of size at most 256 (dense tables present).
FlatRowSpace make_flat_row_space(DomainPtr dom, size_t width);

/// Element indices of a row of scalars in a tabled finite field, and back.
std::vector<uint16_t> to_flat(const DomainPtr& dom, const std::vector<Scalar>& row);
std::vector<Scalar> from_flat(const DomainPtr& dom, const std::vector<uint16_t>& row);

/// Dense matrix over a commutative coefficient field, row major.
struct Mat {
    DomainPtr dom;
    size_t nrows = 0, ncols = 0;
    std::vector<Scalar> a;

    static Mat zero(DomainPtr dom, size_t nr, size_t nc);
    Scalar& at(size_t i, size_t j) { return a[i * ncols + j]; }
    const Scalar& at(size_t i, size_t j) const { return a[i * ncols + j]; }
};

/// Reduced row echelon form; appends the pivot column of each nonzero row to
/// `pivots` when given. Commutative coefficient fields only.
Mat rref(Mat m, std::vector<int>* pivots = nullptr);
size_t mat_rank(const Mat& m);
/// Basis of {x : M x = 0}. Commutative coefficient fields only.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m);

} // namespace skewpoly
