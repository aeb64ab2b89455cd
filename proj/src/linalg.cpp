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

#include "skewpoly/linalg.hpp"

#include <utility>

#include "skewpoly/errors.hpp"

namespace skewpoly {

namespace detail {

FlatField::FlatField(DomainPtr d) : dom(std::move(d)) {
    if (!dom->has_tables())
        throw UnsupportedRing("flat linear algebra needs a tabled finite field, got " +
                              dom->describe());
    q = static_cast<uint32_t>(dom->size());
    tadd = dom->add_table().data();
    tmul = dom->mul_table().data();
    tinv = dom->inv_table().data();
    tneg.assign(q, 0);
    for (uint32_t a = 0; a < q; ++a) {
        for (uint32_t b = 0; b < q; ++b) {
            if (tadd[a * q + b] == 0) {
                tneg[a] = static_cast<uint16_t>(b);
                break;
            }
        }
    }
}

} // namespace detail

RowSpace make_row_space(DomainPtr dom, size_t width) {
    if (!dom->is_division_ring())
        throw UnsupportedRing("row elimination needs division-ring coefficients, got " +
                              dom->describe());
    return RowSpace(detail::ScalarField{std::move(dom)}, width);
}

FlatRowSpace make_flat_row_space(DomainPtr dom, size_t width) {
    return FlatRowSpace(detail::FlatField(std::move(dom)), width);
}

std::vector<uint16_t> to_flat(const DomainPtr& dom, const std::vector<Scalar>& row) {
    std::vector<uint16_t> out(row.size());
    for (size_t i = 0; i < row.size(); ++i)
        out[i] = static_cast<uint16_t>(dom->index_of(row[i]));
    return out;
}

std::vector<Scalar> from_flat(const DomainPtr& dom, const std::vector<uint16_t>& row) {
    std::vector<Scalar> out(row.size());
    for (size_t i = 0; i < row.size(); ++i) out[i] = dom->element_at(row[i]);
    return out;
}

Mat Mat::zero(DomainPtr dom, size_t nr, size_t nc) {
    Mat m;
    m.nrows = nr;
    m.ncols = nc;
    m.a.assign(nr * nc, dom->zero());
    m.dom = std::move(dom);
    return m;
}

Mat rref(Mat m, std::vector<int>* pivots) {
    if (!m.dom->is_commutative() || !m.dom->is_field())
        throw UnsupportedRing("rref needs a commutative coefficient field, got " +
                              m.dom->describe());
    size_t r = 0;
    for (size_t c = 0; c < m.ncols && r < m.nrows; ++c) {
        size_t sel = r;
        while (sel < m.nrows && is_zero(m.at(sel, c))) ++sel;
        if (sel == m.nrows) continue;
        if (sel != r) {
            for (size_t j = 0; j < m.ncols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        }
        Scalar s = inv(m.at(r, c));
        for (size_t j = 0; j < m.ncols; ++j) m.at(r, j) = mul(s, m.at(r, j));
        for (size_t i = 0; i < m.nrows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Scalar f = m.at(i, c);
            for (size_t j = 0; j < m.ncols; ++j)
                m.at(i, j) = sub(m.at(i, j), mul(f, m.at(r, j)));
        }
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    return m;
}

size_t mat_rank(const Mat& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m) {
    std::vector<int> pivots;
    Mat e = rref(m, &pivots);
    std::vector<bool> is_pivot(e.ncols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t j = 0; j < e.ncols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> x(e.ncols, e.dom->zero());
        x[j] = e.dom->one();
        for (size_t i = 0; i < pivots.size(); ++i)
            x[static_cast<size_t>(pivots[i])] = neg(e.at(i, j));
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace skewpoly
