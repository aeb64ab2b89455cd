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

#include <optional>
#include <vector>

#include "skewpoly/linalg.hpp"

namespace skewpoly::detail {

/// Row elimination over Scalar rows, picking the dense table path when the
/// domain carries operation tables.
class AnyRowSpace {
public:
    AnyRowSpace(const DomainPtr& dom, size_t width) : dom_(dom) {
        if (dom->has_tables())
            flat_.emplace(make_flat_row_space(dom, width));
        else
            gen_.emplace(make_row_space(dom, width));
    }

    bool insert(const std::vector<Scalar>& v) {
        return flat_ ? flat_->insert(to_flat(dom_, v)) : gen_->insert(v);
    }
    size_t rank() const { return flat_ ? flat_->rank() : gen_->rank(); }
    bool contains(const std::vector<Scalar>& v) const {
        return flat_ ? flat_->contains(to_flat(dom_, v)) : gen_->contains(v);
    }
    std::optional<std::vector<Scalar>> express(const std::vector<Scalar>& v) const {
        if (flat_) {
            auto e = flat_->express(to_flat(dom_, v));
            if (!e) return std::nullopt;
            return from_flat(dom_, *e);
        }
        return gen_->express(v);
    }
    std::vector<std::vector<Scalar>> rows_as_scalars() const {
        std::vector<std::vector<Scalar>> out;
        if (flat_) {
            for (const auto& r : flat_->rows()) out.push_back(from_flat(dom_, r));
        } else {
            out = gen_->rows();
        }
        return out;
    }

private:
    DomainPtr dom_;
    std::optional<FlatRowSpace> flat_;
    std::optional<RowSpace> gen_;
};

} // namespace skewpoly::detail
