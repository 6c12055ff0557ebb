/*
 * Copyright 2026 The ulrc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ulrc/linpoly.hpp"

namespace ulrc {

LinearizedPoly::LinearizedPoly(std::vector<Elt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ConstraintError("linearized polynomial needs a coefficient");
    FieldTower tw = coeffs_.front().tower();
    if (coeffs_.size() > tw.top_degree())
        throw ConstraintError("q-degree must stay below the extension degree");
    for (const auto& c : coeffs_)
        if (!c.tower().same_as(tw)) throw ConstraintError("mixed towers in linearized polynomial");
}

Elt LinearizedPoly::eval(const Elt& x) const {
    if (!x.tower().same_as(tower())) throw ConstraintError("mixed towers in evaluation");
    Elt acc = coeffs_.front() * x;
    Elt power = x;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        power = power.frobenius(1);
        acc = acc + coeffs_[i] * power;
    }
    return acc;
}

LinearizedPoly lp_interpolate(const std::vector<std::pair<Elt, Elt>>& points, std::size_t dim) {
    if (dim == 0) throw ConstraintError("interpolation dimension must be positive");
    if (points.size() < dim) throw ConstraintError("not enough interpolation points");
    FieldTower tw = points.front().first.tower();

    // greedy left-to-right independent subset of the x-coordinates
    std::vector<Elt> chosen_x;
    std::vector<std::size_t> chosen_idx;
    for (std::size_t i = 0; i < points.size() && chosen_x.size() < dim; ++i) {
        chosen_x.push_back(points[i].first);
        if (rank_over_base(chosen_x) == chosen_x.size())
            chosen_idx.push_back(i);
        else
            chosen_x.pop_back();
    }
    if (chosen_x.size() < dim)
        throw ConstraintError("x-coordinates are rank deficient over F_q");

    // Moore system: row i is (x_i^(q^0), ..., x_i^(q^(dim-1)))
    Mat moore(dim, dim, tw.zero());
    std::vector<Elt> rhs;
    for (std::size_t i = 0; i < dim; ++i) {
        Elt power = points[chosen_idx[i]].first;
        for (std::size_t j = 0; j < dim; ++j) {
            moore.set(i, j, power);
            power = power.frobenius(1);
        }
        rhs.push_back(points[chosen_idx[i]].second);
    }
    auto solution = mat_solve(moore, rhs);
    if (!solution) throw Error("Moore system unsolvable on independent points");  // impossible
    LinearizedPoly f(std::move(*solution));

    for (const auto& [x, y] : points)
        if (f.eval(x) != y)
            throw ConstraintError("points are inconsistent with a single linearized polynomial");
    return f;
}

}  // namespace ulrc
