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

#ifndef ULRC_LINPOLY_HPP
#define ULRC_LINPOLY_HPP

#include <utility>
#include <vector>

#include "ulrc/fields.hpp"

namespace ulrc {

/// Linearized polynomial f(x) = Σ a_i x^(q^(i-1)) over F_{q^t}, an
/// F_q-linear map. The q-degree is coeffs.size() - 1 and must stay below t.
class LinearizedPoly {
   public:
    explicit LinearizedPoly(std::vector<Elt> coeffs);

    const std::vector<Elt>& coeffs() const { return coeffs_; }
    std::size_t dim() const { return coeffs_.size(); }  // k: number of coefficients
    FieldTower tower() const { return coeffs_.front().tower(); }

    Elt eval(const Elt& x) const;

   private:
    std::vector<Elt> coeffs_;
};

/// Recovers the unique f of q-degree < dim from evaluations at F_q-linearly
/// independent points. A greedy left-to-right scan picks the first dim
/// independent x-coordinates; every remaining point is then checked against
/// the interpolated polynomial and a mismatch is reported as an error (the
/// inputs are not evaluations of any single such polynomial).
LinearizedPoly lp_interpolate(const std::vector<std::pair<Elt, Elt>>& points, std::size_t dim);

}  // namespace ulrc

#endif
