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

#include "ulrc/gabidulin.hpp"

namespace ulrc {

namespace {

std::vector<Elt> default_points(const FieldTower& tower, std::size_t n) {
    std::vector<Elt> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(tower.poly_basis(i));
    return pts;
}

}  // namespace

GabidulinCode::GabidulinCode(const FieldTower& tower, std::size_t n, std::size_t k)
    : GabidulinCode(tower, n, k, default_points(tower, n)) {}

GabidulinCode::GabidulinCode(const FieldTower& tower, std::size_t n, std::size_t k,
                             std::vector<Elt> points)
    : tower_(tower), n_(n), k_(k), points_(std::move(points)) {
    if (k < 1 || k > n) throw ConstraintError("need 1 <= k <= n");
    if (n > tower.top_degree()) throw ConstraintError("length exceeds the extension degree");
    if (points_.size() != n) throw ConstraintError("wrong number of evaluation points");
    for (const auto& x : points_)
        if (!x.tower().same_as(tower_)) throw ConstraintError("evaluation point from another tower");
    if (rank_over_base(points_) != n)
        throw ConstraintError("evaluation points are not F_q-linearly independent");
}

std::vector<Elt> GabidulinCode::encode(const std::vector<Elt>& message) const {
    if (message.size() != k_) throw ConstraintError("message length mismatch");
    LinearizedPoly f(message);
    std::vector<Elt> codeword;
    codeword.reserve(n_);
    for (const auto& x : points_) codeword.push_back(f.eval(x));
    return codeword;
}

std::vector<Elt> GabidulinCode::decode_erasures(
    const std::vector<std::optional<Elt>>& received) const {
    if (received.size() != n_) throw ConstraintError("received length mismatch");
    std::vector<std::pair<Elt, Elt>> survivors;
    for (std::size_t i = 0; i < n_; ++i)
        if (received[i]) survivors.emplace_back(points_[i], *received[i]);
    if (survivors.size() < k_)
        throw DataLossError("fewer than k surviving symbols");
    LinearizedPoly f = lp_interpolate(survivors, k_);
    return f.coeffs();
}

}  // namespace ulrc
