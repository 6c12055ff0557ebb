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

#ifndef ULRC_FIELDS_HPP
#define ULRC_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ulrc/errors.hpp"
#include "ulrc/rng.hpp"

namespace ulrc {

/// Element of the middle field F_q = F_p[x]/(g): `a` base-p digits,
/// little-endian (constant term first). Arithmetic goes through FieldTower.
using FqElem = std::vector<std::uint32_t>;

class FieldTower;
class Elt;

/// Shared immutable arithmetic context for the tower F_p ⊆ F_q ⊆ F_{q^t}
/// with q = p^a, F_q = F_p[x]/(g) and F_{q^t} = F_q[y]/(h).
///
/// Moduli are deterministic given (p, a, t): the lexicographically least
/// monic irreducible polynomial, comparing coefficient tuples constant term
/// first with digits as integers. Explicit moduli can be supplied instead;
/// they are validated by exhaustive trial division (desk scale).
///
/// Towers are cheap shared handles; all state is immutable after
/// construction, so towers and elements are safe to share across threads.
class FieldTower {
   public:
    /// Builds the tower with derived moduli. p must be prime (≤ 2^16) and
    /// a·t ≤ 64.
    static FieldTower build(std::uint32_t p, std::uint32_t a, std::uint32_t t);

    /// Builds with explicit moduli; g has a+1 base-p digits, h has t+1 F_q
    /// coefficients, both monic. Irreducibility is verified.
    static FieldTower build(std::uint32_t p, std::uint32_t a, std::uint32_t t, FqElem g,
                            std::vector<FqElem> h);

    std::uint32_t characteristic() const;  // p
    std::uint32_t base_degree() const;     // a
    std::uint32_t top_degree() const;      // t
    std::uint64_t q() const;               // p^a (throws above 2^63)

    const FqElem& base_modulus() const;               // g
    const std::vector<FqElem>& top_modulus() const;   // h

    // --- F_q arithmetic -------------------------------------------------
    FqElem fq_zero() const;
    FqElem fq_one() const;
    bool fq_is_zero(const FqElem& x) const;
    FqElem fq_add(const FqElem& x, const FqElem& y) const;
    FqElem fq_sub(const FqElem& x, const FqElem& y) const;
    FqElem fq_neg(const FqElem& x) const;
    FqElem fq_mul(const FqElem& x, const FqElem& y) const;
    FqElem fq_inv(const FqElem& x) const;
    std::uint64_t fq_encode(const FqElem& x) const;
    FqElem fq_decode(std::uint64_t v) const;
    FqElem fq_random(Rng& rng) const;

    // --- F_{q^t} elements -----------------------------------------------
    Elt zero() const;
    Elt one() const;
    Elt from_coeffs(const std::vector<FqElem>& coeffs) const;  // up to t coeffs
    Elt embed(const FqElem& x) const;
    Elt poly_basis(std::size_t i) const;  // y^i, i < t
    Elt from_string(const std::string& decimal) const;
    Elt from_uint(std::uint64_t value) const;
    Elt random(Rng& rng) const;

    bool same_as(const FieldTower& other) const;

    struct Impl;  // opaque; defined in fields.cpp

   private:
    friend class Elt;
    explicit FieldTower(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Element of F_{q^t}, stored as t F_q coefficients (a·t base-p digits,
/// little-endian at both levels). Value type; operators throw
/// ConstraintError on tower mismatch and on inversion of zero.
class Elt {
   public:
    Elt() = default;  // detached zero-like placeholder; unusable in arithmetic

    FieldTower tower() const { return FieldTower(impl_); }
    bool valid() const { return impl_ != nullptr; }
    bool is_zero() const;
    /// True when every coefficient above the constant one vanishes, i.e.
    /// the element lies in the subfield F_q.
    bool in_base_subfield() const;

    FqElem coeff(std::size_t i) const;  // i-th F_q coefficient, i < t
    std::vector<FqElem> coeffs() const;

    friend Elt operator+(const Elt& x, const Elt& y);
    friend Elt operator-(const Elt& x, const Elt& y);
    friend Elt operator*(const Elt& x, const Elt& y);
    friend Elt operator/(const Elt& x, const Elt& y);
    Elt operator-() const;
    Elt& operator+=(const Elt& y) { return *this = *this + y; }

    friend bool operator==(const Elt& x, const Elt& y);
    friend bool operator!=(const Elt& x, const Elt& y) { return !(x == y); }

    Elt inverse() const;
    Elt pow(std::uint64_t e) const;
    /// x^(q^i): i-fold application of the q-power map.
    Elt frobenius(std::uint64_t i) const;

    /// Decimal string of the integer encoding Σ_i enc(c_i)·q^i (arbitrary
    /// precision; this is the on-disk element format).
    std::string to_string() const;

   private:
    friend class FieldTower;
    Elt(std::shared_ptr<const FieldTower::Impl> impl, std::vector<std::uint32_t> digits)
        : impl_(std::move(impl)), d_(std::move(digits)) {}
    std::shared_ptr<const FieldTower::Impl> impl_;
    std::vector<std::uint32_t> d_;  // a*t digits
};

/// RANK(v): dimension over F_q of the span of the elements' coefficient
/// vectors. All elements must come from the same tower.
std::size_t rank_over_base(const std::vector<Elt>& v);

/// Dense matrix over F_{q^t}. `base_only` tags matrices whose entries are
/// constrained to lie in F_q (validated when set).
class Mat {
   public:
    Mat(std::size_t rows, std::size_t cols, const Elt& fill, bool base_only = false);
    static Mat from_rows(const std::vector<std::vector<Elt>>& rows, bool base_only = false);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool base_only() const { return base_only_; }

    const Elt& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Elt& v);

    std::vector<Elt> row(std::size_t r) const;
    std::vector<Elt> col(std::size_t c) const;
    Mat transposed() const;
    Mat select_columns(const std::vector<std::size_t>& cols) const;

   private:
    std::size_t rows_, cols_;
    bool base_only_;
    std::vector<Elt> e_;
};

/// Rank over F_{q^t} (exact Gaussian elimination).
std::size_t mat_rank(const Mat& m);

/// Any solution z of A·z = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Elt>> mat_solve(const Mat& a, const std::vector<Elt>& b);

}  // namespace ulrc

#endif
