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

#include "ulrc/fields.hpp"

#include <algorithm>
#include <cstddef>

namespace ulrc {

namespace {

constexpr std::uint64_t kEnumerationCap = 1ULL << 22;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- arithmetic mod p -------------------------------------------------

std::uint32_t padd(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(x) + y;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t psub(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    return x >= y ? x - y : std::uint32_t(x + std::uint64_t(p) - y);
}

std::uint32_t pmul(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    return std::uint32_t((std::uint64_t(x) * y) % p);
}

std::uint32_t pinv(std::uint32_t x, std::uint32_t p) {
    if (x == 0) throw ConstraintError("inversion of zero");
    std::int64_t r0 = p, r1 = x, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    std::int64_t inv = s0 % std::int64_t(p);
    if (inv < 0) inv += p;
    return std::uint32_t(inv);
}

// ---- polynomials over F_p (little-endian digit vectors) ----------------

using PPoly = std::vector<std::uint32_t>;

int pp_deg(const PPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return int(i);
    return -1;
}

// rem of f mod d (d nonzero), in place arithmetic mod p
PPoly pp_rem(PPoly f, const PPoly& d, std::uint32_t p) {
    int dd = pp_deg(d);
    std::uint32_t lead_inv = pinv(d[std::size_t(dd)], p);
    for (int i = pp_deg(f); i >= dd; i = pp_deg(f)) {
        std::uint32_t c = pmul(f[std::size_t(i)], lead_inv, p);
        for (int j = 0; j <= dd; ++j)
            f[std::size_t(i - dd + j)] = psub(f[std::size_t(i - dd + j)], pmul(c, d[std::size_t(j)], p), p);
    }
    return f;
}

bool pp_is_zero(const PPoly& f) { return pp_deg(f) < 0; }

// exhaustive trial division by every monic polynomial of degree 1..m/2
bool pp_irreducible(const PPoly& f, std::uint32_t p, std::uint64_t& budget) {
    int m = pp_deg(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    for (int d = 1; 2 * d <= m; ++d) {
        PPoly div(std::size_t(d) + 1, 0);
        div[std::size_t(d)] = 1;
        while (true) {
            if (budget-- == 0) throw CapError("irreducibility trial-division budget exceeded");
            if (pp_is_zero(pp_rem(f, div, p))) return false;
            // next divisor: odometer over the d free coefficients
            int pos = 0;
            while (pos < d && ++div[std::size_t(pos)] == p) div[std::size_t(pos++)] = 0;
            if (pos == d) break;
        }
    }
    return true;
}

// lexicographically least monic irreducible of degree m over F_p; tuples are
// compared constant-term-first, so c_0 varies slowest.
PPoly pp_least_irreducible(std::uint32_t p, std::uint32_t m, std::uint64_t& budget) {
    PPoly f(std::size_t(m) + 1, 0);
    f[m] = 1;
    if (m >= 2) f[0] = 1;  // constant term 0 would be divisible by x
    while (true) {
        if (budget-- == 0) throw CapError("modulus search budget exceeded");
        if (pp_irreducible(f, p, budget)) return f;
        int pos = int(m) - 1;  // last tuple position varies fastest
        while (pos >= 0 && ++f[std::size_t(pos)] == p) f[std::size_t(pos--)] = 0;
        if (pos < 0) throw Error("no irreducible polynomial found");  // impossible
    }
}

}  // namespace

// ---- tower implementation ----------------------------------------------

struct FieldTower::Impl {
    std::uint32_t p, a, t;
    PPoly g;                   // a+1 digits, monic
    std::vector<FqElem> h;     // t+1 F_q coefficients, monic

    // F_q arithmetic (digit vectors of size a, reduced mod g)
    FqElem qzero() const { return FqElem(a, 0); }
    FqElem qone() const {
        FqElem e(a, 0);
        e[0] = 1 % p;
        return e;
    }
    bool qis_zero(const FqElem& x) const {
        for (auto d : x)
            if (d != 0) return false;
        return true;
    }
    FqElem qadd(const FqElem& x, const FqElem& y) const {
        FqElem r(a);
        for (std::size_t i = 0; i < a; ++i) r[i] = padd(x[i], y[i], p);
        return r;
    }
    FqElem qsub(const FqElem& x, const FqElem& y) const {
        FqElem r(a);
        for (std::size_t i = 0; i < a; ++i) r[i] = psub(x[i], y[i], p);
        return r;
    }
    FqElem qneg(const FqElem& x) const {
        FqElem r(a);
        for (std::size_t i = 0; i < a; ++i) r[i] = psub(0, x[i], p);
        return r;
    }
    FqElem qmul(const FqElem& x, const FqElem& y) const {
        PPoly prod(2 * std::size_t(a) - 1, 0);
        for (std::size_t i = 0; i < a; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < a; ++j)
                prod[i + j] = padd(prod[i + j], pmul(x[i], y[j], p), p);
        }
        PPoly rem = pp_rem(std::move(prod), g, p);
        rem.resize(a, 0);
        return rem;
    }
    FqElem qinv(const FqElem& x) const {
        if (qis_zero(x)) throw ConstraintError("inversion of zero");
        // extended Euclid over F_p[x] against g
        PPoly r0 = g, r1 = x, s0 = qzero(), s1 = qone();
        s0.resize(2 * a + 2, 0);
        s1.resize(2 * a + 2, 0);
        r1.resize(g.size(), 0);
        while (!pp_is_zero(r1)) {
            // r0 = q*r1 + r2
            PPoly q(r0.size(), 0), r2 = r0;
            int d1 = pp_deg(r1);
            std::uint32_t li = pinv(r1[std::size_t(d1)], p);
            for (int i = pp_deg(r2); i >= d1; i = pp_deg(r2)) {
                std::uint32_t c = pmul(r2[std::size_t(i)], li, p);
                q[std::size_t(i - d1)] = c;
                for (int j = 0; j <= d1; ++j)
                    r2[std::size_t(i - d1 + j)] =
                        psub(r2[std::size_t(i - d1 + j)], pmul(c, r1[std::size_t(j)], p), p);
            }
            // s2 = s0 - q*s1
            PPoly s2 = s0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j + i < s2.size() && j < s1.size(); ++j)
                    s2[i + j] = psub(s2[i + j], pmul(q[i], s1[j], p), p);
            }
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
        }
        // r0 = gcd (a nonzero constant since g is irreducible and x ≠ 0)
        if (pp_deg(r0) != 0) throw Error("modulus not irreducible");
        std::uint32_t c = pinv(r0[0], p);
        FqElem inv(a, 0);
        for (std::size_t i = 0; i < a && i < s0.size(); ++i) inv[i] = pmul(s0[i], c, p);
        return inv;
    }

    // polynomials over F_q (coefficient vectors), used for h reduction
    int hp_deg(const std::vector<FqElem>& f) const {
        for (std::size_t i = f.size(); i-- > 0;)
            if (!qis_zero(f[i])) return int(i);
        return -1;
    }
    std::vector<FqElem> hp_rem(std::vector<FqElem> f, const std::vector<FqElem>& d) const {
        int dd = hp_deg(d);
        FqElem li = qinv(d[std::size_t(dd)]);
        for (int i = hp_deg(f); i >= dd; i = hp_deg(f)) {
            FqElem c = qmul(f[std::size_t(i)], li);
            for (int j = 0; j <= dd; ++j)
                f[std::size_t(i - dd + j)] =
                    qsub(f[std::size_t(i - dd + j)], qmul(c, d[std::size_t(j)]));
        }
        return f;
    }
    bool hp_irreducible(const std::vector<FqElem>& f, std::uint64_t& budget) const {
        int m = hp_deg(f);
        if (m <= 0) return false;
        if (m == 1) return true;
        for (int d = 1; 2 * d <= m; ++d) {
            std::vector<FqElem> div(std::size_t(d) + 1, qzero());
            div[std::size_t(d)] = qone();
            while (true) {
                if (budget-- == 0) throw CapError("irreducibility trial-division budget exceeded");
                if (hp_deg(hp_rem(f, div)) < 0) return false;
                int pos = 0;  // advance coefficient c_pos as an integer, then carry
                while (pos < d && !next_fq(div[std::size_t(pos)])) {
                    div[std::size_t(pos)] = qzero();
                    ++pos;
                }
                if (pos == d) break;
            }
        }
        return true;
    }
    // increments a coefficient through F_q in integer-encoding order;
    // returns false on wraparound
    bool next_fq(FqElem& x) const {
        for (std::size_t i = 0; i < a; ++i) {
            if (++x[i] < p) return true;
            x[i] = 0;
        }
        return false;
    }
    std::vector<FqElem> least_irreducible_h(std::uint64_t& budget) const {
        std::vector<FqElem> f(std::size_t(t) + 1, qzero());
        f[t] = qone();
        if (t >= 2) f[0] = qone();
        while (true) {
            if (budget-- == 0) throw CapError("modulus search budget exceeded");
            if (hp_irreducible(f, budget)) return f;
            int pos = int(t) - 1;
            while (pos >= 0 && !next_fq(f[std::size_t(pos)])) {
                f[std::size_t(pos)] = qzero();
                --pos;
            }
            if (pos < 0) throw Error("no irreducible polynomial found");  // impossible
        }
    }

    // element digit layout: coefficient i of F_q occupies digits [i*a, (i+1)*a)
    std::vector<FqElem> unflatten(const std::vector<std::uint32_t>& d) const {
        std::vector<FqElem> c(t);
        for (std::size_t i = 0; i < t; ++i)
            c[i] = FqElem(d.begin() + long(i * a), d.begin() + long((i + 1) * a));
        return c;
    }
    std::vector<std::uint32_t> flatten(const std::vector<FqElem>& c) const {
        std::vector<std::uint32_t> d(std::size_t(a) * t, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < a; ++j) d[i * a + j] = c[i][j];
        return d;
    }

    std::vector<std::uint32_t> emul(const std::vector<std::uint32_t>& x,
                                    const std::vector<std::uint32_t>& y) const {
        auto cx = unflatten(x), cy = unflatten(y);
        std::vector<FqElem> prod(2 * std::size_t(t) - 1, qzero());
        for (std::size_t i = 0; i < t; ++i) {
            if (qis_zero(cx[i])) continue;
            for (std::size_t j = 0; j < t; ++j)
                prod[i + j] = qadd(prod[i + j], qmul(cx[i], cy[j]));
        }
        auto rem = hp_rem(std::move(prod), h);
        rem.resize(t, qzero());
        return flatten(rem);
    }

    std::vector<std::uint32_t> einv(const std::vector<std::uint32_t>& x) const {
        auto cx = unflatten(x);
        if (hp_deg(cx) < 0) throw ConstraintError("inversion of zero");
        std::vector<FqElem> r0 = h, r1 = cx;
        std::vector<FqElem> s0(2 * std::size_t(t) + 2, qzero()), s1 = s0;
        s1[0] = qone();
        r1.resize(h.size(), qzero());
        while (hp_deg(r1) >= 0) {
            std::vector<FqElem> q(r0.size(), qzero()), r2 = r0;
            int d1 = hp_deg(r1);
            FqElem li = qinv(r1[std::size_t(d1)]);
            for (int i = hp_deg(r2); i >= d1; i = hp_deg(r2)) {
                FqElem c = qmul(r2[std::size_t(i)], li);
                q[std::size_t(i - d1)] = c;
                for (int j = 0; j <= d1; ++j)
                    r2[std::size_t(i - d1 + j)] =
                        qsub(r2[std::size_t(i - d1 + j)], qmul(c, r1[std::size_t(j)]));
            }
            std::vector<FqElem> s2 = s0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (qis_zero(q[i])) continue;
                for (std::size_t j = 0; j + i < s2.size() && j < s1.size(); ++j)
                    s2[i + j] = qsub(s2[i + j], qmul(q[i], s1[j]));
            }
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
        }
        if (hp_deg(r0) != 0) throw Error("modulus not irreducible");
        FqElem c = qinv(r0[0]);
        std::vector<FqElem> inv(t, qzero());
        for (std::size_t i = 0; i < t && i < s0.size(); ++i) inv[i] = qmul(s0[i], c);
        return flatten(inv);
    }
};

namespace {

void check_fq_digits(const FqElem& x, std::uint32_t p, std::uint32_t a, const char* what) {
    if (x.size() != a) throw ConstraintError(std::string(what) + ": wrong coefficient length");
    for (auto d : x)
        if (d >= p) throw ConstraintError(std::string(what) + ": digit out of range");
}

std::shared_ptr<const FieldTower::Impl> make_impl(std::uint32_t p, std::uint32_t a, std::uint32_t t,
                                                  std::optional<FqElem> g_opt,
                                                  std::optional<std::vector<FqElem>> h_opt) {
    if (!is_prime(p)) throw ConstraintError("p must be prime");
    if (p > (1u << 16)) throw ConstraintError("p exceeds the desk-scale guard (p <= 2^16)");
    if (a < 1 || t < 1) throw ConstraintError("extension degrees must be at least 1");
    if (std::uint64_t(a) * t > 64) throw ConstraintError("a*t exceeds the desk-scale guard (64)");

    auto impl = std::make_shared<FieldTower::Impl>();
    impl->p = p;
    impl->a = a;
    impl->t = t;
    std::uint64_t budget = kEnumerationCap;
    if (g_opt) {
        PPoly g = *g_opt;
        if (g.size() != std::size_t(a) + 1 || g[a] != 1)
            throw ConstraintError("g must be monic of degree a");
        for (auto d : g)
            if (d >= p) throw ConstraintError("g digit out of range");
        if (!pp_irreducible(g, p, budget)) throw ConstraintError("g is not irreducible over F_p");
        impl->g = std::move(g);
    } else {
        impl->g = pp_least_irreducible(p, a, budget);
    }
    if (h_opt) {
        std::vector<FqElem> h = *h_opt;
        if (h.size() != std::size_t(t) + 1) throw ConstraintError("h must have degree t");
        for (const auto& c : h) check_fq_digits(c, p, a, "h coefficient");
        if (!(h[t] == impl->qone())) throw ConstraintError("h must be monic");
        if (!impl->hp_irreducible(h, budget)) throw ConstraintError("h is not irreducible over F_q");
        impl->h = std::move(h);
    } else {
        impl->h = impl->least_irreducible_h(budget);
    }
    return impl;
}

}  // namespace

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t a, std::uint32_t t) {
    return FieldTower(make_impl(p, a, t, std::nullopt, std::nullopt));
}

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t a, std::uint32_t t, FqElem g,
                             std::vector<FqElem> h) {
    return FieldTower(make_impl(p, a, t, std::move(g), std::move(h)));
}

std::uint32_t FieldTower::characteristic() const { return impl_->p; }
std::uint32_t FieldTower::base_degree() const { return impl_->a; }
std::uint32_t FieldTower::top_degree() const { return impl_->t; }

std::uint64_t FieldTower::q() const {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < impl_->a; ++i) {
        if (v > (1ULL << 63) / impl_->p) throw CapError("q does not fit the integer guard");
        v *= impl_->p;
    }
    return v;
}

const FqElem& FieldTower::base_modulus() const { return impl_->g; }
const std::vector<FqElem>& FieldTower::top_modulus() const { return impl_->h; }

FqElem FieldTower::fq_zero() const { return impl_->qzero(); }
FqElem FieldTower::fq_one() const { return impl_->qone(); }
bool FieldTower::fq_is_zero(const FqElem& x) const { return impl_->qis_zero(x); }
FqElem FieldTower::fq_add(const FqElem& x, const FqElem& y) const { return impl_->qadd(x, y); }
FqElem FieldTower::fq_sub(const FqElem& x, const FqElem& y) const { return impl_->qsub(x, y); }
FqElem FieldTower::fq_neg(const FqElem& x) const { return impl_->qneg(x); }
FqElem FieldTower::fq_mul(const FqElem& x, const FqElem& y) const { return impl_->qmul(x, y); }
FqElem FieldTower::fq_inv(const FqElem& x) const { return impl_->qinv(x); }

std::uint64_t FieldTower::fq_encode(const FqElem& x) const {
    check_fq_digits(x, impl_->p, impl_->a, "element");
    std::uint64_t v = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
        if (v > ((1ULL << 63) - x[i]) / impl_->p) throw CapError("encoding does not fit the integer guard");
        v = v * impl_->p + x[i];
    }
    return v;
}

FqElem FieldTower::fq_decode(std::uint64_t v) const {
    FqElem x(impl_->a, 0);
    for (std::size_t i = 0; i < impl_->a; ++i) {
        x[i] = std::uint32_t(v % impl_->p);
        v /= impl_->p;
    }
    if (v != 0) throw ConstraintError("encoding out of range for F_q");
    return x;
}

FqElem FieldTower::fq_random(Rng& rng) const {
    FqElem x(impl_->a);
    for (auto& d : x) d = std::uint32_t(rng.below(impl_->p));
    return x;
}

Elt FieldTower::zero() const {
    return Elt(impl_, std::vector<std::uint32_t>(std::size_t(impl_->a) * impl_->t, 0));
}

Elt FieldTower::one() const {
    auto d = std::vector<std::uint32_t>(std::size_t(impl_->a) * impl_->t, 0);
    d[0] = 1 % impl_->p;
    return Elt(impl_, std::move(d));
}

Elt FieldTower::from_coeffs(const std::vector<FqElem>& coeffs) const {
    if (coeffs.size() > impl_->t) throw ConstraintError("too many coefficients");
    std::vector<FqElem> c(coeffs);
    for (const auto& x : c) check_fq_digits(x, impl_->p, impl_->a, "coefficient");
    c.resize(impl_->t, impl_->qzero());
    return Elt(impl_, impl_->flatten(c));
}

Elt FieldTower::embed(const FqElem& x) const { return from_coeffs({x}); }

Elt FieldTower::poly_basis(std::size_t i) const {
    if (i >= impl_->t) throw ConstraintError("polynomial basis index out of range");
    std::vector<std::uint32_t> d(std::size_t(impl_->a) * impl_->t, 0);
    d[i * impl_->a] = 1 % impl_->p;
    return Elt(impl_, std::move(d));
}

Elt FieldTower::from_string(const std::string& decimal) const {
    if (decimal.empty()) throw ParseError("empty element string");
    std::vector<std::uint32_t> d(std::size_t(impl_->a) * impl_->t, 0);
    for (char ch : decimal) {
        if (ch < '0' || ch > '9') throw ParseError("bad character in element string");
        std::uint64_t carry = std::uint64_t(ch - '0');
        for (auto& digit : d) {
            std::uint64_t cur = std::uint64_t(digit) * 10 + carry;
            digit = std::uint32_t(cur % impl_->p);
            carry = cur / impl_->p;
        }
        if (carry != 0) throw ParseError("element encoding out of range for the tower");
    }
    return Elt(impl_, std::move(d));
}

Elt FieldTower::from_uint(std::uint64_t value) const {
    std::vector<std::uint32_t> d(std::size_t(impl_->a) * impl_->t, 0);
    for (auto& digit : d) {
        digit = std::uint32_t(value % impl_->p);
        value /= impl_->p;
    }
    if (value != 0) throw ConstraintError("element encoding out of range for the tower");
    return Elt(impl_, std::move(d));
}

Elt FieldTower::random(Rng& rng) const {
    std::vector<std::uint32_t> d(std::size_t(impl_->a) * impl_->t);
    for (auto& digit : d) digit = std::uint32_t(rng.below(impl_->p));
    return Elt(impl_, std::move(d));
}

bool FieldTower::same_as(const FieldTower& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->a == other.impl_->a && impl_->t == other.impl_->t &&
           impl_->g == other.impl_->g && impl_->h == other.impl_->h;
}

// ---- Elt ----------------------------------------------------------------

namespace {

const FieldTower::Impl& need(const std::shared_ptr<const FieldTower::Impl>& impl) {
    if (!impl) throw ConstraintError("element without a tower");
    return *impl;
}

bool impl_same(const FieldTower::Impl& x, const FieldTower::Impl& y) {
    if (&x == &y) return true;
    return x.p == y.p && x.a == y.a && x.t == y.t && x.g == y.g && x.h == y.h;
}

const FieldTower::Impl& common(const std::shared_ptr<const FieldTower::Impl>& x,
                               const std::shared_ptr<const FieldTower::Impl>& y, const char* op) {
    const auto& a = need(x);
    const auto& b = need(y);
    if (!impl_same(a, b)) throw ConstraintError(std::string("mixed towers in ") + op);
    return a;
}

}  // namespace

bool Elt::is_zero() const {
    need(impl_);
    for (auto d : d_)
        if (d != 0) return false;
    return true;
}

bool Elt::in_base_subfield() const {
    const auto& tw = need(impl_);
    for (std::size_t i = tw.a; i < d_.size(); ++i)
        if (d_[i] != 0) return false;
    return true;
}

FqElem Elt::coeff(std::size_t i) const {
    const auto& tw = need(impl_);
    if (i >= tw.t) throw ConstraintError("coefficient index out of range");
    return FqElem(d_.begin() + long(i * tw.a), d_.begin() + long((i + 1) * tw.a));
}

std::vector<FqElem> Elt::coeffs() const { return need(impl_).unflatten(d_); }

Elt operator+(const Elt& x, const Elt& y) {
    const auto& tw = common(x.impl_, y.impl_, "addition");
    std::vector<std::uint32_t> d(x.d_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = padd(x.d_[i], y.d_[i], tw.p);
    return Elt(x.impl_, std::move(d));
}

Elt operator-(const Elt& x, const Elt& y) {
    const auto& tw = common(x.impl_, y.impl_, "subtraction");
    std::vector<std::uint32_t> d(x.d_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = psub(x.d_[i], y.d_[i], tw.p);
    return Elt(x.impl_, std::move(d));
}

Elt Elt::operator-() const {
    const auto& tw = need(impl_);
    std::vector<std::uint32_t> d(d_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = psub(0, d_[i], tw.p);
    return Elt(impl_, std::move(d));
}

Elt operator*(const Elt& x, const Elt& y) {
    const auto& tw = common(x.impl_, y.impl_, "multiplication");
    return Elt(x.impl_, tw.emul(x.d_, y.d_));
}

Elt operator/(const Elt& x, const Elt& y) { return x * y.inverse(); }

bool operator==(const Elt& x, const Elt& y) {
    common(x.impl_, y.impl_, "comparison");
    return x.d_ == y.d_;
}

Elt Elt::inverse() const {
    const auto& tw = need(impl_);
    return Elt(impl_, tw.einv(d_));
}

Elt Elt::pow(std::uint64_t e) const {
    need(impl_);
    Elt base = *this;
    Elt acc = tower().one();
    while (e != 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Elt Elt::frobenius(std::uint64_t i) const {
    const auto& tw = need(impl_);
    Elt r = *this;
    // one application of x -> x^q per step, itself a applications of x -> x^p
    for (std::uint64_t s = 0; s < i * tw.a; ++s) r = r.pow(tw.p);
    return r;
}

std::string Elt::to_string() const {
    const auto& tw = need(impl_);
    // value = sum of d_[m] * p^m; repeated division by 10, most significant first
    std::vector<std::uint32_t> d = d_;
    std::string out;
    bool nonzero = true;
    while (nonzero) {
        nonzero = false;
        std::uint64_t rem = 0;
        for (std::size_t m = d.size(); m-- > 0;) {
            std::uint64_t cur = rem * tw.p + d[m];
            d[m] = std::uint32_t(cur / 10);
            if (d[m] != 0) nonzero = true;
            rem = cur % 10;
        }
        out.push_back(char('0' + rem));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// ---- rank over the base field -------------------------------------------

std::size_t rank_over_base(const std::vector<Elt>& v) {
    if (v.empty()) return 0;
    FieldTower tw = v.front().tower();
    for (const auto& e : v)
        if (!e.tower().same_as(tw)) throw ConstraintError("mixed towers in rank_over_base");
    const std::size_t t = tw.top_degree();
    std::vector<std::vector<FqElem>> rows;
    rows.reserve(v.size());
    for (const auto& e : v) rows.push_back(e.coeffs());

    std::size_t rank = 0;
    for (std::size_t col = 0; col < t && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && tw.fq_is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        FqElem inv = tw.fq_inv(rows[rank][col]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (tw.fq_is_zero(rows[r][col])) continue;
            FqElem f = tw.fq_mul(rows[r][col], inv);
            for (std::size_t c = col; c < t; ++c)
                rows[r][c] = tw.fq_sub(rows[r][c], tw.fq_mul(f, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

// ---- Mat ------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols, const Elt& fill, bool base_only)
    : rows_(rows), cols_(cols), base_only_(base_only), e_(rows * cols, fill) {
    if (rows * cols > 0 && !fill.valid()) throw ConstraintError("matrix fill without a tower");
    if (base_only && rows * cols > 0 && !fill.in_base_subfield())
        throw ConstraintError("base-tagged matrix with entry outside F_q");
}

Mat Mat::from_rows(const std::vector<std::vector<Elt>>& rows, bool base_only) {
    if (rows.empty() || rows.front().empty()) throw ConstraintError("empty matrix");
    std::size_t cols = rows.front().size();
    Mat m(rows.size(), cols, rows.front().front(), false);
    m.base_only_ = base_only;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ConstraintError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

const Elt& Mat::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ConstraintError("matrix index out of range");
    return e_[r * cols_ + c];
}

void Mat::set(std::size_t r, std::size_t c, const Elt& v) {
    if (r >= rows_ || c >= cols_) throw ConstraintError("matrix index out of range");
    if (!v.tower().same_as(e_.front().tower())) throw ConstraintError("mixed towers in matrix");
    if (base_only_ && !v.in_base_subfield())
        throw ConstraintError("base-tagged matrix with entry outside F_q");
    e_[r * cols_ + c] = v;
}

std::vector<Elt> Mat::row(std::size_t r) const {
    std::vector<Elt> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

std::vector<Elt> Mat::col(std::size_t c) const {
    std::vector<Elt> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

Mat Mat::transposed() const {
    Mat m(cols_, rows_, e_.front(), base_only_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.e_[c * rows_ + r] = at(r, c);
    return m;
}

Mat Mat::select_columns(const std::vector<std::size_t>& cols) const {
    if (cols.empty()) throw ConstraintError("empty column selection");
    Mat m(rows_, cols.size(), e_.front(), base_only_);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw ConstraintError("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) m.e_[r * cols.size() + j] = at(r, cols[j]);
    }
    return m;
}

std::size_t mat_rank(const Mat& m) {
    std::vector<std::vector<Elt>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Elt inv = rows[rank][col].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Elt f = rows[r][col] * inv;
            for (std::size_t c = col; c < m.cols(); ++c)
                rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Elt>> mat_solve(const Mat& a, const std::vector<Elt>& b) {
    if (b.size() != a.rows()) throw ConstraintError("dimension mismatch in mat_solve");
    const std::size_t n = a.cols();
    FieldTower tw = a.at(0, 0).tower();
    std::vector<std::vector<Elt>> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        if (!b[r].tower().same_as(tw)) throw ConstraintError("mixed towers in mat_solve");
        row.push_back(b[r]);
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Elt inv = rows[rank][col].inverse();
        for (std::size_t c = col; c <= n; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Elt f = rows[r][col];
            for (std::size_t c = col; c <= n; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][n].is_zero()) return std::nullopt;
    std::vector<Elt> z(n, tw.zero());
    for (std::size_t r = 0; r < rank; ++r) z[pivot_col[r]] = rows[r][n];
    return z;
}

}  // namespace ulrc
