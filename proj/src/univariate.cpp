/*
   Copyright 2026 The curvefam authors

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

#include "curvefam/univariate.hpp"

#include <algorithm>

namespace curvefam {

UPoly::UPoly(Field f, std::vector<FieldElem> coeffs) : field(std::move(f)), c(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

FieldElem UPoly::eval(const FieldElem& x) const {
    FieldElem acc = field.zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = field.add(field.mul(acc, x), *it);
    return acc;
}

UPoly UPoly::derivative() const {
    UPoly d(field);
    for (size_t k = 1; k < c.size(); ++k)
        d.c.push_back(field.mul(c[k], field.from_int((long)k)));
    d.trim();
    return d;
}

UPoly UPoly::monic() const {
    if (is_zero())
        return *this;
    UPoly m(field);
    FieldElem s = field.inv(lc());
    for (const auto& x : c)
        m.c.push_back(field.mul(x, s));
    return m;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero())
        return UPoly(field);
    UPoly r(field);
    r.c.assign(c.size() + o.c.size() - 1, field.zero());
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] = field.add(r.c[i + j], field.mul(c[i], o.c[j]));
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r(field);
    r.c.assign(std::max(c.size(), o.c.size()), field.zero());
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i)
        r.c[i] = field.sub(r.c[i], o.c[i]);
    r.trim();
    return r;
}

UPoly UPoly::rem(const UPoly& d) const {
    if (d.is_zero())
        throw error("division by the zero polynomial");
    UPoly r = *this;
    FieldElem inv_lc = field.inv(d.lc());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        FieldElem q = field.mul(r.lc(), inv_lc);
        int shift = r.degree() - d.degree();
        for (int k = 0; k <= d.degree(); ++k)
            r.c[(size_t)(k + shift)] =
                field.sub(r.c[(size_t)(k + shift)], field.mul(q, d.c[(size_t)k]));
        r.trim();
    }
    return r;
}

UPoly UPoly::exact_div(const UPoly& d) const {
    if (d.is_zero())
        throw error("division by the zero polynomial");
    UPoly r = *this;
    UPoly q(field);
    if (degree() >= d.degree())
        q.c.assign((size_t)(degree() - d.degree() + 1), field.zero());
    FieldElem inv_lc = field.inv(d.lc());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        FieldElem qc = field.mul(r.lc(), inv_lc);
        int shift = r.degree() - d.degree();
        q.c[(size_t)shift] = qc;
        for (int k = 0; k <= d.degree(); ++k)
            r.c[(size_t)(k + shift)] =
                field.sub(r.c[(size_t)(k + shift)], field.mul(qc, d.c[(size_t)k]));
        r.trim();
    }
    if (!r.is_zero())
        throw error("exact_div: nonzero remainder");
    q.trim();
    return q;
}

std::pair<UPoly, FieldElem> UPoly::div_linear(const FieldElem& r) const {
    // synthetic division by (x - r)
    UPoly q(field);
    if (degree() < 1)
        return {q, is_zero() ? field.zero() : c[0]};
    q.c.assign(c.size() - 1, field.zero());
    FieldElem carry = field.zero();
    for (size_t k = c.size(); k-- > 1;) {
        carry = field.add(c[k], field.mul(carry, r));
        q.c[k - 1] = carry;
    }
    FieldElem remainder = field.add(c[0], field.mul(carry, r));
    q.trim();
    return {q, remainder};
}

UPoly UPoly::conjugated() const {
    UPoly r(field);
    for (const auto& x : c)
        r.c.push_back(field.conjugate(x));
    return r;
}

bool UPoly::rational_coeffs() const {
    for (const auto& x : c)
        if (x.a1 != 0)
            return false;
    return true;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 1)
        return p.monic();
    UPoly g = upoly_gcd(p, p.derivative());
    if (g.degree() <= 0)
        return p.monic();
    return p.exact_div(g).monic();
}

UPoly upoly_from(const MultiPoly& p, int var) {
    UPoly u(p.field());
    int d = p.degree_in(var);
    if (p.is_zero())
        return u;
    u.c.assign((size_t)std::max(d + 1, 1), p.field().zero());
    for (const auto& [m, coef] : p.terms()) {
        for (size_t i = 0; i < m.size(); ++i)
            if ((int)i != var && m[i] != 0)
                throw error("polynomial is not univariate in the requested variable");
        u.c[m[(size_t)var]] = coef;
    }
    u.trim();
    return u;
}

MultiPoly upoly_to(const UPoly& p, const Field& f, int nvars, int var) {
    MultiPoly r(f, nvars);
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (p.c[k].is_zero())
            continue;
        Monomial m(nvars, 0);
        m[(size_t)var] = (unsigned)k;
        r.set_coeff(m, p.c[k]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// rational factoring helpers

namespace detail {

std::vector<mpz_class> divisors(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m == 0)
        throw error("divisors of zero requested");
    // trial division; large unfactored cofactors must be prime
    std::vector<std::pair<mpz_class, int>> primes;
    mpz_class rest = m;
    for (mpz_class p = 2; p * p <= rest && p < 1000000; p == 2 ? p = 3 : p += 2) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            primes.push_back({p, e});
        }
    }
    if (rest > 1) {
        if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0)
            throw unsupported_field_error("coefficient too large to factor: " + rest.get_str());
        primes.push_back({rest, 1});
    }
    std::vector<mpz_class> divs = {1};
    for (const auto& [p, e] : primes) {
        size_t count = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// integer primitive model of a rational-coefficient UPoly
std::vector<mpz_class> primitive_integer(const UPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& x : p.c)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.a0.get_den().get_mpz_t());
    std::vector<mpz_class> v;
    mpz_class g = 0;
    for (const auto& x : p.c) {
        mpz_class n = x.a0.get_num() * (den_lcm / x.a0.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        v.push_back(n);
    }
    for (auto& n : v)
        n /= g;
    return v;
}

mpz_class eval_int(const std::vector<mpz_class>& p, long x) {
    mpz_class acc = 0;
    for (size_t k = p.size(); k-- > 0;)
        acc = acc * x + p[k];
    return acc;
}

bool is_root_int(const std::vector<mpz_class>& p, const mpq_class& r) {
    // evaluate by Horner over Q
    mpq_class acc = 0;
    for (size_t k = p.size(); k-- > 0;)
        acc = acc * r + p[k];
    return acc == 0;
}

// exact division of integer-coefficient polynomials over Q; returns the
// rational-coefficient quotient coefficients or nullopt
std::optional<std::vector<mpq_class>> divide_rational(const std::vector<mpq_class>& num,
                                                      const std::vector<mpq_class>& den) {
    std::vector<mpq_class> r = num;
    auto deg = [](const std::vector<mpq_class>& v) {
        int d = (int)v.size() - 1;
        while (d >= 0 && v[(size_t)d] == 0)
            --d;
        return d;
    };
    int dd = deg(den);
    if (dd < 0)
        return std::nullopt;
    int dn = deg(r);
    if (dn < dd)
        return std::nullopt;
    std::vector<mpq_class> q((size_t)(dn - dd + 1), mpq_class(0));
    while (true) {
        int dr = deg(r);
        if (dr < dd)
            break;
        mpq_class f = r[(size_t)dr] / den[(size_t)dd];
        q[(size_t)(dr - dd)] = f;
        for (int k = 0; k <= dd; ++k)
            r[(size_t)(dr - dd + k)] -= f * den[(size_t)k];
    }
    for (const auto& x : r)
        if (x != 0)
            return std::nullopt;
    return q;
}

// one quadratic factor of an integer primitive polynomial with no
// rational roots, by divisor interpolation through x = -1, 0, 1
std::optional<std::vector<mpq_class>> kronecker_quadratic(const std::vector<mpz_class>& p) {
    mpz_class p0 = eval_int(p, 0), p1 = eval_int(p, 1), pm1 = eval_int(p, -1);
    std::vector<mpz_class> d0 = divisors(p0), d1 = divisors(p1), dm1 = divisors(pm1);
    const mpz_class& lead = p.back();
    std::vector<mpq_class> pq(p.begin(), p.end());
    for (const mpz_class& a0 : d0)
        for (int s0 = 0; s0 < 2; ++s0)
            for (const mpz_class& a1 : d1)
                for (int s1 = 0; s1 < 2; ++s1)
                    for (const mpz_class& am : dm1)
                        for (int sm = 0; sm < 2; ++sm) {
                            mpz_class v0 = s0 ? -a0 : a0;
                            mpz_class v1 = s1 ? -a1 : a1;
                            mpz_class vm = sm ? -am : am;
                            mpz_class two_g2 = v1 + vm - 2 * v0;
                            mpz_class two_g1 = v1 - vm;
                            if (two_g2 % 2 != 0 || two_g1 % 2 != 0)
                                continue;
                            mpz_class g2 = two_g2 / 2, g1 = two_g1 / 2;
                            if (g2 == 0 || lead % g2 != 0)
                                continue;
                            std::vector<mpq_class> g = {mpq_class(v0), mpq_class(g1),
                                                        mpq_class(g2)};
                            if (auto q = divide_rational(pq, g))
                                return g;
                        }
    return std::nullopt;
}

} // namespace

QFactorSplit factor_squarefree_rational(const UPoly& p) {
    QFactorSplit out;
    if (p.degree() <= 0)
        return out;
    std::vector<mpz_class> ip = primitive_integer(p);
    // roots at zero
    while (ip[0] == 0) {
        out.rational_roots.push_back(mpq_class(0));
        ip.erase(ip.begin());
    }
    if (ip.size() <= 1)
        return out;
    // rational root candidates from the original constant/leading pair
    std::vector<mpz_class> dn = divisors(ip.front());
    std::vector<mpz_class> dl = divisors(ip.back());
    for (const mpz_class& num : dn) {
        for (const mpz_class& den : dl) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1)
                continue; // only lowest-terms candidates
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class r = mpq_class(sign ? -num : num, den);
                r.canonicalize();
                if (!is_root_int(ip, r))
                    continue;
                out.rational_roots.push_back(r);
                // divide out (den*x - sign*num)
                std::vector<mpq_class> q(ip.begin(), ip.end());
                auto quot = divide_rational(q, {-r, mpq_class(1)});
                std::vector<mpq_class> qq = *quot;
                UPoly tmp(Field::rationals());
                for (const auto& x : qq)
                    tmp.c.push_back(FieldElem(x));
                tmp.trim();
                ip = primitive_integer(tmp);
            }
        }
    }
    // remaining part has no rational roots; peel quadratic factors
    while (ip.size() - 1 >= 2) {
        if (ip.size() - 1 == 2) {
            mpq_class B = mpq_class(ip[1]) / mpq_class(ip[2]);
            mpq_class C = mpq_class(ip[0]) / mpq_class(ip[2]);
            out.quadratics.push_back({B, C});
            return out;
        }
        auto g = kronecker_quadratic(ip);
        if (!g) {
            out.has_hard_factor = true;
            return out;
        }
        mpq_class B = (*g)[1] / (*g)[2];
        mpq_class C = (*g)[0] / (*g)[2];
        out.quadratics.push_back({B, C});
        std::vector<mpq_class> pq(ip.begin(), ip.end());
        auto q = divide_rational(pq, *g);
        UPoly tmp(Field::rationals());
        for (const auto& x : *q)
            tmp.c.push_back(FieldElem(x));
        tmp.trim();
        if (tmp.degree() <= 0)
            return out;
        ip = primitive_integer(tmp);
        if (ip.size() - 1 == 1) {
            // should not happen for squarefree input without rational roots
            out.has_hard_factor = true;
            return out;
        }
    }
    return out;
}

std::vector<RootRecord> roots_or_extend(const UPoly& p) {
    RootResult r = univariate_roots(p);
    if (r.extension_request)
        throw ExtensionNeeded{r.extension_request->first, r.extension_request->second};
    return std::move(r.roots);
}

} // namespace detail

// ---------------------------------------------------------------------------
// root isolation over the active field

namespace {

// roots in the quadratic field F of monic x^2 + B x + C with B, C in F
std::vector<FieldElem> quadratic_roots_in_field(const Field& f, const FieldElem& B,
                                                const FieldElem& C) {
    FieldElem disc = f.sub(f.mul(B, B), f.mul(f.from_int(4), C));
    auto s = f.sqrt(disc);
    if (!s)
        return {};
    FieldElem half = f.from_rational(mpq_class(1, 2));
    FieldElem r1 = f.mul(f.sub(s.value(), B), half);
    FieldElem r2 = f.mul(f.sub(f.neg(s.value()), B), half);
    if (r1 == r2)
        return {r1};
    return {r1, r2};
}

int multiplicity_of_root(const UPoly& p, const FieldElem& r) {
    int m = 0;
    UPoly q = p;
    while (true) {
        auto [quot, rem] = q.div_linear(r);
        if (!rem.is_zero())
            break;
        ++m;
        q = quot;
        if (q.is_zero())
            break;
    }
    return m;
}

} // namespace

RootResult univariate_roots(const UPoly& p) {
    if (p.is_zero())
        throw error("roots of the zero polynomial");
    RootResult out;
    if (p.degree() == 0)
        return out;
    const Field& f = p.field;
    UPoly s = squarefree_part(p);

    std::vector<FieldElem> found;
    std::vector<std::pair<mpq_class, mpq_class>> pending_quadratics;
    bool hard = false;

    if (f.is_rationals() || s.rational_coeffs()) {
        UPoly srat(Field::rationals());
        for (const auto& x : s.c)
            srat.c.push_back(FieldElem(x.a0));
        detail::QFactorSplit split = detail::factor_squarefree_rational(srat);
        hard = split.has_hard_factor;
        for (const mpq_class& r : split.rational_roots)
            found.push_back(f.from_rational(r));
        for (const auto& [B, C] : split.quadratics) {
            if (f.is_quadratic()) {
                auto rr = quadratic_roots_in_field(f, f.from_rational(B), f.from_rational(C));
                if (rr.empty())
                    throw unsupported_field_error(
                        "root needs a second quadratic extension: t^2+(" + B.get_str() + ")t+(" +
                        C.get_str() + ")");
                for (const auto& x : rr)
                    found.push_back(x);
            } else {
                pending_quadratics.push_back({B, C});
            }
        }
    } else {
        // genuine extension coefficients: candidates from the rational
        // norm s * conj(s)
        if (s.degree() == 1) {
            found.push_back(f.neg(f.div(s.c[0], s.c[1])));
        } else if (s.degree() == 2) {
            UPoly m = s.monic();
            auto rr = quadratic_roots_in_field(f, m.c[1], m.c[0]);
            for (const auto& x : rr)
                found.push_back(x);
            if (rr.empty())
                hard = true;
        } else {
            UPoly norm = s * s.conjugated();
            UPoly nrat(Field::rationals());
            for (const auto& x : norm.c) {
                if (x.a1 != 0)
                    throw error("norm polynomial not rational"); // unreachable
                nrat.c.push_back(FieldElem(x.a0));
            }
            nrat.trim();
            detail::QFactorSplit split = detail::factor_squarefree_rational(squarefree_part(nrat));
            hard = split.has_hard_factor;
            std::vector<FieldElem> candidates;
            for (const mpq_class& r : split.rational_roots)
                candidates.push_back(f.from_rational(r));
            for (const auto& [B, C] : split.quadratics)
                for (const auto& x :
                     quadratic_roots_in_field(f, f.from_rational(B), f.from_rational(C)))
                    candidates.push_back(x);
            for (const auto& x : candidates)
                if (s.eval(x).is_zero())
                    found.push_back(x);
            // roots of s not among the candidates would lie outside F
            UPoly rest = s;
            for (const auto& x : found) {
                auto [q, rem] = rest.div_linear(x);
                if (rem.is_zero())
                    rest = q;
            }
            if (rest.degree() >= 1)
                hard = true;
        }
    }

    if (hard)
        throw unsupported_field_error("univariate factor outside Q and one quadratic extension");
    if (!pending_quadratics.empty()) {
        std::sort(pending_quadratics.begin(), pending_quadratics.end());
        out.extension_request = pending_quadratics.front();
    }

    std::sort(found.begin(), found.end(),
              [](const FieldElem& a, const FieldElem& b) { return cmp(a, b) < 0; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const auto& r : found)
        out.roots.push_back({r, multiplicity_of_root(p, r)});
    return out;
}

RootResult univariate_roots(const MultiPoly& p) {
    if (p.is_zero())
        throw error("roots of the zero polynomial");
    int var = -1;
    for (int v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) > 0) {
            if (var != -1)
                throw error("polynomial is not univariate");
            var = v;
        }
    }
    if (var == -1)
        return RootResult{}; // nonzero constant
    return univariate_roots(upoly_from(p, var));
}

} // namespace curvefam
