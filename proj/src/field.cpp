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

#include "curvefam/field.hpp"

#include <sstream>

namespace curvefam {

int cmp(const FieldElem& x, const FieldElem& y) {
    int c = ::cmp(x.a0, y.a0);
    if (c != 0)
        return c;
    return ::cmp(x.a1, y.a1);
}

bool rational_square_root(const mpq_class& q, mpq_class* root) {
    if (q < 0)
        return false;
    if (q == 0) {
        if (root)
            *root = 0;
        return true;
    }
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = mpq_class(rn) / mpq_class(rd);
    }
    return true;
}

Field Field::quadratic(const mpq_class& b, const mpq_class& c) {
    mpq_class disc = b * b - 4 * c;
    if (rational_square_root(disc, nullptr))
        throw unsupported_field_error("reducible minimal polynomial: t^2 + (" + b.get_str() +
                                      ")t + (" + c.get_str() + ")");
    return Field(Kind::quadratic, b, c);
}

FieldElem Field::generator() const {
    if (!is_quadratic())
        throw error("the rational field has no extension generator");
    return FieldElem(mpq_class(0), mpq_class(1));
}

void Field::check(const FieldElem& x) const {
    if (is_rationals() && x.a1 != 0)
        throw error("element with t-part used over the rational field");
}

FieldElem Field::add(const FieldElem& x, const FieldElem& y) const {
    return FieldElem(x.a0 + y.a0, x.a1 + y.a1);
}

FieldElem Field::sub(const FieldElem& x, const FieldElem& y) const {
    return FieldElem(x.a0 - y.a0, x.a1 - y.a1);
}

FieldElem Field::neg(const FieldElem& x) const { return FieldElem(-x.a0, -x.a1); }

FieldElem Field::mul(const FieldElem& x, const FieldElem& y) const {
    if (x.a1 == 0 && y.a1 == 0)
        return FieldElem(x.a0 * y.a0);
    check(x);
    check(y);
    // (x0 + x1 t)(y0 + y1 t) with t^2 = -b t - c
    mpq_class tt = x.a1 * y.a1;
    return FieldElem(x.a0 * y.a0 - c_ * tt, x.a0 * y.a1 + x.a1 * y.a0 - b_ * tt);
}

FieldElem Field::inv(const FieldElem& x) const {
    if (x.is_zero())
        throw error("division by zero");
    if (x.a1 == 0)
        return FieldElem(1 / x.a0);
    check(x);
    // 1/(a0 + a1 t) = conj(x) / norm(x); the norm is nonzero since the
    // minimal polynomial is irreducible.
    mpq_class n = norm(x);
    FieldElem cj = conjugate(x);
    return FieldElem(cj.a0 / n, cj.a1 / n);
}

FieldElem Field::div(const FieldElem& x, const FieldElem& y) const { return mul(x, inv(y)); }

FieldElem Field::conjugate(const FieldElem& x) const {
    if (x.a1 == 0)
        return x;
    check(x);
    // t -> -b - t
    return FieldElem(x.a0 - b_ * x.a1, -x.a1);
}

mpq_class Field::norm(const FieldElem& x) const {
    if (x.a1 == 0)
        return x.a0 * x.a0;
    // (a0 + a1 t)(a0 + a1 (-b - t)) = a0^2 - a0 a1 b + a1^2 c
    return x.a0 * x.a0 - x.a0 * x.a1 * b_ + x.a1 * x.a1 * c_;
}

std::optional<FieldElem> Field::sqrt(const FieldElem& x) const {
    check(x);
    if (x.is_zero())
        return FieldElem();
    auto canonical = [](FieldElem w) {
        // pick the representative with (a1, a0) lexicographically positive
        if (w.a1 < 0 || (w.a1 == 0 && w.a0 < 0))
            return FieldElem(-w.a0, -w.a1);
        return w;
    };
    if (is_rationals()) {
        mpq_class r;
        if (rational_square_root(x.a0, &r))
            return canonical(FieldElem(r));
        return std::nullopt;
    }
    // Solve (u + v t)^2 = x.  Expanding with t^2 = -b t - c:
    //   u^2 - c v^2 = x.a0,   2uv - b v^2 = x.a1.
    mpq_class r;
    if (x.a1 == 0 && rational_square_root(x.a0, &r))
        return canonical(FieldElem(r));
    // v != 0 branch: u = (x.a1 + b v^2) / (2v), which yields a quadratic
    // in z = v^2:  disc(minpoly) z^2 + (2 b x.a1 - 4 x.a0) z + x.a1^2 = 0.
    mpq_class A = discriminant();
    mpq_class B = 2 * b_ * x.a1 - 4 * x.a0;
    mpq_class C = x.a1 * x.a1;
    mpq_class zdisc = B * B - 4 * A * C;
    mpq_class zroot;
    if (!rational_square_root(zdisc, &zroot))
        return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        mpq_class z = (-B + (sign == 0 ? zroot : -zroot)) / (2 * A);
        mpq_class v;
        if (z <= 0 || !rational_square_root(z, &v))
            continue;
        for (int vs = 0; vs < 2; ++vs) {
            mpq_class vv = (vs == 0) ? v : mpq_class(-v);
            mpq_class u = (x.a1 + b_ * vv * vv) / (2 * vv);
            FieldElem w(u, vv);
            if (mul(w, w) == x)
                return canonical(w);
        }
    }
    return std::nullopt;
}

std::string Field::to_string(const FieldElem& x) const {
    if (x.a1 == 0)
        return x.a0.get_str();
    std::ostringstream out;
    bool wrote = false;
    if (x.a1 == 1)
        out << "t";
    else if (x.a1 == -1)
        out << "-t";
    else
        out << x.a1.get_str() << "*t";
    wrote = true;
    if (x.a0 != 0) {
        if (x.a0 > 0 && wrote)
            out << "+";
        out << x.a0.get_str();
    }
    return out.str();
}

} // namespace curvefam
