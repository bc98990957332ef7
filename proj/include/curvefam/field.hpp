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

#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "curvefam/errors.hpp"

namespace curvefam {

/// Element a0 + a1*t of the coefficient field.  For the rational field
/// a1 is identically zero.  GMP keeps both rationals canonical (lowest
/// terms, positive denominator).
struct FieldElem {
    mpq_class a0;
    mpq_class a1;

    FieldElem() : a0(0), a1(0) {}
    FieldElem(mpq_class r) : a0(std::move(r)), a1(0) {}
    FieldElem(mpq_class r, mpq_class s) : a0(std::move(r)), a1(std::move(s)) {}

    bool is_zero() const { return a0 == 0 && a1 == 0; }
    bool is_rational() const { return a1 == 0; }

    bool operator==(const FieldElem& o) const { return a0 == o.a0 && a1 == o.a1; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
};

/// Deterministic total order on elements, lexicographic on (a0, a1).
/// Used only to fix output orderings, it has no algebraic meaning.
int cmp(const FieldElem& x, const FieldElem& y);

/// The coefficient domain: Q, or Q[t]/(t^2 + b t + c) with the minimal
/// polynomial irreducible over Q.
class Field {
  public:
    enum class Kind { rationals, quadratic };

    Field() : kind_(Kind::rationals), b_(0), c_(0) {}

    static Field rationals() { return Field(); }

    /// Quadratic extension by t^2 + b t + c.  Throws unless b^2 - 4c is
    /// not a rational square.
    static Field quadratic(const mpq_class& b, const mpq_class& c);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_quadratic() const { return kind_ == Kind::quadratic; }
    const mpq_class& minpoly_b() const { return b_; }
    const mpq_class& minpoly_c() const { return c_; }
    /// Discriminant b^2 - 4c of the minimal polynomial (0 for Q).
    mpq_class discriminant() const { return b_ * b_ - 4 * c_; }

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && b_ == o.b_ && c_ == o.c_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElem zero() const { return FieldElem(); }
    FieldElem one() const { return FieldElem(mpq_class(1)); }
    FieldElem from_int(long v) const { return FieldElem(mpq_class(v)); }
    FieldElem from_rational(const mpq_class& v) const { return FieldElem(v); }
    /// The extension generator t.  Throws on the rational field.
    FieldElem generator() const;

    /// Checks that an element is valid in this field (a1 = 0 over Q).
    void check(const FieldElem& x) const;

    FieldElem add(const FieldElem& x, const FieldElem& y) const;
    FieldElem sub(const FieldElem& x, const FieldElem& y) const;
    FieldElem neg(const FieldElem& x) const;
    FieldElem mul(const FieldElem& x, const FieldElem& y) const;
    /// Multiplicative inverse via the minimal polynomial.  Throws on zero.
    FieldElem inv(const FieldElem& x) const;
    FieldElem div(const FieldElem& x, const FieldElem& y) const;

    /// The nontrivial field automorphism a0 + a1 t -> a0 + a1 (-b - t),
    /// the identity on Q.  Realizes coordinate conjugation.
    FieldElem conjugate(const FieldElem& x) const;

    /// Norm x * conjugate(x), always rational.
    mpq_class norm(const FieldElem& x) const;

    /// A square root in this field if one exists, with a deterministic
    /// sign choice.
    std::optional<FieldElem> sqrt(const FieldElem& x) const;

    /// Render as a polynomial in t, e.g. "t-1", "-1/2", "2*t".
    std::string to_string(const FieldElem& x) const;

  private:
    Field(Kind k, mpq_class b, mpq_class c) : kind_(k), b_(std::move(b)), c_(std::move(c)) {}

    Kind kind_;
    mpq_class b_, c_; // minpoly t^2 + b t + c when quadratic
};

/// True when q is the square of a rational; the root is returned
/// through `root` if non-null.
bool rational_square_root(const mpq_class& q, mpq_class* root);

} // namespace curvefam
