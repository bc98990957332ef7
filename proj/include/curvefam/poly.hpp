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

#include <map>
#include <string>
#include <vector>

#include "curvefam/field.hpp"

namespace curvefam {

/// Exponent tuple; length equals the ambient variable count.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic, descending, so the leading term comes first
/// when iterating a term map.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over a Field.  Terms with zero
/// coefficient are never stored; the term map is kept in descending
/// graded-lex order, which fixes all printed output.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, FieldElem, GradedLexGreater>;

    MultiPoly() : nvars_(0) {}
    MultiPoly(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

    static MultiPoly zero(const Field& f, int nvars) { return MultiPoly(f, nvars); }
    static MultiPoly constant(const Field& f, int nvars, const FieldElem& c);
    static MultiPoly variable(const Field& f, int nvars, int var);
    static MultiPoly monomial(const Field& f, Monomial m, const FieldElem& c);

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (also valid for the zero polynomial).
    FieldElem constant_value() const;
    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;
    FieldElem coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;
    const FieldElem& leading_coeff() const;

    void set_coeff(const Monomial& m, const FieldElem& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    /// Deterministic order for use in sets; compares term lists.
    bool operator<(const MultiPoly& o) const;

    MultiPoly scaled(const FieldElem& c) const;
    MultiPoly pow(unsigned e) const;

    /// Exact quotient; throws if the divisor does not divide exactly.
    MultiPoly exact_div(const MultiPoly& divisor) const;
    /// True exact division test without throwing; quotient via out param.
    bool try_exact_div(const MultiPoly& divisor, MultiPoly* quotient) const;

    MultiPoly derivative(int var) const;

    /// Full composition p(a_0, ..., a_{nvars-1}); assignment length must
    /// equal nvars, all entries over the same field with equal nvars.
    MultiPoly substitute(const std::vector<MultiPoly>& assignment) const;

    FieldElem eval(const std::vector<FieldElem>& point) const;

    /// Coefficient of var^k, as a polynomial in the remaining variables
    /// (same ambient nvars, with var-exponent zero).
    MultiPoly coeff_of_power(int var, int k) const;

    /// Largest k with var^k dividing the polynomial.
    int order_in(int var) const;

    /// Smallest total degree of a term (vanishing order at the origin).
    int min_total_degree() const;

    /// Re-tag over a quadratic extension (or the same field).  Only
    /// rational-valued coefficients can be promoted from Q.
    MultiPoly promoted(const Field& target) const;

    /// Canonical scalar normalization: leading coefficient scaled to 1,
    /// then the unique positive rational rescale making all coefficient
    /// components integers with overall content 1.
    MultiPoly normalized() const;

    std::string to_string() const;
    /// Grammar: + - * ^ and parentheses over variables x0..x{nvars-1}
    /// (and t when the field is quadratic); rational number literals.
    static MultiPoly parse(const std::string& text, const Field& f, int nvars);

  private:
    void check_compat(const MultiPoly& o) const;

    Field field_;
    int nvars_;
    TermMap terms_;
};

/// GCD over the coefficient field, canonically normalized.  gcd(0, q) = q.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

/// GCD of a list; at least one entry must be nonzero.
MultiPoly gcd_content(const std::vector<MultiPoly>& ps);

/// Sylvester resultant with respect to one variable, eliminated from the
/// result.  Both inputs must be nonzero.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

} // namespace curvefam
