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
#include <utility>
#include <vector>

#include "curvefam/poly.hpp"

namespace curvefam {

/// Dense univariate polynomial over a Field; c[k] is the coefficient of
/// x^k, with no trailing zeros.  Degree of the zero polynomial is -1.
struct UPoly {
    Field field;
    std::vector<FieldElem> c;

    UPoly() = default;
    explicit UPoly(Field f) : field(std::move(f)) {}
    UPoly(Field f, std::vector<FieldElem> coeffs);

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const FieldElem& lc() const { return c.back(); }

    void trim();
    FieldElem eval(const FieldElem& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    /// Remainder of *this by d (field division).
    UPoly rem(const UPoly& d) const;
    /// Exact quotient; throws on nonzero remainder.
    UPoly exact_div(const UPoly& d) const;
    /// Quotient and remainder by the linear factor (x - r).
    std::pair<UPoly, FieldElem> div_linear(const FieldElem& r) const;
    /// Coefficient-wise field conjugation.
    UPoly conjugated() const;
    bool rational_coeffs() const;
};

/// Monic gcd over the coefficient field.
UPoly upoly_gcd(UPoly a, UPoly b);

/// p with repeated roots removed (monic).
UPoly squarefree_part(const UPoly& p);

UPoly upoly_from(const MultiPoly& p, int var);
MultiPoly upoly_to(const UPoly& p, const Field& f, int nvars, int var);

struct RootRecord {
    FieldElem value;
    int multiplicity = 0;
};

/// Result of root isolation over the active field.  When the field is Q
/// and an irreducible quadratic factor remains, `extension_request`
/// names the smallest such minimal polynomial t^2 + b t + c instead of
/// erroring out.
struct RootResult {
    std::vector<RootRecord> roots;
    std::optional<std::pair<mpq_class, mpq_class>> extension_request;
};

/// All roots of p that lie in its coefficient field, with
/// multiplicities, smallest first.  Throws unsupported_field_error when
/// a root would need a cubic (or a second incompatible quadratic)
/// extension.
RootResult univariate_roots(const UPoly& p);

/// Same, for a MultiPoly in at most one effective variable.
RootResult univariate_roots(const MultiPoly& p);

namespace detail {

/// Thrown internally when root isolation over Q needs a quadratic
/// extension; callers that can restart over the extension catch it.
struct ExtensionNeeded {
    mpq_class b, c;
};

/// Roots only; converts an extension request into an ExtensionNeeded
/// throw for restart-style callers.
std::vector<RootRecord> roots_or_extend(const UPoly& p);

/// Positive divisors of n (|n| if negative), ascending.  Throws
/// unsupported_field_error when n resists factoring at desk scale.
std::vector<mpz_class> divisors(const mpz_class& n);

struct QFactorSplit {
    std::vector<mpq_class> rational_roots;
    std::vector<std::pair<mpq_class, mpq_class>> quadratics; // monic x^2 + B x + C
    bool has_hard_factor = false; // an irreducible factor of degree >= 3 remains
};

/// Factor a squarefree rational polynomial into rational roots,
/// irreducible monic quadratics, and a possible hard remainder.
QFactorSplit factor_squarefree_rational(const UPoly& p);

} // namespace detail

} // namespace curvefam
