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
#include <vector>

#include "curvefam/nslattice.hpp"
#include "curvefam/poly.hpp"

namespace curvefam {

/// A linear series of plane curves: a basis of homogeneous forms of one
/// degree in x0, x1, x2, linearly independent over the field.
struct LinearSeries {
    Field field;
    int degree = 0;
    std::vector<MultiPoly> basis;

    long long h0() const { return (long long)basis.size(); }
    long long dimension() const { return (long long)basis.size() - 1; }
};

/// Base locus: the basepoint tree with per-point multiplicities.
using BaseLocus = BasepointTree;

inline constexpr int kDefaultDepthCap = 8;

/// Basis of degree-c0 forms vanishing to multiplicity -c_i at each tree
/// point; conditions at infinitely near points act on the strict
/// transform in the recorded blowup chart, dividing by the exceptional
/// factor to the multiplicity prescribed at the parent.  An empty basis
/// is a valid result.
LinearSeries series_from_class(const DivClass& c, const BasepointTree& tree, const Field& field);

/// Convenience: h0 of a class on the given tree (0 for shapes that are
/// never effective).
long long series_dim_on_tree(const DivClass& c, const BasepointTree& tree, const Field& field);

/// Full basepoint analysis over all charts of the plane, recursing into
/// blowup charts up to depth_cap.  Extends Q by one quadratic extension
/// when the basepoints ask for it; the returned tree carries the field
/// actually used.
BaseLocus basepoint_analysis(const LinearSeries& s, int depth_cap = kDefaultDepthCap);

/// Class of the series against a host tree: degree e0 minus the computed
/// multiplicity of the series at every host point.
DivClass actual_class(const LinearSeries& s, const BasepointTree& host,
                      int depth_cap = kDefaultDepthCap);

struct IrredVerdict {
    bool irreducible = true;
    std::string reason;                  // empty | fixed-component | decomposition
    std::optional<DivClass> component;   // certified fixed part, when found
    std::optional<DivClass> complement;  // decomposition partner
    std::optional<MultiPoly> witness;    // explicit reducible member or factor
};

/// Tiered reducibility test: intersection against effective negative
/// classes, fixed components detected through series dimensions over
/// bounded decompositions, and the dimension count of split members.
IrredVerdict is_irreducible(const DivClass& c, const NSLattice& lattice, const Field& field,
                            unsigned seed = 0);

/// The member with the given coordinates against the series basis.
MultiPoly member_at(const LinearSeries& s, const std::vector<FieldElem>& coeffs);

struct PlanePoint {
    FieldElem x, y;
    int plane_chart = 0;
};

struct PlanePointSet {
    Field field; // field the coordinates live in (possibly extended)
    std::vector<PlanePoint> points;
};

/// Common zeros in the plane of a form system with constant gcd,
/// extending Q by one quadratic extension when needed.
PlanePointSet common_zeros_of_forms(const std::vector<MultiPoly>& forms);

namespace planechart {

/// Dehomogenize a form in x0,x1,x2 to the affine chart where coordinate
/// `chart` equals one; result is bivariate in the remaining coordinates,
/// in their cyclic order (chart 0 -> (x1,x2), 1 -> (x0,x2), 2 -> (x0,x1)).
MultiPoly dehomogenize(const MultiPoly& form, int chart);

/// Shift of a bivariate polynomial by (a, b).
MultiPoly translate(const MultiPoly& p, const FieldElem& a, const FieldElem& b);

} // namespace planechart

} // namespace curvefam
