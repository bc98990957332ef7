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

#include "curvefam/classenum.hpp"
#include "curvefam/linser.hpp"

namespace curvefam {

/// A rational map given by homogeneous components of one degree sharing
/// no common factor.  Domain is P^(nvars-1), target P^(#components-1).
struct RationalMap {
    Field field;
    std::vector<MultiPoly> components;

    int nvars() const { return components.empty() ? 0 : components[0].nvars(); }
    int target_dim() const { return (int)components.size() - 1; }
    int degree() const { return components.empty() ? -1 : components[0].total_degree(); }

    void validate() const;
    /// Divides out the common factor of the components.
    static RationalMap reduced(Field field, std::vector<MultiPoly> components);
};

/// The linear series spanned by the map components.
LinearSeries series_of(const RationalMap& m);

/// Degree/dimension/genus targets: families of degree alpha, projective
/// dimension nu-1 and genus rho.
struct FamilyQuery {
    long long alpha = 0;
    long long nu = 1;
    long long rho = 0;

    void validate() const;
};

/// A certified complete family: class, numeric attributes, the
/// generating series when the family is reached by the parametrization.
struct FamilyReport {
    DivClass cls;
    long long degree = 0;
    long long dimension = 0;
    long long genus = 0;
    std::optional<LinearSeries> series;
    bool reachable = true;
};

struct Rejection {
    DivClass cls;
    std::string reason; // wrong-dimension | reducible | class-mismatch |
                        // unsupported | contracted | non-root-exceptional | wrong-genus
    std::optional<DivClass> actual;    // recomputed class on class-mismatch
    std::optional<DivClass> component; // certified fixed part on reducible
};

/// Full record of one family search.
struct FamilySearch {
    NSLattice lattice;
    FamilyQuery query;
    std::vector<DivClass> candidates;
    std::vector<DivClass> filtered_non_real; // removed by the real filter
    std::vector<FamilyReport> accepted;
    std::vector<Rejection> rejected;
};

/// Basepoint analysis of the map and assembly of the lattice data:
/// h from the base locus multiplicities, k = (-3,1,...,1), sigma from
/// conjugation.
NSLattice analyze_surface(const RationalMap& m, int depth_cap = kDefaultDepthCap);

/// Lattice from an externally supplied base locus (analysis bypass).
NSLattice lattice_from_locus(const BaseLocus& locus, long long map_degree);

/// End-to-end family search: enumerate candidate classes for beta from
/// -2 to nu+rho-2, then certify each by series dimension, irreducibility
/// and recomputed class.  Exceptional classes at root basepoints are
/// reported as unreachable 0-dimensional families.
FamilySearch find_families(const RationalMap& m, const FamilyQuery& q,
                           int depth_cap = kDefaultDepthCap, bool real_only = false,
                           unsigned seed = 0,
                           const std::optional<BaseLocus>& locus_override = std::nullopt);

/// Certification loop against an already-computed lattice.
FamilySearch find_families_on_lattice(const NSLattice& lattice, const FamilyQuery& q,
                                      bool real_only = false, unsigned seed = 0);

/// Subset of classes fixed by the involution.
std::vector<DivClass> real_filter(const std::vector<DivClass>& classes,
                                  const std::vector<int>& sigma);

/// Inverse stereographic projection P^n -> S^n in P^(n+1):
/// (y0:...:yn) -> (y0^2+D : 2y0y1 : ... : 2y0yn : -y0^2+D), D = y1^2+...+yn^2.
RationalMap inverse_stereographic(int n, const Field& field);

/// Substitution of inner into outer followed by cancellation of the
/// common factor of the components.
RationalMap compose_maps(const RationalMap& outer, const RationalMap& inner);

/// Whether the map lands on the Moebius sphere -x0^2+x1^2+...+xn^2 = 0.
bool satisfies_sphere_identity(const RationalMap& m);

/// The circle search: compose with the inverse stereographic projection
/// (unless the map already satisfies the sphere identity), then look for
/// conic families with sigma-fixed classes.
FamilySearch find_circles(const RationalMap& m, long long nu = 1,
                          int depth_cap = kDefaultDepthCap, unsigned seed = 0,
                          const std::optional<BaseLocus>& locus_override = std::nullopt);

enum class CircleVerdict { circle, not_circle, inconclusive };

/// Euclidean-absolute witness for a map into P^4: pulls back the
/// absolute {x0 = 0, x1^2+..+x4^2 = 0}, intersects with the member curve
/// and counts solutions.  Two conjugate intersection points certify a
/// circle.
CircleVerdict absolute_witness(const RationalMap& m, const MultiPoly& member);

} // namespace curvefam
