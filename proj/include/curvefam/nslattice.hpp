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

#include <functional>
#include <string>
#include <vector>

#include "curvefam/field.hpp"

namespace curvefam {

/// Divisor class against a type-1 basis <e0, ..., er>; coefficients are
/// signed, so a curve of degree d with multiplicity m at p_i reads
/// (d, ..., -m, ...).
struct DivClass {
    std::vector<long long> c;

    DivClass() = default;
    explicit DivClass(std::vector<long long> coeffs) : c(std::move(coeffs)) {}
    static DivClass zero(int rank) { return DivClass(std::vector<long long>((size_t)rank, 0)); }
    static DivClass basis(int rank, int i);

    int rank() const { return (int)c.size(); }
    long long operator[](size_t i) const { return c[i]; }

    bool operator==(const DivClass& o) const { return c == o.c; }
    bool operator!=(const DivClass& o) const { return c != o.c; }
    bool operator<(const DivClass& o) const { return c < o.c; }
    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;

    /// Notation like "2e0-e1-e2" for reports and logs.
    std::string to_string() const;
};

enum class ChartKind { root, T, S };

/// A basepoint of a linear series, possibly infinitely near.  Root
/// points carry affine coordinates in one of the three standard plane
/// charts; chart-T points sit at (0, y) and chart-S points at (x, 0) on
/// the exceptional curve of the blowup at their parent.
struct Basepoint {
    int id = 0;          // 1..r
    FieldElem x, y;      // affine chart coordinates
    int parent = 0;      // 0 = root point
    ChartKind chart = ChartKind::root;
    int plane_chart = 0; // 0/1/2 for root points, -1 otherwise
    int mult = 1;        // multiplicity in the base locus
    bool is_real = true; // coordinates fixed by conjugation
};

/// Forest of basepoints ordered by id, parents before children, with the
/// conjugation pairing (identity on real points).
struct BasepointTree {
    Field field;
    std::vector<Basepoint> points;
    std::vector<int> conj; // conj[i] = partner id of point i+1 (1-based ids)

    int size() const { return (int)points.size(); }
    const Basepoint& at(int id) const { return points[(size_t)(id - 1)]; }
    std::vector<int> children(int id) const;
    bool is_descendant(int ancestor, int id) const;
    /// Ids along the path root -> ... -> id (inclusive).
    std::vector<int> path_from_root(int id) const;
    void validate() const;
};

/// Type-1 basis lattice with distinguished hyperplane and canonical
/// classes and the real-structure involution.
struct NSLattice {
    int rank = 0; // r + 1
    DivClass h, k;
    std::vector<int> sigma; // permutation of {0..r}, sigma[0] = 0
    BasepointTree tree;
};

/// Intersection product against diag(1, -1, ..., -1).
long long intersect(const DivClass& a, const DivClass& b);

/// Arithmetic genus (c^2 + c.k)/2 + 1; throws when the sum is odd.
long long genus(const DivClass& c, const DivClass& k);

/// Degree h.c of the image curves.
long long degree(const DivClass& c, const DivClass& h);

/// Involution on basis indices induced by conjugation of basepoints.
std::vector<int> involution_from_tree(const BasepointTree& tree);

DivClass apply_involution(const std::vector<int>& sigma, const DivClass& c);

/// Effective (-2)-classes of exceptional type: e_i - e_j for every
/// proper descendant p_j of p_i.
std::vector<DivClass> neg_curve_classes(const BasepointTree& tree);

/// Dimension of global sections for the three supported class shapes:
/// e_i; e_i - e_j; and c0 > 0 with c_i <= 0 (delegated to the linear
/// series callback).  Anything else raises unsupported_class_error.
long long h0(const DivClass& c, const NSLattice& lattice,
             const std::function<long long(const DivClass&)>& series_dim);

/// Shape tests used by h0 and the enumeration seeds.
bool is_single_exceptional(const DivClass& c, int* index = nullptr);
bool is_exceptional_difference(const DivClass& c, int* i = nullptr, int* j = nullptr);
bool is_curve_shape(const DivClass& c); // c0 > 0, c_i <= 0 for i > 0

} // namespace curvefam
