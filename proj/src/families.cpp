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

#include "curvefam/families.hpp"

#include <algorithm>
#include <set>

namespace curvefam {

void RationalMap::validate() const {
    if (components.size() < 3)
        throw error("rational map needs at least three components");
    int nv = components[0].nvars();
    int deg = -1;
    for (const auto& c : components) {
        if (c.nvars() != nv || c.field() != field)
            throw error("rational map components disagree on variables or field");
        if (c.is_zero())
            continue;
        if (!c.is_homogeneous())
            throw error("rational map components must be homogeneous");
        if (deg == -1)
            deg = c.total_degree();
        else if (c.total_degree() != deg)
            throw error("rational map components must share one degree");
    }
    if (deg == -1)
        throw error("rational map has no nonzero component");
}

RationalMap RationalMap::reduced(Field field, std::vector<MultiPoly> components) {
    RationalMap m{std::move(field), std::move(components)};
    m.validate();
    MultiPoly g = gcd_content(m.components);
    if (!g.is_constant())
        for (auto& c : m.components)
            c = c.exact_div(g);
    return m;
}

LinearSeries series_of(const RationalMap& m) {
    m.validate();
    if (m.nvars() != 3)
        throw error("surface analysis expects a map from the projective plane");
    std::vector<MultiPoly> basis;
    for (const auto& c : m.components)
        if (!c.is_zero())
            basis.push_back(c);
    return LinearSeries{m.field, m.degree(), std::move(basis)};
}

void FamilyQuery::validate() const {
    if (alpha < 0)
        throw error("family query: alpha must be nonnegative");
    if (nu < 1)
        throw error("family query: nu must be at least 1");
    if (rho < 0)
        throw error("family query: rho must be nonnegative");
}

NSLattice lattice_from_locus(const BaseLocus& locus, long long map_degree) {
    locus.validate();
    NSLattice lat;
    lat.tree = locus;
    lat.rank = locus.size() + 1;
    lat.h = DivClass::zero(lat.rank);
    lat.h.c[0] = map_degree;
    for (int i = 1; i < lat.rank; ++i)
        lat.h.c[(size_t)i] = -locus.at(i).mult;
    lat.k = DivClass::zero(lat.rank);
    lat.k.c[0] = -3;
    for (int i = 1; i < lat.rank; ++i)
        lat.k.c[(size_t)i] = 1;
    lat.sigma = involution_from_tree(locus);
    if (apply_involution(lat.sigma, lat.h) != lat.h)
        throw error("involution does not fix the hyperplane class");
    return lat;
}

NSLattice analyze_surface(const RationalMap& m, int depth_cap) {
    BaseLocus locus = basepoint_analysis(series_of(m), depth_cap);
    return lattice_from_locus(locus, m.degree());
}

std::vector<DivClass> real_filter(const std::vector<DivClass>& classes,
                                  const std::vector<int>& sigma) {
    std::vector<DivClass> out;
    for (const auto& c : classes)
        if (apply_involution(sigma, c) == c)
            out.push_back(c);
    return out;
}

FamilySearch find_families_on_lattice(const NSLattice& lattice, const FamilyQuery& q,
                                      bool real_only, unsigned seed) {
    q.validate();
    FamilySearch result;
    result.lattice = lattice;
    result.query = q;
    const Field& field = lattice.tree.field;

    std::set<DivClass> all;
    for (long long beta = -2; beta <= q.nu + q.rho - 2; ++beta) {
        EnumQuery eq{lattice.h, q.alpha, beta};
        for (const auto& c : enumerate_classes(eq))
            all.insert(c);
    }
    if (real_only) {
        for (const auto& c : all) {
            if (apply_involution(lattice.sigma, c) == c)
                result.candidates.push_back(c);
            else
                result.filtered_non_real.push_back(c);
        }
    } else {
        result.candidates.assign(all.begin(), all.end());
    }

    for (const DivClass& c : result.candidates) {
        int ei = 0;
        if (is_single_exceptional(c, &ei)) {
            if (lattice.tree.at(ei).parent != 0) {
                result.rejected.push_back({c, "non-root-exceptional", std::nullopt, std::nullopt});
                continue;
            }
            if (q.nu != 1) {
                result.rejected.push_back({c, "wrong-dimension", std::nullopt, std::nullopt});
                continue;
            }
            if (genus(c, lattice.k) != q.rho) {
                result.rejected.push_back({c, "wrong-genus", std::nullopt, std::nullopt});
                continue;
            }
            FamilyReport rep;
            rep.cls = c;
            rep.degree = degree(c, lattice.h);
            rep.dimension = 0;
            rep.genus = genus(c, lattice.k);
            rep.series = std::nullopt;
            rep.reachable = false;
            result.accepted.push_back(std::move(rep));
            continue;
        }
        if (is_exceptional_difference(c)) {
            result.rejected.push_back({c, "contracted", std::nullopt, std::nullopt});
            continue;
        }
        if (degree(c, lattice.h) == 0) {
            // a curve of degree zero is contracted to a point of the
            // surface and spans no family
            result.rejected.push_back({c, "contracted", std::nullopt, std::nullopt});
            continue;
        }
        try {
            LinearSeries series = series_from_class(c, lattice.tree, field);
            if (series.h0() != q.nu) {
                result.rejected.push_back({c, "wrong-dimension", std::nullopt, std::nullopt});
                continue;
            }
            IrredVerdict verdict = is_irreducible(c, lattice, field, seed);
            if (!verdict.irreducible) {
                result.rejected.push_back({c, "reducible", std::nullopt, verdict.component});
                continue;
            }
            DivClass actual = actual_class(series, lattice.tree);
            if (actual != c) {
                result.rejected.push_back({c, "class-mismatch", actual, std::nullopt});
                continue;
            }
            FamilyReport rep;
            rep.cls = c;
            rep.degree = degree(c, lattice.h);
            rep.dimension = q.nu - 1;
            rep.genus = genus(c, lattice.k);
            rep.series = std::move(series);
            rep.reachable = true;
            result.accepted.push_back(std::move(rep));
        } catch (const unsupported_field_error&) {
            result.rejected.push_back({c, "unsupported", std::nullopt, std::nullopt});
        } catch (const unsupported_class_error&) {
            result.rejected.push_back({c, "unsupported", std::nullopt, std::nullopt});
        }
    }
    return result;
}

FamilySearch find_families(const RationalMap& m, const FamilyQuery& q, int depth_cap,
                           bool real_only, unsigned seed,
                           const std::optional<BaseLocus>& locus_override) {
    NSLattice lattice = locus_override ? lattice_from_locus(*locus_override, m.degree())
                                       : analyze_surface(m, depth_cap);
    return find_families_on_lattice(lattice, q, real_only, seed);
}

RationalMap inverse_stereographic(int n, const Field& field) {
    if (n < 1)
        throw error("inverse stereographic projection needs n >= 1");
    int nv = n + 1;
    MultiPoly y0 = MultiPoly::variable(field, nv, 0);
    MultiPoly delta = MultiPoly::zero(field, nv);
    for (int i = 1; i <= n; ++i) {
        MultiPoly yi = MultiPoly::variable(field, nv, i);
        delta = delta + yi * yi;
    }
    std::vector<MultiPoly> comps;
    comps.push_back(y0 * y0 + delta);
    MultiPoly two = MultiPoly::constant(field, nv, field.from_int(2));
    for (int i = 1; i <= n; ++i)
        comps.push_back(two * y0 * MultiPoly::variable(field, nv, i));
    comps.push_back(delta - y0 * y0);
    return RationalMap{field, std::move(comps)};
}

RationalMap compose_maps(const RationalMap& outer, const RationalMap& inner) {
    outer.validate();
    inner.validate();
    if (outer.nvars() != (int)inner.components.size())
        throw error("composition arity mismatch");
    if (outer.field != inner.field)
        throw error("composition field mismatch");
    std::vector<MultiPoly> comps;
    for (const auto& c : outer.components)
        comps.push_back(c.substitute(inner.components));
    bool all_zero = true;
    for (const auto& c : comps)
        if (!c.is_zero())
            all_zero = false;
    if (all_zero)
        throw error("zero map after composition");
    return RationalMap::reduced(outer.field, std::move(comps));
}

bool satisfies_sphere_identity(const RationalMap& m) {
    m.validate();
    int nv = (int)m.components.size();
    MultiPoly q = MultiPoly::zero(m.field, nv);
    for (int i = 0; i < nv; ++i) {
        MultiPoly xi = MultiPoly::variable(m.field, nv, i);
        q = (i == 0) ? q - xi * xi : q + xi * xi;
    }
    return q.substitute(m.components).is_zero();
}

FamilySearch find_circles(const RationalMap& m, long long nu, int depth_cap, unsigned seed,
                          const std::optional<BaseLocus>& locus_override) {
    m.validate();
    RationalMap sphere_map =
        satisfies_sphere_identity(m) ? m : compose_maps(inverse_stereographic(m.target_dim(), m.field), m);
    FamilyQuery q{2, nu, 0};
    return find_families(sphere_map, q, depth_cap, /*real_only=*/true, seed, locus_override);
}

CircleVerdict absolute_witness(const RationalMap& m, const MultiPoly& member) {
    m.validate();
    if (m.components.size() != 5)
        throw error("the Euclidean absolute test expects a map into P^4");
    if (member.is_zero() || member.nvars() != 3 || !member.is_homogeneous())
        throw error("the member curve must be a nonzero form in the plane");
    const MultiPoly& p = m.components[0];
    MultiPoly qsum = MultiPoly::zero(m.field, 3);
    for (size_t i = 1; i < m.components.size(); ++i)
        qsum = qsum + m.components[i] * m.components[i];
    if (!poly_gcd(member, p).is_constant() || !poly_gcd(member, qsum).is_constant())
        return CircleVerdict::inconclusive;
    PlanePointSet pts;
    try {
        pts = common_zeros_of_forms({member, p, qsum});
    } catch (const unsupported_field_error&) {
        return CircleVerdict::inconclusive;
    }
    if (pts.points.size() != 2)
        return CircleVerdict::not_circle;
    const Field& f = pts.field;
    const PlanePoint& a = pts.points[0];
    const PlanePoint& b = pts.points[1];
    bool a_real = (f.conjugate(a.x) == a.x) && (f.conjugate(a.y) == a.y);
    bool conjug = a.plane_chart == b.plane_chart && f.conjugate(a.x) == b.x &&
                  f.conjugate(a.y) == b.y;
    if (!a_real && conjug)
        return CircleVerdict::circle;
    return CircleVerdict::not_circle;
}

} // namespace curvefam
