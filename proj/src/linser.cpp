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

#include "curvefam/linser.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "curvefam/univariate.hpp"

namespace curvefam {

namespace planechart {

MultiPoly dehomogenize(const MultiPoly& form, int chart) {
    if (form.nvars() != 3)
        throw error("dehomogenize expects a form in three variables");
    const Field& f = form.field();
    MultiPoly one = MultiPoly::constant(f, 2, f.one());
    MultiPoly u = MultiPoly::variable(f, 2, 0);
    MultiPoly v = MultiPoly::variable(f, 2, 1);
    switch (chart) {
    case 0:
        return form.substitute({one, u, v});
    case 1:
        return form.substitute({u, one, v});
    case 2:
        return form.substitute({u, v, one});
    default:
        throw error("plane chart index out of range");
    }
}

MultiPoly translate(const MultiPoly& p, const FieldElem& a, const FieldElem& b) {
    const Field& f = p.field();
    MultiPoly u = MultiPoly::variable(f, 2, 0) + MultiPoly::constant(f, 2, a);
    MultiPoly v = MultiPoly::variable(f, 2, 1) + MultiPoly::constant(f, 2, b);
    return p.substitute({u, v});
}

} // namespace planechart

namespace {

using planechart::dehomogenize;
using planechart::translate;

MultiPoly divide_by_var_power(const MultiPoly& p, int var, int m) {
    if (m == 0)
        return p;
    MultiPoly r(p.field(), p.nvars());
    for (const auto& [mono, coef] : p.terms()) {
        if ((int)mono[(size_t)var] < m)
            throw error("strict transform: exceptional factor does not divide");
        Monomial n = mono;
        n[(size_t)var] -= (unsigned)m;
        r.set_coeff(n, coef);
    }
    return r;
}

MultiPoly blowup_chart(const MultiPoly& p, ChartKind chart) {
    const Field& f = p.field();
    MultiPoly u = MultiPoly::variable(f, 2, 0);
    MultiPoly v = MultiPoly::variable(f, 2, 1);
    if (chart == ChartKind::T)
        return p.substitute({u, u * v}); // exceptional curve u = 0
    return p.substitute({u * v, v});     // exceptional curve v = 0
}

int exceptional_var(ChartKind chart) { return chart == ChartKind::T ? 0 : 1; }

// ---------------------------------------------------------------------
// exact linear algebra over the coefficient field

// reduced row echelon form; returns pivot columns
std::vector<int> rref(std::vector<std::vector<FieldElem>>& m, const Field& f) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[r]);
        FieldElem inv = f.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j)
            m[r][j] = f.mul(m[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            FieldElem factor = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<FieldElem>> nullspace(std::vector<std::vector<FieldElem>> m, size_t cols,
                                              const Field& f) {
    std::vector<int> pivots = rref(m, f);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[(size_t)c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<FieldElem> v(cols, f.zero());
        v[c] = f.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[(size_t)pivots[r]] = f.neg(m[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m((size_t)nvars, 0);
    // enumerate recursively, then sort graded-lex descending
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            m[(size_t)var] = (unsigned)left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[(size_t)var] = (unsigned)e;
            rec(var + 1, left - e);
        }
        m[(size_t)var] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GradedLexGreater());
    return out;
}

// canonical basis: reduced row echelon against the degree-d monomial
// list, each row normalized
std::vector<MultiPoly> canonical_basis(std::vector<MultiPoly> basis, int degree, const Field& f) {
    if (basis.empty())
        return basis;
    std::vector<Monomial> monos = monomials_of_degree(3, degree);
    std::vector<std::vector<FieldElem>> m;
    for (const auto& b : basis) {
        std::vector<FieldElem> row;
        for (const auto& mono : monos)
            row.push_back(b.coeff(mono));
        m.push_back(std::move(row));
    }
    rref(m, f);
    std::vector<MultiPoly> out;
    for (const auto& row : m) {
        MultiPoly p(f, 3);
        for (size_t j = 0; j < monos.size(); ++j)
            p.set_coeff(monos[j], row[j]);
        if (!p.is_zero())
            out.push_back(p.normalized());
    }
    return out;
}

// local polynomial of a form at a tree node, using the multiplicities
// prescribed by `c` for the strict transforms along the path
MultiPoly localize_prescribed(const MultiPoly& form, const BasepointTree& tree, const DivClass& c,
                              int node_id) {
    std::vector<int> path = tree.path_from_root(node_id);
    const Basepoint& root = tree.at(path[0]);
    MultiPoly local = translate(dehomogenize(form, root.plane_chart), root.x, root.y);
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        const Basepoint& child = tree.at(path[k + 1]);
        int m_parent = (int)std::max<long long>(0, -c.c[(size_t)path[k]]);
        local = divide_by_var_power(blowup_chart(local, child.chart), exceptional_var(child.chart),
                                    m_parent);
        local = translate(local, child.x, child.y);
    }
    return local;
}

} // namespace

LinearSeries series_from_class(const DivClass& c, const BasepointTree& tree, const Field& field) {
    if (!is_curve_shape(c))
        throw unsupported_class_error("series_from_class needs c0 > 0, c_i <= 0, got " +
                                      c.to_string());
    if (c.rank() != tree.size() + 1)
        throw error("class rank does not match the basepoint tree");
    int d = (int)c.c[0];
    std::vector<Monomial> monos = monomials_of_degree(3, d);
    std::vector<MultiPoly> basis;
    for (const auto& m : monos)
        basis.push_back(MultiPoly::monomial(field, m, field.one()));

    for (int id = 1; id <= tree.size(); ++id) {
        int m_req = (int)std::max<long long>(0, -c.c[(size_t)id]);
        if (m_req == 0 || basis.empty())
            continue;
        std::vector<MultiPoly> locals;
        for (const auto& b : basis)
            locals.push_back(localize_prescribed(b, tree, c, id));
        std::vector<std::vector<FieldElem>> rows;
        for (int i = 0; i < m_req; ++i) {
            for (int j = 0; i + j < m_req; ++j) {
                Monomial mono = {(unsigned)i, (unsigned)j};
                std::vector<FieldElem> row;
                for (const auto& l : locals)
                    row.push_back(l.coeff(mono));
                rows.push_back(std::move(row));
            }
        }
        auto ns = nullspace(std::move(rows), basis.size(), field);
        std::vector<MultiPoly> next;
        for (const auto& v : ns) {
            MultiPoly p = MultiPoly::zero(field, 3);
            for (size_t col = 0; col < basis.size(); ++col)
                if (!v[col].is_zero())
                    p = p + basis[col].scaled(v[col]);
            next.push_back(std::move(p));
        }
        basis = std::move(next);
    }
    return LinearSeries{field, d, canonical_basis(std::move(basis), d, field)};
}

long long series_dim_on_tree(const DivClass& c, const BasepointTree& tree, const Field& field) {
    int i = 0, j = 0;
    if (is_single_exceptional(c, &i))
        return 1;
    if (is_exceptional_difference(c, &i, &j))
        return tree.is_descendant(i, j) ? 1 : 0;
    if (is_curve_shape(c))
        return series_from_class(c, tree, field).h0();
    return 0;
}

// ---------------------------------------------------------------------------
// basepoint analysis

namespace {

struct WorkPoint {
    FieldElem x, y;
    int plane_chart = 0;
};

// deterministic ordering key: plane chart, then y, then x (matches the
// usual listing of the worked examples)
bool point_less(const WorkPoint& a, const WorkPoint& b) {
    if (a.plane_chart != b.plane_chart)
        return a.plane_chart < b.plane_chart;
    int c = cmp(a.y, b.y);
    if (c != 0)
        return c < 0;
    return cmp(a.x, b.x) < 0;
}

// common zeros in one affine chart of a system of bivariate polynomials
// with constant overall gcd
std::vector<std::pair<FieldElem, FieldElem>>
bivariate_common_zeros(const std::vector<MultiPoly>& members_in, const Field& f) {
    std::vector<MultiPoly> members;
    for (const auto& m : members_in)
        if (!m.is_zero())
            members.push_back(m);
    if (members.empty())
        throw error("common zeros of the zero system");
    for (const auto& m : members)
        if (m.is_constant())
            return {}; // a unit member: empty base locus in this chart

    // an eliminating polynomial A with at least one coprime partner
    MultiPoly A(f, 2);
    std::vector<MultiPoly> partners;
    for (size_t i = 0; i < members.size() && partners.empty(); ++i) {
        for (size_t j = 0; j < members.size(); ++j) {
            if (i == j)
                continue;
            if (poly_gcd(members[i], members[j]).is_constant())
                partners.push_back(members[j]);
        }
        if (!partners.empty())
            A = members[i];
    }
    for (long trial = 1; trial <= 20 && partners.empty(); ++trial) {
        MultiPoly ca = MultiPoly::zero(f, 2), cb = MultiPoly::zero(f, 2);
        FieldElem wa = f.one(), wb = f.one();
        for (size_t k = 0; k < members.size(); ++k) {
            ca = ca + members[k].scaled(wa);
            cb = cb + members[k].scaled(wb);
            wa = f.mul(wa, f.from_int(trial));
            wb = f.mul(wb, f.from_int(trial + 1));
        }
        if (!ca.is_zero() && !cb.is_zero() && poly_gcd(ca, cb).is_constant()) {
            A = ca;
            partners.push_back(cb);
        }
    }
    if (partners.empty())
        throw error("could not isolate the base locus: no coprime pair in the system");

    // candidate abscissas: every common zero annihilates the resultant
    // of A against each coprime member, so the gcd of those resultants
    // carries all of them while shedding spurious pairwise intersections
    MultiPoly R(f, 2);
    for (const MultiPoly& B : partners) {
        if (A.degree_in(1) == 0 && B.degree_in(1) == 0)
            return {}; // coprime in u alone: no common zeros
        MultiPoly res = resultant(A, B, 1);
        if (res.is_zero())
            throw error("vanishing resultant for a coprime pair");
        R = R.is_zero() ? res : poly_gcd(R, res);
        if (R.is_constant())
            return {};
    }

    std::vector<std::pair<FieldElem, FieldElem>> out;
    for (const RootRecord& ur : detail::roots_or_extend(upoly_from(R, 0))) {
        std::vector<MultiPoly> subst = {MultiPoly::constant(f, 2, ur.value),
                                        MultiPoly::variable(f, 2, 1)};
        UPoly g(f);
        bool any = false;
        for (const auto& m : members) {
            MultiPoly s = m.substitute(subst);
            if (s.is_zero())
                continue;
            UPoly su = upoly_from(s, 1);
            g = any ? upoly_gcd(g, su) : su.monic();
            any = true;
            if (g.degree() == 0)
                break;
        }
        if (!any)
            throw error("system vanishes along a vertical line; fixed component missed");
        if (g.degree() < 1)
            continue;
        for (const RootRecord& vr : detail::roots_or_extend(g))
            out.push_back({ur.value, vr.value});
    }
    return out;
}

struct NodeTask {
    int id;
    std::vector<MultiPoly> locals;
    int depth;
};

// root points across the three standard charts, without duplicates:
// chart 0 in full, then the line x0 = 0 with x1 = 1, then (0:0:1)
std::vector<WorkPoint> collect_root_points(const std::vector<MultiPoly>& forms, const Field& f) {
    std::vector<WorkPoint> roots;
    {
        std::vector<MultiPoly> chart0;
        for (const auto& b : forms)
            chart0.push_back(dehomogenize(b, 0));
        for (auto& [u0, v0] : bivariate_common_zeros(chart0, f))
            roots.push_back({u0, v0, 0});
    }
    {
        UPoly g(f);
        bool any = false, all_zero = true;
        for (const auto& b : forms) {
            MultiPoly s =
                b.substitute({MultiPoly::zero(f, 1), MultiPoly::constant(f, 1, f.one()),
                              MultiPoly::variable(f, 1, 0)});
            if (s.is_zero())
                continue;
            all_zero = false;
            UPoly su = upoly_from(s, 0);
            g = any ? upoly_gcd(g, su) : su.monic();
            any = true;
        }
        if (all_zero)
            throw error("x0 divides every member; fixed component");
        if (any && g.degree() >= 1)
            for (const RootRecord& r : detail::roots_or_extend(g))
                roots.push_back({f.zero(), r.value, 1});
    }
    {
        bool all_vanish = true;
        std::vector<FieldElem> p001 = {f.zero(), f.zero(), f.one()};
        for (const auto& b : forms)
            if (!b.eval(p001).is_zero()) {
                all_vanish = false;
                break;
            }
        if (all_vanish)
            roots.push_back({f.zero(), f.zero(), 2});
    }
    return roots;
}

BaseLocus analyze_impl(const std::vector<MultiPoly>& forms, const Field& f, int depth_cap) {
    BaseLocus tree;
    tree.field = f;

    std::vector<WorkPoint> roots = collect_root_points(forms, f);

    // canonical ordering: real points first, then conjugate pairs kept
    // adjacent, each block sorted
    auto conj_point = [&](const WorkPoint& p) {
        return WorkPoint{f.conjugate(p.x), f.conjugate(p.y), p.plane_chart};
    };
    auto same = [&](const WorkPoint& a, const WorkPoint& b) {
        return a.plane_chart == b.plane_chart && a.x == b.x && a.y == b.y;
    };
    std::vector<WorkPoint> ordered;
    {
        std::vector<WorkPoint> reals, complexes;
        for (const auto& p : roots)
            (same(p, conj_point(p)) ? reals : complexes).push_back(p);
        std::sort(reals.begin(), reals.end(), point_less);
        std::vector<WorkPoint> reps;
        for (const auto& p : complexes) {
            WorkPoint q = conj_point(p);
            if (point_less(p, q))
                reps.push_back(p);
        }
        std::sort(reps.begin(), reps.end(), point_less);
        ordered = reals;
        for (const auto& p : reps) {
            ordered.push_back(p);
            ordered.push_back(conj_point(p));
        }
        if (ordered.size() != roots.size())
            throw error("base locus is not stable under conjugation");
    }

    std::vector<NodeTask> queue;
    for (const auto& p : ordered) {
        Basepoint bp;
        bp.id = (int)tree.points.size() + 1;
        bp.x = p.x;
        bp.y = p.y;
        bp.parent = 0;
        bp.chart = ChartKind::root;
        bp.plane_chart = p.plane_chart;
        tree.points.push_back(bp);
        std::vector<MultiPoly> locals;
        for (const auto& b : forms)
            locals.push_back(translate(dehomogenize(b, p.plane_chart), p.x, p.y));
        queue.push_back({bp.id, std::move(locals), 0});
    }

    // breadth-first blowup recursion
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        NodeTask task = std::move(queue[qi]);
        int m = std::numeric_limits<int>::max();
        for (const auto& l : task.locals)
            m = std::min(m, l.min_total_degree());
        if (m < 1)
            throw error("recorded basepoint with zero multiplicity");
        tree.points[(size_t)(task.id - 1)].mult = m;

        struct Child {
            ChartKind chart;
            FieldElem coord;
        };
        std::vector<Child> children;
        std::vector<MultiPoly> lt, ls;
        {
            for (const auto& l : task.locals)
                lt.push_back(divide_by_var_power(blowup_chart(l, ChartKind::T), 0, m));
            UPoly g(f);
            bool any = false;
            std::vector<MultiPoly> subst = {MultiPoly::constant(f, 2, f.zero()),
                                            MultiPoly::variable(f, 2, 1)};
            for (const auto& l : lt) {
                MultiPoly s = l.substitute(subst);
                if (s.is_zero())
                    continue;
                UPoly su = upoly_from(s, 1);
                g = any ? upoly_gcd(g, su) : su.monic();
                any = true;
            }
            if (!any)
                throw error("strict transform vanishes on the exceptional curve");
            if (g.degree() >= 1) {
                auto rr = detail::roots_or_extend(g);
                std::sort(rr.begin(), rr.end(), [](const RootRecord& a, const RootRecord& b) {
                    return cmp(a.value, b.value) < 0;
                });
                for (const auto& r : rr)
                    children.push_back({ChartKind::T, r.value});
            }
        }
        {
            for (const auto& l : task.locals)
                ls.push_back(divide_by_var_power(blowup_chart(l, ChartKind::S), 1, m));
            bool at_origin = true;
            for (const auto& l : ls)
                if (!l.coeff(Monomial{0, 0}).is_zero()) {
                    at_origin = false;
                    break;
                }
            if (at_origin)
                children.push_back({ChartKind::S, f.zero()});
        }

        for (const auto& ch : children) {
            if (task.depth + 1 > depth_cap)
                throw depth_cap_error("basepoint tree exceeds depth cap " +
                                      std::to_string(depth_cap));
            Basepoint bp;
            bp.id = (int)tree.points.size() + 1;
            bp.parent = task.id;
            bp.chart = ch.chart;
            bp.plane_chart = -1;
            if (ch.chart == ChartKind::T) {
                bp.x = f.zero();
                bp.y = ch.coord;
            } else {
                bp.x = ch.coord;
                bp.y = f.zero();
            }
            tree.points.push_back(bp);
            std::vector<MultiPoly> locals;
            const std::vector<MultiPoly>& src = (ch.chart == ChartKind::T) ? lt : ls;
            for (const auto& l : src)
                locals.push_back(translate(l, bp.x, bp.y));
            queue.push_back({bp.id, std::move(locals), task.depth + 1});
        }
    }

    // conjugation pairing
    tree.conj.assign((size_t)tree.size(), 0);
    for (int id = 1; id <= tree.size(); ++id) {
        const Basepoint& p = tree.at(id);
        FieldElem cx = f.conjugate(p.x), cy = f.conjugate(p.y);
        int want_parent = p.parent == 0 ? 0 : tree.conj[(size_t)(p.parent - 1)];
        int partner = 0;
        for (int j = 1; j <= tree.size(); ++j) {
            const Basepoint& q = tree.at(j);
            if (q.parent != want_parent || q.chart != p.chart || q.plane_chart != p.plane_chart)
                continue;
            if (q.x == cx && q.y == cy) {
                partner = j;
                break;
            }
        }
        if (partner == 0)
            throw error("base locus is not stable under conjugation");
        tree.conj[(size_t)(id - 1)] = partner;
        tree.points[(size_t)(id - 1)].is_real = (partner == id);
    }
    tree.validate();
    return tree;
}

} // namespace

PlanePointSet common_zeros_of_forms(const std::vector<MultiPoly>& forms) {
    if (forms.empty())
        throw error("common zeros of an empty system");
    if (!gcd_content(forms).is_constant())
        throw error("form system has a common component");
    Field field = forms[0].field();
    while (true) {
        std::vector<MultiPoly> promoted;
        for (const auto& b : forms)
            promoted.push_back(b.promoted(field));
        try {
            PlanePointSet out;
            out.field = field;
            for (const WorkPoint& p : collect_root_points(promoted, field))
                out.points.push_back({p.x, p.y, p.plane_chart});
            std::sort(out.points.begin(), out.points.end(),
                      [](const PlanePoint& a, const PlanePoint& b) {
                          return point_less({a.x, a.y, a.plane_chart}, {b.x, b.y, b.plane_chart});
                      });
            return out;
        } catch (const detail::ExtensionNeeded& e) {
            if (!field.is_rationals())
                throw unsupported_field_error("a second quadratic extension was requested");
            field = Field::quadratic(e.b, e.c);
        }
    }
}

BaseLocus basepoint_analysis(const LinearSeries& s, int depth_cap) {
    if (s.basis.empty())
        throw error("basepoint analysis of an empty series");
    for (const auto& b : s.basis) {
        if (b.nvars() != 3 || !b.is_homogeneous() || b.total_degree() != s.degree)
            throw error("series members must be homogeneous of the series degree");
    }
    if (!gcd_content(s.basis).is_constant())
        throw error("series has a fixed component; basepoint analysis needs a constant gcd");

    Field field = s.field;
    while (true) {
        std::vector<MultiPoly> forms;
        for (const auto& b : s.basis)
            forms.push_back(b.promoted(field));
        try {
            return analyze_impl(forms, field, depth_cap);
        } catch (const detail::ExtensionNeeded& e) {
            if (!field.is_rationals())
                throw unsupported_field_error("a second quadratic extension was requested");
            field = Field::quadratic(e.b, e.c);
        }
    }
}

namespace {

void class_walk(const std::vector<MultiPoly>& locals, const BasepointTree& host, int id, int depth,
                int depth_cap, std::vector<int>& mults) {
    if (depth > depth_cap)
        throw depth_cap_error("host tree deeper than depth cap");
    int m = std::numeric_limits<int>::max();
    for (const auto& l : locals)
        m = std::min(m, l.min_total_degree());
    if (m == std::numeric_limits<int>::max())
        throw error("zero member in series");
    mults[(size_t)(id - 1)] = m;
    for (int child : host.children(id)) {
        const Basepoint& q = host.at(child);
        std::vector<MultiPoly> next;
        for (const auto& l : locals)
            next.push_back(planechart::translate(
                divide_by_var_power(blowup_chart(l, q.chart), exceptional_var(q.chart), m), q.x,
                q.y));
        class_walk(next, host, child, depth + 1, depth_cap, mults);
    }
}

} // namespace

DivClass actual_class(const LinearSeries& s, const BasepointTree& host, int depth_cap) {
    if (s.basis.empty())
        throw error("actual class of an empty series");
    std::vector<MultiPoly> forms;
    for (const auto& b : s.basis)
        forms.push_back(b.promoted(host.field));
    std::vector<int> mults((size_t)host.size(), 0);
    for (const auto& p : host.points) {
        if (p.parent != 0)
            continue;
        std::vector<MultiPoly> locals;
        for (const auto& b : forms)
            locals.push_back(
                planechart::translate(dehomogenize(b, p.plane_chart), p.x, p.y));
        class_walk(locals, host, p.id, 0, depth_cap, mults);
    }
    DivClass c = DivClass::zero(host.size() + 1);
    c.c[0] = s.degree;
    for (int i = 1; i <= host.size(); ++i)
        c.c[(size_t)i] = -mults[(size_t)(i - 1)];
    return c;
}

// ---------------------------------------------------------------------------
// irreducibility

namespace {

long long dim_of(const DivClass& c, const BasepointTree& tree, const Field& field,
                 std::map<DivClass, long long>& cache) {
    auto it = cache.find(c);
    if (it != cache.end())
        return it->second;
    long long d = series_dim_on_tree(c, tree, field);
    cache.emplace(c, d);
    return d;
}

// deterministic seeded member of a series (nonzero combination)
MultiPoly sample_member(const LinearSeries& s, std::mt19937& rng) {
    const Field& f = s.field;
    MultiPoly m = MultiPoly::zero(f, 3);
    while (m.is_zero()) {
        for (const auto& b : s.basis) {
            long coeff = (long)(rng() % 5);
            if (coeff != 0)
                m = m + b.scaled(f.from_int(coeff));
        }
    }
    return m;
}

// is p in the span of the series basis?
bool in_span(const MultiPoly& p, const LinearSeries& s) {
    std::vector<Monomial> monos = monomials_of_degree(3, s.degree);
    std::vector<std::vector<FieldElem>> m;
    for (const auto& mono : monos) {
        std::vector<FieldElem> row;
        for (const auto& b : s.basis)
            row.push_back(b.coeff(mono));
        row.push_back(p.coeff(mono));
        m.push_back(std::move(row));
    }
    // consistent iff no pivot lands in the last column
    std::vector<int> pivots = rref(m, s.field);
    for (int c : pivots)
        if (c == (int)s.basis.size())
            return false;
    return true;
}

} // namespace

IrredVerdict is_irreducible(const DivClass& c, const NSLattice& lattice, const Field& field,
                            unsigned seed) {
    IrredVerdict verdict;
    if (!is_curve_shape(c))
        throw unsupported_class_error("irreducibility test expects a curve-shaped class");
    std::map<DivClass, long long> cache;
    const BasepointTree& tree = lattice.tree;

    // fixed components of exceptional type
    for (const DivClass& d : neg_curve_classes(tree)) {
        if (intersect(c, d) < 0) {
            verdict.irreducible = false;
            verdict.reason = "fixed-component";
            verdict.component = d;
            return verdict;
        }
    }

    long long h0c = dim_of(c, tree, field, cache);
    if (h0c < 1)
        throw error("irreducibility asked for an empty series " + c.to_string());

    // bounded decompositions c = a + b with a, b effective
    long long c0 = c.c[0];
    std::vector<DivClass> parts;
    {
        DivClass a = DivClass::zero(c.rank());
        std::function<void(int)> rec = [&](int i) {
            if (i == c.rank()) {
                parts.push_back(a);
                return;
            }
            for (long long v = (i == 0) ? 1 : c.c[(size_t)i]; v <= ((i == 0) ? c0 - 1 : 0); ++v) {
                a.c[(size_t)i] = v;
                rec(i + 1);
            }
        };
        if (c0 >= 2)
            rec(0);
    }
    for (const DivClass& a : parts) {
        DivClass b = c - a;
        long long da = dim_of(a, tree, field, cache);
        if (da < 1)
            continue;
        long long db = dim_of(b, tree, field, cache);
        if (db < 1)
            continue;
        // a fixed part leaves the dimension unchanged
        if (da == h0c || db == h0c) {
            verdict.irreducible = false;
            verdict.reason = "fixed-component";
            verdict.component = (db == h0c) ? a : b;
            verdict.complement = (db == h0c) ? b : a;
        } else if ((da - 1) + (db - 1) >= h0c - 1) {
            verdict.irreducible = false;
            verdict.reason = "decomposition";
            verdict.component = a;
            verdict.complement = b;
        }
        if (!verdict.irreducible) {
            // certify with an explicit reducible member when possible
            std::mt19937 rng(seed);
            LinearSeries sa = series_from_class(a, tree, field);
            LinearSeries sb = series_from_class(b, tree, field);
            LinearSeries sc = series_from_class(c, tree, field);
            MultiPoly w = sample_member(sa, rng) * sample_member(sb, rng);
            if (in_span(w, sc))
                verdict.witness = w.normalized();
            return verdict;
        }
    }
    return verdict;
}

MultiPoly member_at(const LinearSeries& s, const std::vector<FieldElem>& coeffs) {
    if (coeffs.size() != s.basis.size())
        throw error("member coordinates must match the basis length");
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (!c.is_zero())
            all_zero = false;
    if (all_zero)
        throw error("member coordinates must not all vanish");
    MultiPoly m = MultiPoly::zero(s.field, 3);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            m = m + s.basis[i].scaled(coeffs[i]);
    return m;
}

} // namespace curvefam
