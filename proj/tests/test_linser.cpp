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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "curvefam/families.hpp"

using namespace curvefam;

namespace {

const Field Q = Field::rationals();

MultiPoly P3(const std::string& s) { return MultiPoly::parse(s, Q, 3); }

DivClass dc(std::vector<long long> v) { return DivClass(std::move(v)); }

LinearSeries eqH_series() {
    return LinearSeries{Q, 3,
                        {P3("x1^3+2*x2^2*x0-x1*x0^2-2*x2*x0^2"), P3("x1^2*x2"),
                         P3("x1*x2^2-2*x2^2*x0+2*x2*x0^2"), P3("x1*x2*x0-2*x2^2*x0+2*x2*x0^2"),
                         P3("x2^3-2*x2^2*x0+x2*x0^2")}};
}

BaseLocus eqH_tree() { return basepoint_analysis(eqH_series()); }

NSLattice eqH_lattice() { return lattice_from_locus(eqH_tree(), 3); }

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

} // namespace

TEST_CASE("basepoint analysis of the cubic surface map") {
    BaseLocus t = eqH_tree();
    REQUIRE(t.size() == 5);
    CHECK(t.field.is_rationals());
    // four simple points in the chart x0 != 0
    std::vector<std::pair<long, long>> expect = {{-1, 0}, {0, 0}, {1, 0}, {0, 1}};
    for (int i = 1; i <= 4; ++i) {
        const Basepoint& p = t.at(i);
        CHECK(p.parent == 0);
        CHECK(p.plane_chart == 0);
        CHECK(p.mult == 1);
        CHECK(p.x.a0 == expect[(size_t)(i - 1)].first);
        CHECK(p.y.a0 == expect[(size_t)(i - 1)].second);
    }
    // one point infinitely near p4
    const Basepoint& p5 = t.at(5);
    CHECK(p5.parent == 4);
    CHECK(p5.chart == ChartKind::T);
    CHECK(p5.mult == 1);
    // all real: identity pairing
    for (int i = 1; i <= 5; ++i)
        CHECK(t.conj[(size_t)(i - 1)] == i);
}

TEST_CASE("no basepoints for a basepoint-free net") {
    LinearSeries s{Q, 1, {P3("x0"), P3("x1"), P3("x2")}};
    CHECK(basepoint_analysis(s).size() == 0);
}

TEST_CASE("series with a fixed component is rejected") {
    LinearSeries s{Q, 2, {P3("x2*x1"), P3("x2*(x2-x0)")}};
    CHECK_THROWS_AS(basepoint_analysis(s), error);
}

TEST_CASE("series_from_class on the cubic surface") {
    BaseLocus t = eqH_tree();
    SUBCASE("line through p4 and the infinitely near p5") {
        LinearSeries s = series_from_class(dc({1, 0, 0, 0, -1, -1}), t, Q);
        REQUIRE(s.basis.size() == 1);
        CHECK(s.basis[0] == P3("2*x0+x1-2*x2"));
    }
    SUBCASE("pencil of lines through p4") {
        LinearSeries s = series_from_class(dc({1, 0, 0, 0, -1, 0}), t, Q);
        REQUIRE(s.basis.size() == 2);
        // same span as the classical (x1, x2 - x0)
        std::set<MultiPoly> got(s.basis.begin(), s.basis.end());
        CHECK(got.count(P3("x1")) == 1);
        CHECK(got.count(P3("x0-x2")) == 1);
    }
    SUBCASE("conics through p1..p4 form the reducible series") {
        LinearSeries s = series_from_class(dc({2, -1, -1, -1, -1, 0}), t, Q);
        REQUIRE(s.basis.size() == 2);
        // members are x2 * (lines through p4)
        for (const auto& b : s.basis)
            CHECK(b.try_exact_div(P3("x2"), nullptr));
    }
    SUBCASE("line through the three collinear points") {
        LinearSeries s = series_from_class(dc({1, -1, -1, -1, 0, 0}), t, Q);
        REQUIRE(s.basis.size() == 1);
        CHECK(s.basis[0] == P3("x2"));
    }
    SUBCASE("empty series is a valid result") {
        // conics with a triple point do not exist
        LinearSeries s = series_from_class(dc({2, -3, 0, 0, 0, 0}), t, Q);
        CHECK(s.basis.empty());
    }
    SUBCASE("class shape is enforced") {
        CHECK_THROWS_AS(series_from_class(dc({0, 1, 0, 0, 0, 0}), t, Q),
                        unsupported_class_error);
    }
}

TEST_CASE("actual_class") {
    BaseLocus t = eqH_tree();
    SUBCASE("L45 recomputes to its own class") {
        LinearSeries s = series_from_class(dc({1, 0, 0, 0, -1, -1}), t, Q);
        CHECK(actual_class(s, t) == dc({1, 0, 0, 0, -1, -1}));
    }
    SUBCASE("the full degree-1 net has class e0") {
        LinearSeries s{Q, 1, {P3("x0"), P3("x1"), P3("x2")}};
        CHECK(actual_class(s, t) == dc({1, 0, 0, 0, 0, 0}));
    }
    SUBCASE("a line through two of the collinear points picks up the third") {
        LinearSeries s = series_from_class(dc({1, -1, -1, 0, 0, 0}), t, Q);
        REQUIRE(s.h0() == 1);
        CHECK(actual_class(s, t) == dc({1, -1, -1, -1, 0, 0}));
    }
    SUBCASE("prescribing only the infinitely near point forces the pencil through p4") {
        LinearSeries s = series_from_class(dc({1, 0, 0, 0, 0, -1}), t, Q);
        CHECK(s.h0() == 2);
        CHECK(actual_class(s, t) == dc({1, 0, 0, 0, -1, 0}));
    }
}

TEST_CASE("round trip through the certified family classes") {
    BaseLocus t = eqH_tree();
    std::vector<DivClass> certified = {
        dc({1, 0, 0, 0, -1, -1}),    dc({1, -1, 0, 0, -1, 0}),   dc({1, 0, -1, 0, -1, 0}),
        dc({1, 0, 0, -1, -1, 0}),    dc({1, -1, 0, 0, 0, 0}),    dc({1, 0, -1, 0, 0, 0}),
        dc({1, 0, 0, -1, 0, 0}),     dc({1, 0, 0, 0, -1, 0}),    dc({2, -1, -1, 0, -1, -1}),
        dc({2, -1, 0, -1, -1, -1}),  dc({2, 0, -1, -1, -1, -1})};
    for (const auto& c : certified) {
        LinearSeries s = series_from_class(c, t, Q);
        REQUIRE(s.h0() >= 1);
        CHECK(actual_class(s, t) == c);
    }
}

TEST_CASE("irreducibility") {
    NSLattice lat = eqH_lattice();
    SUBCASE("fixed exceptional component") {
        IrredVerdict v = is_irreducible(dc({1, -1, 0, 0, 0, -1}), lat, Q);
        CHECK(!v.irreducible);
        CHECK(v.reason == "fixed-component");
        REQUIRE(v.component.has_value());
        CHECK(*v.component == dc({0, 0, 0, 0, 1, -1}));
    }
    SUBCASE("the unique conic through all five points is reducible") {
        IrredVerdict v = is_irreducible(dc({2, -1, -1, -1, -1, -1}), lat, Q);
        CHECK(!v.irreducible);
        REQUIRE(v.witness.has_value());
        // the witness member factors as x2 times the L45 line
        CHECK(v.witness->try_exact_div(P3("x2"), nullptr));
    }
    SUBCASE("conics through p4 are irreducible") {
        CHECK(is_irreducible(dc({1, 0, 0, 0, -1, 0}), lat, Q).irreducible);
    }
    SUBCASE("double line detected through dimension counting") {
        IrredVerdict v = is_irreducible(dc({2, -2, -1, -1, 0, 0}), lat, Q);
        CHECK(!v.irreducible);
    }
}

TEST_CASE("member_at") {
    BaseLocus t = eqH_tree();
    LinearSeries s = series_from_class(dc({1, 0, 0, 0, -1, 0}), t, Q);
    REQUIRE(s.basis.size() == 2);
    CHECK(member_at(s, {Q.one(), Q.zero()}) == s.basis[0]);
    MultiPoly m = member_at(s, {Q.from_int(2), Q.from_int(-3)});
    CHECK(m.total_degree() == 1);
    CHECK_THROWS_AS(member_at(s, {Q.zero(), Q.zero()}), error);
    CHECK_THROWS_AS(member_at(s, {Q.one()}), error);
}

TEST_CASE("dimension count for simple points in general position") {
    std::mt19937 rng(2026);
    int done = 0;
    while (done < 30) {
        int npts = 1 + (int)(rng() % 6);
        int deg = 1 + (int)(rng() % 3);
        // plant distinct random rational points
        std::set<std::pair<long, long>> seen;
        while ((int)seen.size() < npts) {
            long x = (long)(rng() % 2000) - 1000;
            long y = (long)(rng() % 2000) - 1000;
            seen.insert({x, y});
        }
        BaseLocus t;
        t.field = Q;
        int id = 0;
        for (auto& [x, y] : seen) {
            Basepoint p;
            p.id = ++id;
            p.parent = 0;
            p.chart = ChartKind::root;
            p.plane_chart = 0;
            p.x = Q.from_int(x);
            p.y = Q.from_int(y);
            t.points.push_back(p);
            t.conj.push_back(p.id);
        }
        DivClass c = DivClass::zero(npts + 1);
        c.c[0] = deg;
        for (int i = 1; i <= npts; ++i)
            c.c[(size_t)i] = -1;
        LinearSeries s = series_from_class(c, t, Q);
        long long expect = std::max(0LL, binom2(deg + 2) - npts);
        CHECK(s.h0() == expect);
        ++done;
    }
}

TEST_CASE("analysis recovers planted general-position points") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        int npts = 2 + (int)(rng() % 3);
        int deg = 2 + (int)(rng() % 2);
        std::set<std::pair<long, long>> pts;
        while ((int)pts.size() < npts)
            pts.insert({(long)(rng() % 41) - 20, (long)(rng() % 41) - 20});
        BaseLocus planted;
        planted.field = Q;
        int id = 0;
        for (auto& [x, y] : pts) {
            Basepoint p;
            p.id = ++id;
            p.parent = 0;
            p.chart = ChartKind::root;
            p.plane_chart = 0;
            p.x = Q.from_int(x);
            p.y = Q.from_int(y);
            planted.points.push_back(p);
            planted.conj.push_back(p.id);
        }
        DivClass c = DivClass::zero(npts + 1);
        c.c[0] = deg;
        for (int i = 1; i <= npts; ++i)
            c.c[(size_t)i] = -1;
        LinearSeries s = series_from_class(c, planted, Q);
        REQUIRE(s.h0() >= 2);
        BaseLocus found = basepoint_analysis(s);
        // same set of simple plane points, nothing extra
        REQUIRE(found.size() == npts);
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& p : found.points) {
            CHECK(p.parent == 0);
            CHECK(p.mult == 1);
            got.insert({Q.to_string(p.x), Q.to_string(p.y)});
        }
        std::set<std::pair<std::string, std::string>> expect;
        for (auto& [x, y] : pts)
            expect.insert({std::to_string(x), std::to_string(y)});
        CHECK(got == expect);
    }
}

TEST_CASE("random reduced maps never crash the analysis") {
    std::mt19937 rng(777);
    int analyzed = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<MultiPoly> comps;
        for (int k = 0; k < 4; ++k) {
            MultiPoly p = MultiPoly::zero(Q, 3);
            for (int t = 0; t < 4; ++t) {
                unsigned a = rng() % 3, b = rng() % (3 - a);
                Monomial m = {a, b, 2 - a - b};
                long coef = (long)(rng() % 7) - 3;
                p = p + MultiPoly::monomial(Q, m, FieldElem(mpq_class(coef)));
            }
            comps.push_back(p);
        }
        bool nonzero = false;
        for (const auto& cpoly : comps)
            if (!cpoly.is_zero())
                nonzero = true;
        if (!nonzero)
            continue;
        try {
            RationalMap m = RationalMap::reduced(Q, comps);
            if (m.degree() < 1)
                continue;
            basepoint_analysis(series_of(m), 6);
            ++analyzed;
        } catch (const error&) {
            // structured failures (unsupported fields, fixed components,
            // depth cap) are acceptable outcomes for random input
        }
    }
    CHECK(analyzed >= 2);
}

TEST_CASE("conjugation equivariance of the base locus") {
    // two conjugate points and one rational point planted on conics
    Field f = Field::quadratic(mpq_class(0), mpq_class(1)); // t^2 + 1
    FieldElem i = f.generator();
    BaseLocus t;
    t.field = f;
    auto add = [&](int id, FieldElem x, FieldElem y, bool real) {
        Basepoint p;
        p.id = id;
        p.parent = 0;
        p.chart = ChartKind::root;
        p.plane_chart = 0;
        p.x = x;
        p.y = y;
        p.is_real = real;
        t.points.push_back(p);
    };
    add(1, i, f.zero(), false);
    add(2, f.neg(i), f.zero(), false);
    add(3, f.zero(), f.one(), true);
    t.conj = {2, 1, 3};
    t.validate();
    LinearSeries s = series_from_class(dc({2, -1, -1, -1}), t, f);
    CHECK(s.h0() == 3);
    BaseLocus found = basepoint_analysis(s);
    REQUIRE(found.size() == 3);
    int non_real = 0;
    for (const auto& p : found.points)
        if (!p.is_real)
            ++non_real;
    CHECK(non_real == 2);
    // the pairing exchanges coordinates by conjugation
    for (int id = 1; id <= found.size(); ++id) {
        const Basepoint& p = found.at(id);
        const Basepoint& q = found.at(found.conj[(size_t)(id - 1)]);
        CHECK(q.x == f.conjugate(p.x));
        CHECK(q.y == f.conjugate(p.y));
    }
}

TEST_CASE("infinitely near conjugate pairs round-trip over an extension") {
    Field f = Field::quadratic(mpq_class(0), mpq_class(1)); // t^2 + 1
    FieldElem i = f.generator();
    BaseLocus t;
    t.field = f;
    auto add = [&](int id, int parent, ChartKind chart, FieldElem x, FieldElem y) {
        Basepoint p;
        p.id = id;
        p.parent = parent;
        p.chart = chart;
        p.plane_chart = parent == 0 ? 0 : -1;
        p.x = x;
        p.y = y;
        p.is_real = false;
        t.points.push_back(p);
    };
    add(1, 0, ChartKind::root, i, f.zero());
    add(2, 0, ChartKind::root, f.neg(i), f.zero());
    add(3, 1, ChartKind::T, f.zero(), i);
    add(4, 2, ChartKind::T, f.zero(), f.neg(i));
    t.conj = {2, 1, 4, 3};
    t.validate();
    DivClass c = dc({2, -1, -1, -1, -1});
    LinearSeries s = series_from_class(c, t, f);
    REQUIRE(s.h0() == 2);
    CHECK(actual_class(s, t) == c);
    BaseLocus found = basepoint_analysis(s);
    REQUIRE(found.size() == 4);
    int children = 0;
    for (const auto& p : found.points) {
        CHECK(p.mult == 1);
        if (p.parent != 0) {
            ++children;
            // tangent directions are swapped by conjugation
            const Basepoint& q = found.at(found.conj[(size_t)(p.id - 1)]);
            CHECK(q.parent == found.conj[(size_t)(p.parent - 1)]);
            CHECK(q.y == f.conjugate(p.y));
        }
    }
    CHECK(children == 2);
}

TEST_CASE("every reported basepoint annihilates the whole basis") {
    LinearSeries s = eqH_series();
    BaseLocus t = basepoint_analysis(s);
    for (const auto& p : t.points) {
        if (p.parent != 0)
            continue;
        std::vector<FieldElem> pt;
        switch (p.plane_chart) {
        case 0:
            pt = {t.field.one(), p.x, p.y};
            break;
        case 1:
            pt = {p.x, t.field.one(), p.y};
            break;
        default:
            pt = {p.x, p.y, t.field.one()};
        }
        for (const auto& b : s.basis)
            CHECK(b.promoted(t.field).eval(pt).is_zero());
    }
    // multiplicities weakly decrease down each branch
    for (const auto& p : t.points)
        if (p.parent != 0)
            CHECK(p.mult <= t.at(p.parent).mult);
}

TEST_CASE("depth cap guards the recursion") {
    LinearSeries s = eqH_series();
    CHECK_THROWS_AS(basepoint_analysis(s, 0), depth_cap_error);
}

TEST_CASE("conditions at a basepoint on the line at infinity") {
    // the point (0:1:3) lives in the chart x1 != 0 with coords (0, 3)
    BaseLocus t;
    t.field = Q;
    Basepoint p;
    p.id = 1;
    p.parent = 0;
    p.chart = ChartKind::root;
    p.plane_chart = 1;
    p.x = Q.zero();
    p.y = Q.from_int(3);
    t.points.push_back(p);
    t.conj = {1};
    LinearSeries s = series_from_class(dc({1, -1}), t, Q);
    REQUIRE(s.h0() == 2);
    std::vector<FieldElem> pt = {Q.zero(), Q.one(), Q.from_int(3)};
    for (const auto& b : s.basis)
        CHECK(b.eval(pt).is_zero());
}

TEST_CASE("a double basepoint and its series") {
    // all conics singular at (0:0:1)
    LinearSeries s{Q, 2, {P3("x0^2"), P3("x0*x1"), P3("x1^2")}};
    BaseLocus t = basepoint_analysis(s);
    REQUIRE(t.size() == 1);
    CHECK(t.at(1).plane_chart == 2);
    CHECK(t.at(1).mult == 2);
    // the series of the class 2e0 - 2e1 recovers the 3-dimensional space
    LinearSeries back = series_from_class(dc({2, -2}), t, Q);
    CHECK(back.h0() == 3);
    CHECK(actual_class(back, t) == dc({2, -2}));
}

TEST_CASE("h0 delegates curve shapes to the series dimension") {
    NSLattice lat = eqH_lattice();
    auto cb = [&](const DivClass& c) { return series_dim_on_tree(c, lat.tree, Q); };
    CHECK(h0(dc({0, 0, 0, 0, 1, -1}), lat, cb) == 1);
    CHECK(h0(dc({1, 0, 0, 0, -1, 0}), lat, cb) == 2); // the pencil through p4
    CHECK(h0(dc({2, -1, -1, -1, -1, -1}), lat, cb) == 1);
    CHECK(h0(dc({1, -1, -1, -1, 0, 0}), lat, cb) == 1);
}

TEST_CASE("common zeros of forms across charts") {
    SUBCASE("points on the line at infinity are found") {
        // x0 and a conic through (0:1:0) and (0:0:1)
        std::vector<MultiPoly> forms = {P3("x0"), P3("x1*x2")};
        PlanePointSet pts = common_zeros_of_forms(forms);
        REQUIRE(pts.points.size() == 2);
        CHECK(pts.points[0].plane_chart == 1);
        CHECK(pts.points[1].plane_chart == 2);
    }
    SUBCASE("conjugate pair over an extension") {
        std::vector<MultiPoly> forms = {P3("x1^2+x2^2"), P3("x0")};
        PlanePointSet pts = common_zeros_of_forms(forms);
        REQUIRE(pts.points.size() == 2);
        CHECK(pts.field.is_quadratic());
        CHECK(pts.field.conjugate(pts.points[0].y) == pts.points[1].y);
    }
}
