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

#include "curvefam/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace curvefam {

Field field_from_minpoly_text(const std::string& text) {
    // the minimal polynomial is written in t; reuse the polynomial
    // grammar with t mapped to the single variable x0
    std::string rewritten;
    for (char ch : text)
        rewritten += (ch == 't') ? std::string("x0") : std::string(1, ch);
    MultiPoly p;
    try {
        p = MultiPoly::parse(rewritten, Field::rationals(), 1);
    } catch (const parse_error& e) {
        throw parse_error("minpoly: " + std::string(e.what()));
    }
    if (p.degree_in(0) != 2)
        throw parse_error("minpoly must be quadratic in t: " + text);
    FieldElem a2 = p.coeff(Monomial{2});
    FieldElem a1 = p.coeff(Monomial{1});
    FieldElem a0 = p.coeff(Monomial{0});
    return Field::quadratic(a1.a0 / a2.a0, a0.a0 / a2.a0);
}

std::string minpoly_text(const Field& f) {
    if (!f.is_quadratic())
        throw error("the rational field has no minimal polynomial");
    std::ostringstream out;
    out << "t^2";
    const mpq_class& b = f.minpoly_b();
    const mpq_class& c = f.minpoly_c();
    if (b != 0) {
        if (b == 1)
            out << "+t";
        else if (b == -1)
            out << "-t";
        else
            out << (b > 0 ? "+" : "") << b.get_str() << "*t";
    }
    if (c != 0)
        out << (c > 0 ? "+" : "") << c.get_str();
    return out.str();
}

namespace {

FieldElem elem_from_text(const std::string& text, const Field& f) {
    MultiPoly p = MultiPoly::parse(text, f, 0);
    return p.constant_value();
}

ChartKind chart_from_text(const std::string& s) {
    if (s == "root")
        return ChartKind::root;
    if (s == "T")
        return ChartKind::T;
    if (s == "S")
        return ChartKind::S;
    throw parse_error("unknown chart label: " + s);
}

std::string chart_text(ChartKind k) {
    switch (k) {
    case ChartKind::root:
        return "root";
    case ChartKind::T:
        return "T";
    default:
        return "S";
    }
}

} // namespace

JobInput parse_job_json(const ordered_json& j) {
    if (!j.is_object())
        throw parse_error("job file must be a JSON object");
    Field field = Field::rationals();
    if (j.contains("minpoly") && !j.at("minpoly").is_null()) {
        try {
            field = field_from_minpoly_text(j.at("minpoly").get<std::string>());
        } catch (const unsupported_field_error& e) {
            throw parse_error(std::string("minpoly: ") + e.what());
        }
    }
    if (!j.contains("map") || !j.at("map").is_array())
        throw parse_error("job file needs a \"map\" array of polynomials");
    int nvars = 3;
    if (j.contains("variables")) {
        if (!j.at("variables").is_array() || j.at("variables").empty())
            throw parse_error("\"variables\" must be a nonempty array");
        nvars = (int)j.at("variables").size();
        for (int i = 0; i < nvars; ++i)
            if (j.at("variables")[(size_t)i].get<std::string>() != "x" + std::to_string(i))
                throw parse_error("variables must be named x0, x1, ...");
    }
    std::vector<MultiPoly> comps;
    for (const auto& entry : j.at("map")) {
        try {
            comps.push_back(MultiPoly::parse(entry.get<std::string>(), field, nvars));
        } catch (const parse_error& e) {
            throw parse_error(std::string("map component: ") + e.what());
        }
    }
    RationalMap map;
    try {
        map = RationalMap::reduced(field, std::move(comps));
    } catch (const error& e) {
        throw parse_error(std::string("map: ") + e.what());
    }
    JobInput input{std::move(map), std::nullopt};
    if (j.contains("basepoints") && !j.at("basepoints").is_null())
        input.basepoints = tree_from_json(j.at("basepoints"), field);
    return input;
}

JobInput load_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return parse_job_json(j);
}

ordered_json divclass_to_json(const DivClass& c) {
    ordered_json a = ordered_json::array();
    for (long long v : c.c)
        a.push_back(v);
    return a;
}

DivClass divclass_from_json(const ordered_json& j) {
    if (!j.is_array())
        throw parse_error("divisor class must be an integer array");
    DivClass c;
    for (const auto& v : j)
        c.c.push_back(v.get<long long>());
    return c;
}

ordered_json tree_to_json(const BasepointTree& tree) {
    ordered_json nodes = ordered_json::array();
    for (const auto& p : tree.points) {
        ordered_json n;
        n["id"] = p.id;
        n["parent"] = p.parent;
        n["chart"] = chart_text(p.chart);
        if (p.chart == ChartKind::root)
            n["plane_chart"] = p.plane_chart;
        n["coords"] =
            ordered_json::array({tree.field.to_string(p.x), tree.field.to_string(p.y)});
        n["mult"] = p.mult;
        n["conj"] = tree.conj[(size_t)(p.id - 1)];
        nodes.push_back(std::move(n));
    }
    return nodes;
}

BasepointTree tree_from_json(const ordered_json& j, const Field& field) {
    if (!j.is_array())
        throw parse_error("basepoints must be an array of nodes");
    BasepointTree tree;
    tree.field = field;
    for (const auto& n : j) {
        Basepoint p;
        p.id = n.at("id").get<int>();
        p.parent = n.contains("parent") && !n.at("parent").is_null() ? n.at("parent").get<int>() : 0;
        p.chart = chart_from_text(n.at("chart").get<std::string>());
        p.plane_chart = p.chart == ChartKind::root
                            ? (n.contains("plane_chart") ? n.at("plane_chart").get<int>() : 0)
                            : -1;
        p.x = elem_from_text(n.at("coords")[0].get<std::string>(), field);
        p.y = elem_from_text(n.at("coords")[1].get<std::string>(), field);
        p.mult = n.contains("mult") ? n.at("mult").get<int>() : 1;
        tree.points.push_back(p);
    }
    for (size_t i = 0; i < tree.points.size(); ++i)
        if (tree.points[i].id != (int)i + 1)
            throw parse_error("basepoint ids must be 1..n in order");
    tree.conj.assign((size_t)tree.size(), 0);
    for (const auto& n : j) {
        int id = n.at("id").get<int>();
        int cj = n.contains("conj") ? n.at("conj").get<int>() : id;
        tree.conj[(size_t)(id - 1)] = cj;
        tree.points[(size_t)(id - 1)].is_real = (cj == id);
    }
    try {
        tree.validate();
    } catch (const error& e) {
        throw parse_error(std::string("basepoints: ") + e.what());
    }
    return tree;
}

ordered_json series_to_json(const LinearSeries& s) {
    ordered_json j;
    j["degree"] = s.degree;
    ordered_json basis = ordered_json::array();
    for (const auto& b : s.basis)
        basis.push_back(b.to_string());
    j["basis"] = std::move(basis);
    return j;
}

ordered_json lattice_to_json(const NSLattice& lat) {
    ordered_json j;
    j["minpoly"] = lat.tree.field.is_quadratic() ? ordered_json(minpoly_text(lat.tree.field))
                                                 : ordered_json(nullptr);
    j["h"] = divclass_to_json(lat.h);
    j["k"] = divclass_to_json(lat.k);
    ordered_json sig = ordered_json::array();
    for (int v : lat.sigma)
        sig.push_back(v);
    j["sigma"] = std::move(sig);
    j["basepoints"] = tree_to_json(lat.tree);
    return j;
}

ordered_json search_to_json(const FamilySearch& s) {
    ordered_json j;
    j["surface"] = lattice_to_json(s.lattice);
    ordered_json q;
    q["alpha"] = s.query.alpha;
    q["nu"] = s.query.nu;
    q["rho"] = s.query.rho;
    j["query"] = std::move(q);
    ordered_json cands = ordered_json::array();
    for (const auto& c : s.candidates)
        cands.push_back(divclass_to_json(c));
    j["candidates"] = std::move(cands);
    if (!s.filtered_non_real.empty()) {
        ordered_json fil = ordered_json::array();
        for (const auto& c : s.filtered_non_real)
            fil.push_back(divclass_to_json(c));
        j["filtered_non_real"] = std::move(fil);
    }
    ordered_json acc = ordered_json::array();
    for (const auto& rep : s.accepted) {
        ordered_json r;
        r["class"] = divclass_to_json(rep.cls);
        r["degree"] = rep.degree;
        r["dimension"] = rep.dimension;
        r["genus"] = rep.genus;
        r["reachable"] = rep.reachable;
        r["series"] = rep.series ? series_to_json(*rep.series) : ordered_json(nullptr);
        acc.push_back(std::move(r));
    }
    j["accepted"] = std::move(acc);
    ordered_json rej = ordered_json::array();
    for (const auto& r : s.rejected) {
        ordered_json e;
        e["class"] = divclass_to_json(r.cls);
        e["reason"] = r.reason;
        if (r.actual)
            e["actual_class"] = divclass_to_json(*r.actual);
        if (r.component)
            e["component"] = divclass_to_json(*r.component);
        rej.push_back(std::move(e));
    }
    j["rejected"] = std::move(rej);
    return j;
}

namespace {

std::string sigma_text(const std::vector<int>& sigma) {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if ((size_t)sigma[i] > i) {
            out << "(" << i << " " << sigma[i] << ")";
            any = true;
        }
    }
    return any ? out.str() : "id";
}

} // namespace

std::string lattice_to_text(const NSLattice& lat) {
    std::ostringstream out;
    out << "field: "
        << (lat.tree.field.is_quadratic() ? "Q(t), " + minpoly_text(lat.tree.field) + " = 0"
                                          : "Q")
        << "\n";
    out << "h = " << lat.h.to_string() << "\n";
    out << "k = " << lat.k.to_string() << "\n";
    out << "sigma = " << sigma_text(lat.sigma) << "\n";
    out << "basepoints:\n";
    for (const auto& p : lat.tree.points) {
        out << "  p" << p.id << " = (" << lat.tree.field.to_string(p.x) << ", "
            << lat.tree.field.to_string(p.y) << ")";
        if (p.chart == ChartKind::root)
            out << " chart x" << p.plane_chart << "!=0";
        else
            out << " near p" << p.parent << " chart " << (p.chart == ChartKind::T ? "T" : "S");
        out << " mult " << p.mult << "\n";
    }
    return out.str();
}

std::string search_to_text(const FamilySearch& s) {
    std::ostringstream out;
    out << lattice_to_text(s.lattice);
    out << "query: alpha=" << s.query.alpha << " nu=" << s.query.nu << " rho=" << s.query.rho
        << "\n";
    out << "candidates: " << s.candidates.size() << "\n";
    out << "accepted (" << s.accepted.size() << "):\n";
    for (const auto& rep : s.accepted) {
        out << "  " << rep.cls.to_string() << "  degree " << rep.degree << " dim "
            << rep.dimension << " genus " << rep.genus;
        if (!rep.reachable)
            out << "  [unreachable]";
        if (rep.series) {
            out << "  series:";
            for (const auto& b : rep.series->basis)
                out << " " << b.to_string();
        }
        out << "\n";
    }
    out << "rejected (" << s.rejected.size() << "):\n";
    for (const auto& r : s.rejected) {
        out << "  " << r.cls.to_string() << "  " << r.reason;
        if (r.actual)
            out << " (actual " << r.actual->to_string() << ")";
        if (r.component)
            out << " (component " << r.component->to_string() << ")";
        out << "\n";
    }
    return out.str();
}

} // namespace curvefam
