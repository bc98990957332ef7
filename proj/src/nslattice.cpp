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

#include "curvefam/nslattice.hpp"

#include <algorithm>
#include <sstream>

#include "curvefam/errors.hpp"

namespace curvefam {

DivClass DivClass::basis(int rank, int i) {
    DivClass e = zero(rank);
    e.c[(size_t)i] = 1;
    return e;
}

DivClass DivClass::operator+(const DivClass& o) const {
    if (c.size() != o.c.size())
        throw error("divisor class length mismatch");
    DivClass r = *this;
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] += o.c[i];
    return r;
}

DivClass DivClass::operator-(const DivClass& o) const {
    if (c.size() != o.c.size())
        throw error("divisor class length mismatch");
    DivClass r = *this;
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] -= o.c[i];
    return r;
}

std::string DivClass::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        long long v = c[i];
        if (v == 0)
            continue;
        if (v > 0 && !first)
            out << "+";
        if (v == -1)
            out << "-";
        else if (v != 1)
            out << v << "*";
        out << "e" << i;
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

long long intersect(const DivClass& a, const DivClass& b) {
    if (a.c.size() != b.c.size())
        throw error("divisor class length mismatch");
    if (a.c.empty())
        throw error("empty divisor class");
    mpz_class acc = mpz_class((long)a.c[0]) * mpz_class((long)b.c[0]);
    for (size_t i = 1; i < a.c.size(); ++i)
        acc -= mpz_class((long)a.c[i]) * mpz_class((long)b.c[i]);
    return (long long)acc.get_si();
}

long long genus(const DivClass& c, const DivClass& k) {
    long long s = intersect(c, c) + intersect(c, k);
    if (s % 2 != 0)
        throw error("malformed class: c^2 + c.k is odd for " + c.to_string());
    return s / 2 + 1;
}

long long degree(const DivClass& c, const DivClass& h) { return intersect(h, c); }

std::vector<int> BasepointTree::children(int id) const {
    std::vector<int> out;
    for (const auto& p : points)
        if (p.parent == id)
            out.push_back(p.id);
    return out;
}

bool BasepointTree::is_descendant(int ancestor, int id) const {
    int cur = at(id).parent;
    while (cur != 0) {
        if (cur == ancestor)
            return true;
        cur = at(cur).parent;
    }
    return false;
}

std::vector<int> BasepointTree::path_from_root(int id) const {
    std::vector<int> path;
    int cur = id;
    while (cur != 0) {
        path.push_back(cur);
        cur = at(cur).parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

void BasepointTree::validate() const {
    if ((int)conj.size() != size())
        throw error("basepoint tree: conjugation pairing size mismatch");
    for (const auto& p : points) {
        if (p.parent >= p.id)
            throw error("basepoint tree: parent id must precede child id");
        if ((p.parent == 0) != (p.chart == ChartKind::root))
            throw error("basepoint tree: chart/root mismatch");
        if (p.chart == ChartKind::T && !p.x.is_zero())
            throw error("basepoint tree: chart-T points lie on the exceptional curve x = 0");
        if (p.chart == ChartKind::S && !p.y.is_zero())
            throw error("basepoint tree: chart-S points lie on the exceptional curve y = 0");
        if (p.mult < 1)
            throw error("basepoint tree: multiplicity must be positive");
        int q = conj[(size_t)(p.id - 1)];
        if (q < 1 || q > size() || conj[(size_t)(q - 1)] != p.id)
            throw error("basepoint tree: pairing is not an involution");
        if (p.is_real != (q == p.id))
            throw error("basepoint tree: real flag disagrees with pairing");
        if (q != p.id) {
            // conjugate of a child of p is a child of conjugate(p)
            const Basepoint& pq = at(q);
            int pp = p.parent == 0 ? 0 : conj[(size_t)(p.parent - 1)];
            if (pq.parent != pp)
                throw error("basepoint tree: pairing does not respect the tree");
        }
    }
}

std::vector<int> involution_from_tree(const BasepointTree& tree) {
    std::vector<int> sigma((size_t)tree.size() + 1);
    sigma[0] = 0;
    for (int i = 1; i <= tree.size(); ++i)
        sigma[(size_t)i] = tree.conj[(size_t)(i - 1)];
    return sigma;
}

DivClass apply_involution(const std::vector<int>& sigma, const DivClass& c) {
    if (sigma.size() != c.c.size())
        throw error("involution rank mismatch");
    DivClass r = DivClass::zero(c.rank());
    for (size_t i = 0; i < c.c.size(); ++i)
        r.c[(size_t)sigma[i]] = c.c[i];
    return r;
}

std::vector<DivClass> neg_curve_classes(const BasepointTree& tree) {
    std::vector<DivClass> out;
    int rank = tree.size() + 1;
    for (int i = 1; i <= tree.size(); ++i)
        for (int j = 1; j <= tree.size(); ++j)
            if (i != j && tree.is_descendant(i, j))
                out.push_back(DivClass::basis(rank, i) - DivClass::basis(rank, j));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_single_exceptional(const DivClass& c, int* index) {
    int found = -1;
    for (int i = 0; i < c.rank(); ++i) {
        if (c.c[(size_t)i] == 0)
            continue;
        if (i == 0 || c.c[(size_t)i] != 1 || found != -1)
            return false;
        found = i;
    }
    if (found == -1)
        return false;
    if (index)
        *index = found;
    return true;
}

bool is_exceptional_difference(const DivClass& c, int* i, int* j) {
    int pos = -1, neg = -1;
    for (int k = 0; k < c.rank(); ++k) {
        long long v = c.c[(size_t)k];
        if (v == 0)
            continue;
        if (k == 0)
            return false;
        if (v == 1 && pos == -1)
            pos = k;
        else if (v == -1 && neg == -1)
            neg = k;
        else
            return false;
    }
    if (pos == -1 || neg == -1)
        return false;
    if (i)
        *i = pos;
    if (j)
        *j = neg;
    return true;
}

bool is_curve_shape(const DivClass& c) {
    if (c.rank() == 0 || c.c[0] <= 0)
        return false;
    for (int i = 1; i < c.rank(); ++i)
        if (c.c[(size_t)i] > 0)
            return false;
    return true;
}

long long h0(const DivClass& c, const NSLattice& lattice,
             const std::function<long long(const DivClass&)>& series_dim) {
    if (c.rank() != lattice.rank)
        throw error("divisor class rank mismatch");
    int i = 0, j = 0;
    if (is_single_exceptional(c, &i))
        return 1;
    if (is_exceptional_difference(c, &i, &j))
        return lattice.tree.is_descendant(i, j) ? 1 : 0;
    if (is_curve_shape(c)) {
        if (!series_dim)
            throw error("h0 needs a series dimension callback for curve classes");
        return series_dim(c);
    }
    throw unsupported_class_error("h0 not defined for class shape " + c.to_string());
}

} // namespace curvefam
