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

#include "curvefam/classenum.hpp"

#include <algorithm>

#include "curvefam/errors.hpp"

namespace curvefam {

void EnumQuery::validate() const {
    if (h.rank() < 1)
        throw error("enumeration query: empty lattice");
    if (h.c[0] <= 0)
        throw error("enumeration query: h0 must be positive");
    if (intersect(h, h) <= 0)
        throw error("enumeration query: h^2 <= 0, halting not certified");
    if (beta < -2)
        throw error("enumeration query: beta below -2");
    for (int i = 1; i < h.rank(); ++i)
        if (h.c[(size_t)i] > 0)
            throw error("enumeration query: h must have non-positive exceptional parts");
}

mpz_class halting_poly(const EnumQuery& q, long long t) {
    mpz_class h0((long)q.h.c[0]);
    mpz_class h2((long)intersect(q.h, q.h));
    mpz_class tt((long)t);
    mpz_class alpha((long)q.alpha);
    mpz_class beta((long)q.beta);
    mpz_class lin = h0 * tt - alpha;
    return lin * lin - (h0 * h0 - h2) * (tt * tt - beta);
}

namespace {

void partitions_rec(long long total, const std::vector<long long>& weights, size_t idx,
                    std::vector<long long>& cur, std::vector<std::vector<long long>>& out) {
    if (idx == weights.size()) {
        if (total == 0)
            out.push_back(cur);
        return;
    }
    for (long long m = 0; m * weights[idx] <= total; ++m) {
        cur[idx] = m;
        partitions_rec(total - m * weights[idx], weights, idx + 1, cur, out);
    }
    cur[idx] = 0;
}

// enumeration with the square cutoff sum(m_i^2) <= sq_budget; handles
// zero weights, which the plain partition enumeration cannot bound
void bounded_rec(long long total, long long sq_budget, const std::vector<long long>& weights,
                 size_t idx, std::vector<long long>& cur,
                 std::vector<std::vector<long long>>& out) {
    if (sq_budget < 0)
        return;
    if (idx == weights.size()) {
        if (total == 0)
            out.push_back(cur);
        return;
    }
    for (long long m = 0;; ++m) {
        if (weights[idx] > 0 && m * weights[idx] > total)
            break;
        if (m * m > sq_budget)
            break;
        cur[idx] = m;
        bounded_rec(total - m * weights[idx], sq_budget - m * m, weights, idx + 1, cur, out);
    }
    cur[idx] = 0;
}

} // namespace

std::vector<std::vector<long long>> weighted_partitions(long long total,
                                                        const std::vector<long long>& weights) {
    for (long long w : weights)
        if (w <= 0)
            throw error("weighted_partitions needs positive weights");
    std::vector<std::vector<long long>> out;
    if (total < 0)
        return out;
    std::vector<long long> cur(weights.size(), 0);
    partitions_rec(total, weights, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivClass> seed_exceptional(const EnumQuery& q) {
    q.validate();
    int rank = q.h.rank();
    std::vector<DivClass> out;
    for (int i = 1; i < rank; ++i) {
        DivClass e = DivClass::basis(rank, i);
        if (intersect(q.h, e) == q.alpha && q.beta == -1)
            out.push_back(e);
        for (int j = 1; j < rank; ++j) {
            if (i == j)
                continue;
            DivClass d = e - DivClass::basis(rank, j);
            if (intersect(q.h, d) == q.alpha && q.beta == -2)
                out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivClass> enumerate_classes(const EnumQuery& q) {
    q.validate();
    int rank = q.h.rank();
    std::vector<DivClass> out = seed_exceptional(q);
    long long h0 = q.h.c[0];
    std::vector<long long> weights((size_t)(rank - 1));
    for (int i = 1; i < rank; ++i)
        weights[(size_t)(i - 1)] = -q.h.c[(size_t)i];

    long long c0 = 1;
    while (halting_poly(q, c0) <= 0 || halting_poly(q, c0) <= halting_poly(q, c0 - 1)) {
        long long total = h0 * c0 - q.alpha;
        long long sq_budget = c0 * c0 - q.beta;
        if (total >= 0 && sq_budget >= 0) {
            std::vector<std::vector<long long>> ms;
            std::vector<long long> cur(weights.size(), 0);
            bounded_rec(total, sq_budget, weights, 0, cur, ms);
            for (const auto& m : ms) {
                long long sq = 0;
                for (long long v : m)
                    sq += v * v;
                if (c0 * c0 - sq != q.beta)
                    continue;
                DivClass c = DivClass::zero(rank);
                c.c[0] = c0;
                for (int i = 1; i < rank; ++i)
                    c.c[(size_t)i] = -m[(size_t)(i - 1)];
                out.push_back(c);
            }
        }
        ++c0;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace curvefam
