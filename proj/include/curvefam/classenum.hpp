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

#include <vector>

#include "curvefam/nslattice.hpp"

namespace curvefam {

/// Query for divisor classes of degree alpha and self-intersection beta.
struct EnumQuery {
    DivClass h;
    long long alpha = 0;
    long long beta = -2;

    /// h^2 > 0 (halting certificate) and h_0 > 0; beta >= -2.
    void validate() const;
};

/// The certificate polynomial f(t) = (h0 t - alpha)^2 - (h0^2 - h^2)(t^2 - beta).
/// Every admissible class satisfies f(c0) <= 0 by Cauchy-Schwarz, and f
/// eventually increases strictly, which bounds the search.
mpz_class halting_poly(const EnumQuery& q, long long t);

/// All (m_1..m_r) with m_i >= 0 and sum(weights_i * m_i) = total.
/// Weights must be positive.
std::vector<std::vector<long long>> weighted_partitions(long long total,
                                                        const std::vector<long long>& weights);

/// Exceptional seeds e_i and e_i - e_j matching (degree, self-intersection).
std::vector<DivClass> seed_exceptional(const EnumQuery& q);

/// Seeds plus all classes with c0 >= 1, c_i <= 0, h.c = alpha, c^2 = beta,
/// sorted lexicographically.
std::vector<DivClass> enumerate_classes(const EnumQuery& q);

} // namespace curvefam
