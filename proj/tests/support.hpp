/*
   Copyright 2026 The qgalois Authors

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

#ifndef QGALOIS_TESTS_SUPPORT_HPP
#define QGALOIS_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qgalois/exact_poly.hpp"

namespace qgt {

using qg::Poly;
using qg::Q;

// Determinant by exact Gaussian elimination.
inline Q det(std::vector<std::vector<Q>> m) {
    const std::size_t n = m.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Q(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Q f = m[r][c] / m[c][c];
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// Resultant as the determinant of the Sylvester matrix.
inline Q sylvester_resultant(const Poly& f, const Poly& g) {
    const int m = f.degree(), n = g.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Q>> s(size, std::vector<Q>(size, Q(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g[n - k];
    return det(s);
}

// Discriminant of a monic quartic from the textbook invariants.
inline Q quartic_discriminant(const Poly& f) {
    Q a = f[4], b = f[3], c = f[2], d = f[1], e = f[0];
    return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
           144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
           6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
           16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
           18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
           b * b * c * c * d * d;
}

inline Q rand_q(std::mt19937_64& rng, int num, int den = 1) {
    std::uniform_int_distribution<int> n(-num, num), d(1, den);
    return qg::make_q(n(rng), d(rng));
}

inline Poly rand_poly(std::mt19937_64& rng, int degree, int num, int den = 1) {
    std::vector<Q> c;
    for (int i = 0; i < degree; ++i) c.push_back(rand_q(rng, num, den));
    c.push_back(Q(1));
    return Poly(c);
}

}  // namespace qgt

#endif
