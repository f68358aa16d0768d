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

#ifndef QGALOIS_FACTORIZATION_HPP
#define QGALOIS_FACTORIZATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgalois/exact_poly.hpp"

namespace qg {

struct Factor {
    Poly poly;  // monic, irreducible over Q
    int multiplicity = 1;
};

struct FactorList {
    Q unit;
    std::vector<Factor> factors;  // sorted by degree, then coefficients

    Poly product() const;
};

// Multiset of parts, kept in non-increasing order.
using DecompType = std::vector<int>;

// f / gcd(f, f'), monic; the flag reports whether f had repeated factors.
std::pair<Poly, bool> squarefree_part(const Poly& f);
// Yun's algorithm: monic f = prod g_i^i, returns the non-trivial (g_i, i).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

FactorList factor_over_Q(const Poly& f);

// Block reading: a factor g^e contributes the single part deg(g)*e.
DecompType decomposition_type(const FactorList& fl);
DecompType decomposition_type(const Poly& f);
std::string dt_to_string(const DecompType& dt);
DecompType parse_dt(const std::string& text);

bool is_rational_square(const Q& c, Q* root = nullptr);
bool is_rational_power(const Q& c, int n, Q* root = nullptr);
std::vector<Q> rational_roots(const Poly& f);  // sorted, without multiplicity

// Squarefree integer d with c = d * (rational square); c != 0.
Z squarefree_kernel(const Q& c);

}  // namespace qg

#endif
