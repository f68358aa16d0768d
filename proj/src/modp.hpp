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

// Dense polynomials over Z/p for small primes p < 2^15.
#ifndef QGALOIS_SRC_MODP_HPP
#define QGALOIS_SRC_MODP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace qg::modp {

using u32 = std::uint32_t;
using PolyP = std::vector<u32>;  // low degree first, trimmed

int deg(const PolyP& a);
void trim(PolyP& a);
u32 inv(u32 a, u32 p);
u32 reduce(const mpz_class& z, u32 p);

PolyP add(const PolyP& a, const PolyP& b, u32 p);
PolyP sub(const PolyP& a, const PolyP& b, u32 p);
PolyP mul(const PolyP& a, const PolyP& b, u32 p);
PolyP scalar_mul(const PolyP& a, u32 c, u32 p);
void divrem(const PolyP& a, const PolyP& b, u32 p, PolyP* q, PolyP* r);
PolyP rem(const PolyP& a, const PolyP& b, u32 p);
PolyP monic(const PolyP& a, u32 p);
PolyP gcd(PolyP a, PolyP b, u32 p);
// s*a + t*b = g (monic)
PolyP xgcd(const PolyP& a, const PolyP& b, u32 p, PolyP* s, PolyP* t);
PolyP derivative(const PolyP& a, u32 p);
PolyP powmod(const PolyP& base, const mpz_class& e, const PolyP& m, u32 p);

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial, p odd.
std::vector<PolyP> factor_squarefree(const PolyP& f, u32 p, std::mt19937_64& rng);
// Degrees of the irreducible factors, from distinct-degree factorization only.
std::vector<int> factor_degrees(const PolyP& f, u32 p);

}  // namespace qg::modp

#endif
