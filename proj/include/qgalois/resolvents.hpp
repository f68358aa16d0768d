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

#ifndef QGALOIS_RESOLVENTS_HPP
#define QGALOIS_RESOLVENTS_HPP

#include <string>

#include "qgalois/exact_poly.hpp"
#include "qgalois/quartic_forms.hpp"

namespace qg {

enum class ResolventCase { s4_pair, d4_pair, c4_pair, v4_pair };

std::string case_name(ResolventCase c);

// Multi-resolvent by Theta = x1 y1 + x2 y2 + x3 y3 + x4 y4.
//   s4_pair: total = G1^2 - D D' G2^2, part1 = G1 (deg 12), part2 = G2 (deg 6)
//   d4_pair: total = R1 * R2^2,       part1 = R1 (deg 8),  part2 = R2 (deg 8)
struct MultiResolvent {
    ResolventCase tag = ResolventCase::s4_pair;
    Poly total;
    Poly part1;
    Poly part2;
};

// S4-forms (s,t) and (s',t').
MultiResolvent resolvent_s4(const Q& s, const Q& t, const Q& s2, const Q& t2);
// D4-forms (s,t) and (s',t').
MultiResolvent resolvent_d4(const Q& s, const Q& t, const Q& s2, const Q& t2);

// The two quartics X^4 - a a' X^2 + a^2 a'^2 (c +- c')^2 / ((c^2+4)(c'^2+4)) for C4-forms (a,c), (a',c').
struct C4PairResolvent {
    Poly plus;
    Poly minus;
    Q A;       // -a a'
    Q c_plus;  // (c c' - 4) / (c + c')
    Q c_minus; // (c c' + 4) / (c - c')
};
C4PairResolvent resolvent_c4_pair(const Q& a, const Q& c, const Q& a2, const Q& c2);

// V4-forms (s,v), (s',v'): product of the two displayed quartics.
Poly resolvent_v4(const Q& s, const Q& v, const Q& s2, const Q& v2);

}  // namespace qg

#endif
