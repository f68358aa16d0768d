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

#ifndef QGALOIS_ORACLE_HPP
#define QGALOIS_ORACLE_HPP

#include "qgalois/exact_poly.hpp"

namespace qg {

enum class OracleTag {
    s4,  // all 24 matchings
    d4,  // the 8 matchings of <(1234),(13)> with roots ordered x1, x2, -x1, -x2 (even quartics only)
};

struct OracleResult {
    Poly resolvent;  // prod over matchings pi of (X - sum_i x_i y_pi(i))
    long bits = 0;   // working precision that certified the result
};

// QG_PRECISION_BITS, default 256.
long oracle_start_bits();

// Numeric matching resolvent of two monic separable quartics. Roots are certified by
// disjoint inclusion disks, coefficients are rounded to integers on integral rescalings
// and accepted only when the error radius is below 1/2. The precision doubles up to 8192
// bits; beyond that an Error of kind precision is thrown.
OracleResult numeric_matching_oracle(const Poly& f, const Poly& g, OracleTag tag, long start_bits = 0);

}  // namespace qg

#endif
