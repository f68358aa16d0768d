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

#ifndef QGALOIS_ISOMORPHISMS_HPP
#define QGALOIS_ISOMORPHISMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgalois/exact_poly.hpp"
#include "qgalois/quartic_forms.hpp"

namespace qg {

struct FamilyPoint {
    QuarticForm source;
    std::string family;  // "s4-p", "s4-uv", "d4-u", "d4-pq", "d4-hil", "c4"
    std::string branch;  // "same-orbit" / "dual-orbit" for d4-pq, else empty
    std::vector<Q> params;
    QuarticForm target;
    TschirnhausenMap witness;  // tschirnhausen_transform(source.poly(), witness) == target.poly()
};

// 0, 1, -1, 2, -2, ...
Q param_at(std::size_t i);

// Polynomials in p for the S4 family at (s,t).
Q s4_P(const Q& s, const Q& t, const Q& p);
Q s4_Q(const Q& s, const Q& t, const Q& p);
Q s4_R(const Q& s, const Q& t, const Q& p);
Q s4_S(const Q& s, const Q& t, const Q& p);
// Polynomials in (u,v) for the second S4 family.
Q s4_U(const Q& s, const Q& t, const Q& u, const Q& v);
Q s4_V(const Q& s, const Q& t, const Q& u, const Q& v);
Q s4_W(const Q& s, const Q& t, const Q& u, const Q& v);

// Target (P Q^2 / R^2, Q^4 / R^3), map (s z/2, p z/2, z, 0) with z = 2Q/R.
FamilyPoint isom_s4_case1(const QuarticForm& a, const Q& p);
// Target (U V^2 / W^2, V^4 / W^3), map ((3t + s v) w/4, u w/4, v w/2, w) with w = -4V/W.
FamilyPoint isom_s4_case2(const QuarticForm& a, const Q& u, const Q& v);

struct SkippedParam {
    std::vector<Q> params;
    std::string reason;  // vanishing factor or failed filter
};

// Valid points of isom_s4_case1 over p = 0, 1, -1, 2, ...; p with Q R S = 0 is skipped.
class S4Family {
public:
    explicit S4Family(const QuarticForm& a);
    FamilyPoint next();
    const std::vector<SkippedParam>& skipped() const { return skipped_; }

private:
    QuarticForm a_;
    std::size_t i_ = 0;
    std::vector<SkippedParam> skipped_;
};

// Valid points of isom_s4_case2 over (u,v) pairs ordered by max(index(u), index(v)).
class S4UVFamily {
public:
    explicit S4UVFamily(const QuarticForm& a);
    FamilyPoint next();
    const std::vector<SkippedParam>& skipped() const { return skipped_; }

private:
    QuarticForm a_;
    std::size_t k_ = 0, j_ = 0;
    std::vector<SkippedParam> skipped_;
};

enum class D4Branch { same_orbit, dual_orbit };
std::string branch_name(D4Branch b);

// same-orbit: (a p^2 - 4b p q + a b q^2, b (p^2 - a p q + b q^2)^2), map (0, a q - p, 0, q) from (a,b)
// dual-orbit: (2(a p^2 - 4b p q + a b q^2), (a^2 - 4b)(p^2 - b q^2)^2), map (0, p + a q/2, 0, q/2)
//             from the dual form (2a, a^2 - 4b), which is then the point's source
FamilyPoint d4_isom_param(const QuarticForm& a, const Q& p, const Q& q, D4Branch branch);
// (a^3 - 3ab - 2a^2 u + 4bu + a u^2, b (b - a u + u^2)^2), map (0, u, 0, 1)
FamilyPoint d4_u_point(const QuarticForm& a, const Q& u);

// u-family points over u = 0, 1, -1, ... with X^2 - (b - a u + u^2) irreducible
// and b'/b not a fourth power.
class D4FourthPowerFamily {
public:
    explicit D4FourthPowerFamily(const QuarticForm& a);
    FamilyPoint next();
    const std::vector<SkippedParam>& skipped() const { return skipped_; }

private:
    QuarticForm a_;
    std::size_t i_ = 0;
    std::vector<SkippedParam> skipped_;
};

// Same-orbit and dual-orbit points over (p,q) pairs, skipping inseparable targets.
class D4PQFamily {
public:
    explicit D4PQFamily(const QuarticForm& a);
    FamilyPoint next();

private:
    QuarticForm a_;
    std::size_t k_ = 0, j_ = 0;
    int branch_ = 0;
};

// C4-forms (a,c): X^4 + a X^2 + a^2/(c^2 + 4).
QuarticForm c4_from_d4(const QuarticForm& d4);  // throws form_mismatch if (a^2-4b)/b is not a square
QuarticForm d4_from_c4(const QuarticForm& c4);

struct C4TestResult {
    bool equal = false;
    bool rewritten = false;   // the pair hit the excluded set {+-c, +-4/c}
    QuarticForm used_a, used_b;
    std::vector<Q> roots;     // rational roots of f_{A,C+} or f_{A,C-}
    std::string which;        // "plus", "minus" or empty
};

C4TestResult c4_test(const QuarticForm& a, const QuarticForm& b, int max_retries = 16);
bool c4_equal_test(const QuarticForm& a, const QuarticForm& b);

// ((c^2+4)/a, c), (2a, 4/c), (2(c^2+4)/a, 4/c)
std::vector<QuarticForm> c4_known_identities(const QuarticForm& a);
// Points with witnesses: each companion's D4 model reached from the source's by a u-family
// or same-orbit map found by exact solving; companions without a small witness are omitted.
std::vector<FamilyPoint> c4_family_points(const QuarticForm& a);

// Simplest quartic X^4 - n X^3 - 6 X^2 + n X + 1 and its C4-form (-(n^2+16), n/2).
Poly simplest_quartic(long n);
QuarticForm simplest_c4_form(long n);

struct Table2Row {
    Z b, B, a_target, b_target;  // (b, B, -6B^2, -8B^3)
};
std::vector<Table2Row> search_table2(long lo, long hi);

struct SimplestHit {
    long m = 0, n = 0;
    bool equal = false;
    bool rewritten = false;
    std::vector<Q> roots;
};
// All pairs lo <= m < n <= hi that are equal or needed the rewrite, sorted by (m,n).
std::vector<SimplestHit> search_simplest(long lo, long hi, int jobs = 1);

struct IsomCertificate {
    std::string family;        // "identity", "s4-p", "s4-uv", "d4-pq"
    std::string branch;
    std::vector<Q> params;
    FamilyPoint point;
};
// Looks for parameters with |num|, |den| <= bound mapping the normal form of f to that of g.
std::optional<IsomCertificate> find_isom_certificate(const Poly& f, const Poly& g, long bound);

}  // namespace qg

#endif
