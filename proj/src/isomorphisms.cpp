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

#include "qgalois/isomorphisms.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "qgalois/factorization.hpp"
#include "qgalois/intersection.hpp"

namespace qg {

namespace {

Poly poly_P(const Q& s, const Q& t) {
    return Poly{std::vector<Q>{
        Q(-2*s*s + 8*t),
        Q(6*t),
        Q(s),
    }};
}

Poly poly_Q(const Q& s, const Q& t) {
    return Poly{std::vector<Q>{
        Q(-8*t*t),
        Q(-8*s*t),
        Q(-2*s*s + 8*t),
        Q(t),
    }};
}

Poly poly_R(const Q& s, const Q& t) {
    return Poly{std::vector<Q>{
        Q(s*s*s*s + 16*t*t - 8*t*s*s + 8*s*t*t),
        Q(-8*t*t + 2*t*s*s),
        Q(s*s*s - 4*s*t),
        Q(-s*t),
        Q(t),
    }};
}

Poly poly_S(const Q& s, const Q& t) {
    return Poly{std::vector<Q>{
        Q(-64*t*t),
        Q(0),
        Q(-64*t + 16*s*s),
        Q(0),
        Q(8*s),
        Q(0),
        Q(1),
    }};
}

Poly poly_U(const Q& s, const Q& t, const Q& u) {
    return Poly{std::vector<Q>{
        Q(-6*t*t + 16*s*s*s + s*u*u - 48*s*t - 8*u*s*s + 16*t*u),
        Q(-28*s*t + 6*t*u),
        Q(-2*s*s + 8*t),
    }};
}

Poly poly_V(const Q& s, const Q& t, const Q& u) {
    return Poly{std::vector<Q>{
        Q(8*t*t*t - t*u*u*u - 96*s*t*t + 16*u*t*t + 96*t*s*s*s - 64*t*u*s*s + 14*s*t*u*u),
        Q(32*s*s*s*s + 128*t*t - 160*t*s*s - 40*s*t*t - 16*u*s*s*s - 8*t*u*u + 2*s*s*u*u + 12*u*t*t + 64*s*t*u),
        Q(64*t*t - 32*t*s*s + 8*s*t*u),
        Q(8*t*t),
    }};
}

Poly poly_W(const Q& s, const Q& t, const Q& u) {
    return Poly{std::vector<Q>{
        Q(-3*t*t*t*t + 256*t*t*t + t*u*u*u*u - 32*u*t*t*t - 3*t*t*u*u*u + 32*t*t*u*u + 144*s*t*t*t + 144*s*s*s*t*t - 128*s*u*t*t - 120*u*s*s*t*t - 8*s*t*u*u*u + 16*t*s*s*u*u + 33*s*t*t*u*u),
        Q(256*t*t*t - 288*s*s*t*t - 18*u*t*t*t + 68*s*t*t*t + 96*t*s*s*s*s - s*t*u*u*u - 64*t*u*s*s*s + 14*t*s*s*u*u + 80*s*u*t*t),
        Q(16*s*s*s*s*s + 120*t*t*t + s*s*s*u*u - 112*t*s*s*s - 64*u*t*t - 8*u*s*s*s*s + 2*s*s*t*t + 192*s*t*t - 4*s*t*u*u + 48*t*u*s*s),
        Q(24*t*t*t - 8*u*t*t - 4*t*s*s*s + 16*s*t*t + 2*t*u*s*s),
        Q(s*s*s*s + 16*t*t - 8*t*s*s + 8*s*t*t),
    }};
}

void require_kind(const QuarticForm& f, FormKind kind) {
    if (f.kind != kind)
        throw Error(ErrorKind::form_mismatch, "expected " + form_kind_name(kind) + "-form, got " +
                                                  form_kind_name(f.kind) + "-form");
}

void require_separable(const QuarticForm& f) {
    if (!f.separable()) throw Error(ErrorKind::inseparable, "source form " + f.to_string() + " is inseparable");
}

}  // namespace

Q param_at(std::size_t i) {
    if (i == 0) return Q(0);
    long k = static_cast<long>((i + 1) / 2);
    return Q(i % 2 == 1 ? k : -k);
}

Q s4_P(const Q& s, const Q& t, const Q& p) { return poly_P(s, t).eval(p); }
Q s4_Q(const Q& s, const Q& t, const Q& p) { return poly_Q(s, t).eval(p); }
Q s4_R(const Q& s, const Q& t, const Q& p) { return poly_R(s, t).eval(p); }
Q s4_S(const Q& s, const Q& t, const Q& p) { return poly_S(s, t).eval(p); }
Q s4_U(const Q& s, const Q& t, const Q& u, const Q& v) { return poly_U(s, t, u).eval(v); }
Q s4_V(const Q& s, const Q& t, const Q& u, const Q& v) { return poly_V(s, t, u).eval(v); }
Q s4_W(const Q& s, const Q& t, const Q& u, const Q& v) { return poly_W(s, t, u).eval(v); }

FamilyPoint isom_s4_case1(const QuarticForm& a, const Q& p) {
    require_kind(a, FormKind::s4);
    require_separable(a);
    const Q& s = a.p1;
    const Q& t = a.p2;
    Q R = s4_R(s, t, p);
    if (R == 0) throw Error(ErrorKind::domain, "excluded parameter: R vanishes at p = " + to_string(p));
    Q Qv = s4_Q(s, t, p);
    if (Qv == 0) throw Error(ErrorKind::domain, "degenerate target: Q vanishes at p = " + to_string(p));
    Q P = s4_P(s, t, p);
    FamilyPoint pt;
    pt.source = a;
    pt.family = "s4-p";
    pt.params = {p};
    pt.target = make_form(FormKind::s4, P * Qv * Qv / (R * R), Qv * Qv * Qv * Qv / (R * R * R));
    if (!pt.target.separable())
        throw Error(ErrorKind::inseparable, "target inseparable: S vanishes at p = " + to_string(p));
    Q z = 2 * Qv / R;
    pt.witness = TschirnhausenMap{Q(s * z / 2), Q(p * z / 2), z, Q(0)};
    return pt;
}

FamilyPoint isom_s4_case2(const QuarticForm& a, const Q& u, const Q& v) {
    require_kind(a, FormKind::s4);
    require_separable(a);
    const Q& s = a.p1;
    const Q& t = a.p2;
    Q W = s4_W(s, t, u, v);
    if (W == 0) throw Error(ErrorKind::domain, "excluded parameter: W vanishes");
    Q V = s4_V(s, t, u, v);
    if (V == 0) throw Error(ErrorKind::domain, "degenerate target: V vanishes");
    Q U = s4_U(s, t, u, v);
    FamilyPoint pt;
    pt.source = a;
    pt.family = "s4-uv";
    pt.params = {u, v};
    pt.target = make_form(FormKind::s4, U * V * V / (W * W), V * V * V * V / (W * W * W));
    if (!pt.target.separable()) throw Error(ErrorKind::inseparable, "target inseparable");
    Q w = -4 * V / W;
    pt.witness = TschirnhausenMap{Q((3 * t + s * v) * w / 4), Q(u * w / 4), Q(v * w / 2), w};
    return pt;
}

S4Family::S4Family(const QuarticForm& a) : a_(a) {
    require_kind(a, FormKind::s4);
    require_separable(a);
}

FamilyPoint S4Family::next() {
    for (;;) {
        Q p = param_at(i_++);
        const Q& s = a_.p1;
        const Q& t = a_.p2;
        std::string why;
        if (s4_Q(s, t, p) == 0) why = "Q";
        else if (s4_R(s, t, p) == 0) why = "R";
        else if (s4_S(s, t, p) == 0) why = "S";
        if (!why.empty()) {
            skipped_.push_back({{p}, why + " = 0"});
            continue;
        }
        return isom_s4_case1(a_, p);
    }
}

S4UVFamily::S4UVFamily(const QuarticForm& a) : a_(a) {
    require_kind(a, FormKind::s4);
    require_separable(a);
}

// Pairs (i, j) with max(i, j) = k, for k = 0, 1, 2, ...
FamilyPoint S4UVFamily::next() {
    for (;;) {
        std::size_t i, j;
        if (j_ <= k_) {
            i = k_;
            j = j_;
        } else {
            i = j_ - k_ - 1;
            j = k_;
        }
        if (++j_ > 2 * k_) {
            ++k_;
            j_ = 0;
        }
        Q u = param_at(i), v = param_at(j);
        try {
            return isom_s4_case2(a_, u, v);
        } catch (const Error& e) {
            skipped_.push_back({{u, v}, e.what()});
        }
    }
}

std::string branch_name(D4Branch b) { return b == D4Branch::same_orbit ? "same-orbit" : "dual-orbit"; }

namespace {

// Roots of X^4 + A X^2 + K in Q.
std::vector<Q> biquadratic_roots(const Q& A, const Q& K) {
    std::vector<Q> out;
    Q delta;
    if (!is_rational_square(Q(A * A - 4 * K), &delta)) return out;
    for (int sg : {1, -1}) {
        Q z = (-A + sg * delta) / 2;
        Q r;
        if (z >= 0 && is_rational_square(z, &r)) {
            out.push_back(r);
            out.push_back(Q(-r));
        }
        if (delta == 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Rational roots of alpha Z^2 + beta Z + gamma.
std::vector<Q> quadratic_roots(const Q& alpha, const Q& beta, const Q& gamma) {
    if (alpha == 0) {
        if (beta == 0) return {};
        return {Q(-gamma / beta)};
    }
    Q d;
    if (!is_rational_square(Q(beta * beta - 4 * alpha * gamma), &d)) return {};
    Q z1 = (-beta + d) / (2 * alpha), z2 = (-beta - d) / (2 * alpha);
    if (z1 == z2) return {z1};
    return {z1, z2};
}

std::vector<Q> signed_sqrts(const Q& z) {
    Q r;
    if (z < 0 || !is_rational_square(z, &r)) return {};
    if (r == 0) return {Q(0)};
    return {r, Q(-r)};
}

Q height(const Q& x) {
    Z n = abs(x.get_num());
    return n > x.get_den() ? Q(n) : Q(x.get_den());
}

bool within(const Q& x, long bound) { return height(x) <= bound; }

// Rationals with height exactly h, in the order num/den with small den first, positive first.
std::vector<Q> rationals_of_height(long h) {
    if (h == 0) return {Q(0)};
    std::vector<Q> out;
    for (long den = 1; den <= h; ++den) {
        for (long num = 0; num <= h; ++num) {
            if (std::max(num, den) != h || std::gcd(num, den) != 1 || num == 0) continue;
            out.push_back(Q(num, den));
            out.push_back(Q(-num, den));
        }
    }
    return out;
}

// (p,q) with ap^2 - 4bpq + abq^2 = A2 and b(p^2 - apq + bq^2)^2 = B2.
std::vector<std::pair<Q, Q>> solve_same_orbit(const Q& a, const Q& b, const Q& A2, const Q& B2) {
    std::vector<std::pair<Q, Q>> out;
    Q m;
    if (b == 0 || !is_rational_square(Q(B2 / b), &m) || m == 0) return out;
    Q d = a * a - 4 * b;
    for (const Q& sigma : {m, Q(-m)}) {
        if (a * sigma == A2)
            for (const Q& p : signed_sqrts(sigma)) out.emplace_back(p, Q(0));
        Q k = (A2 - a * sigma) / d;
        for (const Q& z : quadratic_roots(b, Q(-(a * k + sigma)), Q(k * k))) {
            if (z == 0) continue;
            for (const Q& q : signed_sqrts(z)) out.emplace_back(k / q, q);
        }
    }
    return out;
}

// (p,q) with 2(ap^2 - 4bpq + abq^2) = A2 and (a^2 - 4b)(p^2 - bq^2)^2 = B2.
std::vector<std::pair<Q, Q>> solve_dual_orbit(const Q& a, const Q& b, const Q& A2, const Q& B2) {
    std::vector<std::pair<Q, Q>> out;
    Q d = a * a - 4 * b;
    Q m;
    if (b == 0 || d == 0 || !is_rational_square(Q(B2 / d), &m) || m == 0) return out;
    for (const Q& tau : {m, Q(-m)}) {
        if (2 * a * tau == A2)
            for (const Q& p : signed_sqrts(tau)) out.emplace_back(p, Q(0));
        Q kappa = a * tau - A2 / 2;
        Q alpha = 4 * b * b * d;
        Q beta = 4 * a * b * kappa - 16 * b * b * tau;
        for (const Q& z : quadratic_roots(alpha, beta, Q(kappa * kappa))) {
            if (z == 0) continue;
            for (const Q& q : signed_sqrts(z)) out.emplace_back((kappa + 2 * a * b * q * q) / (4 * b * q), q);
        }
    }
    return out;
}

}  // namespace

FamilyPoint d4_isom_param(const QuarticForm& a, const Q& p, const Q& q, D4Branch branch) {
    require_kind(a, FormKind::d4);
    require_separable(a);
    const Q& A = a.p1;
    const Q& B = a.p2;
    FamilyPoint pt;
    pt.family = "d4-pq";
    pt.branch = branch_name(branch);
    pt.params = {p, q};
    Q lin = A * p * p - 4 * B * p * q + A * B * q * q;
    if (branch == D4Branch::same_orbit) {
        Q e = p * p - A * p * q + B * q * q;
        pt.source = a;
        pt.target = make_form(FormKind::d4, lin, B * e * e);
        pt.witness = TschirnhausenMap{Q(0), Q(A * q - p), Q(0), q};
    } else {
        Q e = p * p - B * q * q;
        pt.source = dual_d4_form(a);
        pt.target = make_form(FormKind::d4, Q(2 * lin), Q((A * A - 4 * B) * e * e));
        pt.witness = TschirnhausenMap{Q(0), Q(p + A * q / 2), Q(0), Q(q / 2)};
    }
    if (!pt.target.separable())
        throw Error(ErrorKind::inseparable, "target " + pt.target.to_string() + " is inseparable");
    return pt;
}

FamilyPoint d4_u_point(const QuarticForm& a, const Q& u) {
    require_kind(a, FormKind::d4);
    require_separable(a);
    const Q& A = a.p1;
    const Q& B = a.p2;
    Q e = B - A * u + u * u;
    FamilyPoint pt;
    pt.source = a;
    pt.family = "d4-u";
    pt.params = {u};
    pt.target = make_form(FormKind::d4, A * A * A - 3 * A * B - 2 * A * A * u + 4 * B * u + A * u * u, B * e * e);
    pt.witness = TschirnhausenMap{Q(0), u, Q(0), Q(1)};
    if (!pt.target.separable())
        throw Error(ErrorKind::inseparable, "target " + pt.target.to_string() + " is inseparable");
    return pt;
}

D4FourthPowerFamily::D4FourthPowerFamily(const QuarticForm& a) : a_(a) {
    require_kind(a, FormKind::d4);
    require_separable(a);
}

FamilyPoint D4FourthPowerFamily::next() {
    for (;;) {
        Q u = param_at(i_++);
        Q e = a_.p2 - a_.p1 * u + u * u;
        if (e == 0) {
            skipped_.push_back({{u}, "b - a u + u^2 = 0"});
            continue;
        }
        if (is_rational_square(e)) {
            skipped_.push_back({{u}, "X^2 - (b - a u + u^2) reducible"});
            continue;
        }
        if (is_rational_power(Q(e * e), 4)) {
            skipped_.push_back({{u}, "b'/b is a fourth power"});
            continue;
        }
        FamilyPoint pt = d4_u_point(a_, u);
        pt.family = "d4-hil";
        return pt;
    }
}

D4PQFamily::D4PQFamily(const QuarticForm& a) : a_(a) {
    require_kind(a, FormKind::d4);
    require_separable(a);
}

FamilyPoint D4PQFamily::next() {
    for (;;) {
        std::size_t i = j_ <= k_ ? k_ : j_ - k_ - 1;
        std::size_t j = j_ <= k_ ? j_ : k_;
        D4Branch br = branch_ == 0 ? D4Branch::same_orbit : D4Branch::dual_orbit;
        if (++branch_ == 2) {
            branch_ = 0;
            if (++j_ > 2 * k_) {
                ++k_;
                j_ = 0;
            }
        }
        try {
            return d4_isom_param(a_, param_at(i), param_at(j), br);
        } catch (const Error&) {
        }
    }
}

QuarticForm c4_from_d4(const QuarticForm& d4) {
    require_kind(d4, FormKind::d4);
    const Q& A = d4.p1;
    const Q& B = d4.p2;
    Q c;
    if (A == 0 || B == 0 || !is_rational_square(Q((A * A - 4 * B) / B), &c) || c == 0)
        throw Error(ErrorKind::form_mismatch, d4.to_string() + " is not a C4-form");
    return make_form(FormKind::c4, A, c);
}

QuarticForm d4_from_c4(const QuarticForm& c4) {
    require_kind(c4, FormKind::c4);
    const Q& a = c4.p1;
    const Q& c = c4.p2;
    return make_form(FormKind::d4, a, Q(a * a / (c * c + 4)));
}

namespace {

bool c4_excluded(const Q& c, const Q& c2) { return c2 == c || c2 == -c || c * c2 == 4 || c * c2 == -4; }

void require_c4(const QuarticForm& f) {
    require_kind(f, FormKind::c4);
    if (f.p1 == 0 || f.p2 == 0) throw Error(ErrorKind::domain, "C4-form " + f.to_string() + " needs a c != 0");
}

}  // namespace

C4TestResult c4_test(const QuarticForm& a, const QuarticForm& b, int max_retries) {
    require_c4(a);
    require_c4(b);
    C4TestResult res;
    res.used_a = a;
    res.used_b = b;
    if (c4_excluded(a.p2, b.p2)) {
        res.rewritten = true;
        bool found = false;
        // The rewrite and sign identities first, then Tschirnhausen moves of the second form.
        for (const QuarticForm& cand : {make_form(FormKind::c4, Q(2 * b.p1), Q(4 / b.p2)),
                                        make_form(FormKind::c4, b.p1, Q(-b.p2)),
                                        make_form(FormKind::c4, Q(2 * b.p1), Q(-4 / b.p2))}) {
            if (!c4_excluded(a.p2, cand.p2)) {
                res.used_b = cand;
                found = true;
                break;
            }
        }
        for (int i = 1; !found && i <= max_retries; ++i) {
            try {
                QuarticForm cand = c4_from_d4(d4_u_point(d4_from_c4(b), param_at(static_cast<std::size_t>(i))).target);
                cand.p2 = abs(cand.p2);
                if (!c4_excluded(a.p2, cand.p2)) {
                    res.used_b = cand;
                    found = true;
                }
            } catch (const Error&) {
            }
        }
        if (!found) throw Error(ErrorKind::retries_exhausted, "no admissible C4-form rewrite found");
    }
    C4PairResolvent r = resolvent_c4_pair(res.used_a.p1, res.used_a.p2, res.used_b.p1, res.used_b.p2);
    for (const auto& [name, poly] : {std::pair<const char*, const Poly*>{"plus", &r.plus}, {"minus", &r.minus}}) {
        std::vector<Q> roots = biquadratic_roots(poly->coeff(2), poly->coeff(0));
        if (!roots.empty()) {
            res.equal = true;
            res.roots = std::move(roots);
            res.which = name;
            break;
        }
    }
    return res;
}

bool c4_equal_test(const QuarticForm& a, const QuarticForm& b) { return c4_test(a, b).equal; }

std::vector<QuarticForm> c4_known_identities(const QuarticForm& a) {
    require_c4(a);
    const Q& x = a.p1;
    const Q& c = a.p2;
    Q k = c * c + 4;
    return {make_form(FormKind::c4, Q(k / x), c), make_form(FormKind::c4, Q(2 * x), Q(4 / c)),
            make_form(FormKind::c4, Q(2 * k / x), Q(4 / c))};
}

std::vector<FamilyPoint> c4_family_points(const QuarticForm& a) {
    std::vector<FamilyPoint> out;
    QuarticForm src = d4_from_c4(a);
    for (const QuarticForm& comp : c4_known_identities(a)) {
        QuarticForm dst = d4_from_c4(comp);
        for (const auto& [p, q] : solve_same_orbit(src.p1, src.p2, dst.p1, dst.p2)) {
            FamilyPoint pt = d4_isom_param(src, p, q, D4Branch::same_orbit);
            if (pt.target != dst) continue;
            pt.source = a;
            pt.target = comp;
            pt.family = "c4";
            out.push_back(pt);
            break;
        }
    }
    return out;
}

Poly simplest_quartic(long n) { return Poly{Q(1), Q(n), Q(-6), Q(-n), Q(1)}; }

QuarticForm simplest_c4_form(long n) { return make_form(FormKind::c4, Q(-(n * n + 16)), make_q(n, 2)); }

std::vector<Table2Row> search_table2(long lo, long hi) {
    std::vector<Table2Row> rows;
    for (long b = lo; b <= hi; ++b) {
        long den = 3 * b - 256;
        if (b == 0 || (8 * b) % den != 0) continue;
        Z B = 8 * b / den;
        Table2Row row{Z(b), B, Z(-6 * B * B), Z(-8 * B * B * B)};
        QuarticForm target = isom_s4_case2(make_form(FormKind::s4, Q(0), Q(b)), Q(0), Q(0)).target;
        if (target.p1 != Q(row.a_target) || target.p2 != Q(row.b_target))
            throw Error(ErrorKind::inconsistent, "table 2 row b = " + std::to_string(b) + " disagrees with the family");
        rows.push_back(row);
    }
    return rows;
}

namespace {

// Integer form of the C4 pair test for H_m, H_n: X^4 - A X^2 + 4 A (m +- n)^2 with A = (m^2+16)(n^2+16).
bool simplest_pair_roots(long m, long n, std::vector<Q>& roots) {
    Z A = Z(m * m + 16) * Z(n * n + 16);
    for (long sn : {m + n, m - n}) {
        Z K = 4 * A * Z(sn) * Z(sn);
        Z disc = A * A - 4 * K;
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        Z d = sqrt(disc);
        for (const Z& twice : {Z(A + d), Z(A - d)}) {
            Z z = twice / 2;
            if (twice % 2 != 0 || z < 0 || !mpz_perfect_square_p(z.get_mpz_t())) continue;
            Z r = sqrt(z);
            roots.push_back(Q(r));
            roots.push_back(Q(-r));
        }
        if (!roots.empty()) {
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<SimplestHit> search_simplest(long lo, long hi, int jobs) {
    lo = std::max(lo, 1L);
    std::vector<std::vector<SimplestHit>> found(static_cast<std::size_t>(std::max(jobs, 1)));
    std::atomic<long> next{lo};
    auto worker = [&](std::vector<SimplestHit>& hits) {
        for (long m = next++; m <= hi; m = next++) {
            if (m == 3) continue;
            for (long n = m + 1; n <= hi; ++n) {
                if (n == 3) continue;
                SimplestHit h{m, n, false, false, {}};
                if (m * n == 16) {
                    C4TestResult r = c4_test(simplest_c4_form(m), simplest_c4_form(n));
                    h.equal = r.equal;
                    h.rewritten = true;
                    h.roots = r.roots;
                    hits.push_back(h);
                } else if (simplest_pair_roots(m, n, h.roots)) {
                    h.equal = true;
                    hits.push_back(h);
                }
            }
        }
    };
    if (found.size() == 1) {
        worker(found[0]);
    } else {
        std::vector<std::thread> pool;
        for (auto& hits : found) pool.emplace_back(worker, std::ref(hits));
        for (auto& th : pool) th.join();
    }
    std::vector<SimplestHit> all;
    for (auto& hits : found) all.insert(all.end(), hits.begin(), hits.end());
    std::sort(all.begin(), all.end(),
              [](const SimplestHit& x, const SimplestHit& y) { return std::pair(x.m, x.n) < std::pair(y.m, y.n); });
    return all;
}

namespace {

std::optional<IsomCertificate> certify(FamilyPoint pt, const std::string& family) {
    IsomCertificate cert;
    cert.family = family;
    cert.branch = pt.branch;
    cert.params = pt.params;
    cert.point = std::move(pt);
    return cert;
}

std::optional<IsomCertificate> s4_case1_certificate(const QuarticForm& fa, const QuarticForm& gb, long bound) {
    const Q& s = fa.p1;
    const Q& t = fa.p2;
    Poly P = poly_P(s, t), Qp = poly_Q(s, t), R = poly_R(s, t);
    Poly e1 = gb.p2 * pow(R, 3) - pow(Qp, 4);
    Poly e2 = gb.p1 * pow(R, 2) - P * pow(Qp, 2);
    Poly g = gcd(e1, e2);
    if (g.degree() < 1) return std::nullopt;
    for (const Q& p : rational_roots(g)) {
        if (!within(p, bound)) continue;
        try {
            FamilyPoint pt = isom_s4_case1(fa, p);
            if (pt.target == gb) return certify(std::move(pt), "s4-p");
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

std::optional<IsomCertificate> s4_case2_certificate(const QuarticForm& fa, const QuarticForm& gb, long bound) {
    const Q& s = fa.p1;
    const Q& t = fa.p2;
    for (long h = 0; h <= bound; ++h) {
        for (const Q& u : rationals_of_height(h)) {
            Poly U = poly_U(s, t, u), V = poly_V(s, t, u), W = poly_W(s, t, u);
            Poly e1 = gb.p2 * pow(W, 3) - pow(V, 4);
            Poly e2 = gb.p1 * pow(W, 2) - U * pow(V, 2);
            Poly g = gcd(e1, e2);
            if (g.degree() < 1) continue;
            for (const Q& v : rational_roots(g)) {
                if (!within(v, bound)) continue;
                try {
                    FamilyPoint pt = isom_s4_case2(fa, u, v);
                    if (pt.target == gb) return certify(std::move(pt), "s4-uv");
                } catch (const Error&) {
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<IsomCertificate> d4_certificate(const QuarticForm& fa, const QuarticForm& gb, long bound) {
    for (D4Branch br : {D4Branch::same_orbit, D4Branch::dual_orbit}) {
        auto sols = br == D4Branch::same_orbit ? solve_same_orbit(fa.p1, fa.p2, gb.p1, gb.p2)
                                               : solve_dual_orbit(fa.p1, fa.p2, gb.p1, gb.p2);
        std::sort(sols.begin(), sols.end(), [](const auto& x, const auto& y) {
            Q hx = std::max(height(x.first), height(x.second));
            Q hy = std::max(height(y.first), height(y.second));
            return hx < hy;
        });
        for (const auto& [p, q] : sols) {
            if (!within(p, bound) || !within(q, bound)) continue;
            try {
                FamilyPoint pt = d4_isom_param(fa, p, q, br);
                if (pt.target == gb) return certify(std::move(pt), "d4-pq");
            } catch (const Error&) {
            }
        }
    }
    return std::nullopt;
}

// Both inputs reduce to the same normal form.
std::optional<IsomCertificate> identity_certificate(const QuarticForm& fa, const QuarticForm& gb) {
    if (fa != gb) return std::nullopt;
    FamilyPoint pt;
    pt.source = fa;
    pt.family = "identity";
    pt.target = gb;
    pt.witness = TschirnhausenMap{Q(0), Q(1), Q(0), Q(0)};
    return certify(std::move(pt), "identity");
}

bool in_s4_range(GaloisLabel g) { return g == GaloisLabel::S4 || g == GaloisLabel::A4; }
bool in_d4_range(GaloisLabel g) {
    return g == GaloisLabel::D4 || g == GaloisLabel::C4 || g == GaloisLabel::V4;
}

}  // namespace

std::optional<IsomCertificate> find_isom_certificate(const Poly& f, const Poly& g, long bound) {
    Classification cf = classify(f), cg = classify(g);
    if (in_s4_range(cf.label) && in_s4_range(cg.label)) {
        QuarticForm fa = to_s4_form(f).form;
        QuarticForm gb = to_s4_form(g).form;
        if (auto c = identity_certificate(fa, gb)) return c;
        if (auto c = s4_case1_certificate(fa, gb, bound)) return c;
        return s4_case2_certificate(fa, gb, bound);
    }
    if (in_d4_range(cf.label) && in_d4_range(cg.label) && cf.d4 && cg.d4) {
        if (auto c = identity_certificate(*cf.d4, *cg.d4)) return c;
        return d4_certificate(*cf.d4, *cg.d4, bound);
    }
    return std::nullopt;
}

}  // namespace qg
