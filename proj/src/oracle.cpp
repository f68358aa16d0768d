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

#include "qgalois/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

namespace qg {

namespace {

class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

Real from_q(const Q& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real from_d(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.get(), d, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

Real rpow(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDU);
    return r;
}

Real two_pow(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

struct Cx {
    Real re, im;
    explicit Cx(mpfr_prec_t prec) : re(prec), im(prec) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real cabs(const Cx& a) {
    Real r(a.re.prec());
    mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDU);
    return r;
}

// Monic quartic with coefficients c[0..3] (c[4] = 1 implied).
struct RealQuartic {
    std::vector<Real> c;
};

void horner(const RealQuartic& f, const Cx& z, Cx& p, Cx& dp) {
    mpfr_prec_t prec = z.re.prec();
    p = Cx(from_d(1, prec), Real(prec));
    dp = Cx(prec);
    for (int k = 3; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + Cx(f.c[static_cast<std::size_t>(k)], Real(prec));
    }
}

// Aberth iteration; returns approximations to the four roots.
std::vector<Cx> aberth(const RealQuartic& f, mpfr_prec_t prec) {
    Real rho = from_d(1, prec);
    for (const Real& a : f.c) {
        Real m(prec);
        mpfr_abs(m.get(), a.get(), MPFR_RNDU);
        if (rho < m + from_d(1, prec)) rho = m + from_d(1, prec);
    }
    std::vector<Cx> z;
    for (int k = 0; k < 4; ++k) {
        double ang = std::numbers::pi * k / 2 + 0.7;
        z.emplace_back(rho * from_d(std::cos(ang), prec), rho * from_d(std::sin(ang), prec));
    }
    Real tol = two_pow(-static_cast<long>(prec) + 24, prec);
    int settled = 0;
    for (int iter = 0; iter < 2000 && settled < 3; ++iter) {
        bool small = true;
        for (std::size_t k = 0; k < 4; ++k) {
            Cx p(prec), dp(prec);
            horner(f, z[k], p, dp);
            if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get())) continue;
            Cx s(prec);
            for (std::size_t j = 0; j < 4; ++j)
                if (j != k) s = s + Cx(from_d(1, prec), Real(prec)) / (z[k] - z[j]);
            Cx w = p / dp;
            Cx corr = w / (Cx(from_d(1, prec), Real(prec)) - w * s);
            if (!mpfr_number_p(corr.re.get()) || !mpfr_number_p(corr.im.get())) {
                z[k] = z[k] + Cx(tol * rho, tol * rho);
                small = false;
                continue;
            }
            z[k] = z[k] - corr;
            if (tol * (from_d(1, prec) + cabs(z[k])) < cabs(corr)) small = false;
        }
        settled = small ? settled + 1 : 0;
    }
    return z;
}

// Radius of a disk around z containing exactly one root, or a negative value.
bool inclusion_radii(const RealQuartic& f, const std::vector<Cx>& z, std::vector<Real>& radii) {
    mpfr_prec_t prec = z[0].re.prec();
    Real unit = two_pow(-static_cast<long>(prec), prec);
    radii.clear();
    for (const Cx& zi : z) {
        Cx p(prec), dp(prec);
        horner(f, zi, p, dp);
        Real az = cabs(zi);
        Real s = from_d(1, prec), sd = from_d(4, prec);
        for (int k = 3; k >= 0; --k) {
            Real ak(prec);
            mpfr_abs(ak.get(), f.c[static_cast<std::size_t>(k)].get(), MPFR_RNDU);
            if (k >= 1) sd = sd * az + from_d(k, prec) * ak;
            s = s * az + ak;
        }
        Real err = from_d(64, prec) * unit * s;
        Real errd = from_d(64, prec) * unit * sd;
        Real num = cabs(p) + err;
        Real den = cabs(dp) - errd;
        if (!(from_d(0, prec) < den)) return false;
        radii.push_back(from_d(8, prec) * num / den + unit);  // 4 |f| / |f'| with a safety factor of 2
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!(radii[i] + radii[j] < cabs(z[i] - z[j]))) return false;
    return true;
}

// Scale by the lcm of denominators so the quartic becomes monic integral.
Z integral_scale(const Poly& f) {
    Z l = 1;
    for (int k = 0; k < 4; ++k) l = lcm(l, f[k].get_den());
    return l;
}

Poly rescale(const Poly& f, const Z& lambda) {
    std::vector<Q> c(5);
    Q pw = 1;
    for (int k = 4; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = f[k] * pw;
        pw *= lambda;
    }
    return Poly(c);
}

RealQuartic to_real(const Poly& f, mpfr_prec_t prec) {
    RealQuartic r;
    for (int k = 0; k < 4; ++k) r.c.push_back(from_q(f[k], prec));
    return r;
}

// x1, x2, -x1, -x2
bool order_even(std::vector<Cx>& z, std::vector<Real>& r) {
    auto partner = [&](std::size_t i, const std::vector<std::size_t>& pool) {
        std::size_t best = pool[0];
        for (std::size_t j : pool)
            if (cabs(z[i] + z[j]) < cabs(z[i] + z[best])) best = j;
        return best;
    };
    std::size_t p0 = partner(0, {1, 2, 3});
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < 4; ++j)
        if (j != p0) rest.push_back(j);
    std::size_t x2 = rest[0], p2 = rest[1];
    std::array<std::size_t, 4> idx{0, x2, p0, p2};
    std::vector<Cx> nz;
    std::vector<Real> nr;
    for (std::size_t i : idx) {
        nz.push_back(z[i]);
        nr.push_back(r[i]);
    }
    z = std::move(nz);
    r = std::move(nr);
    return true;
}

std::vector<std::array<int, 4>> matchings(OracleTag tag) {
    std::vector<std::array<int, 4>> out;
    if (tag == OracleTag::d4) {
        return {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
                {2, 1, 0, 3}, {0, 3, 2, 1}, {1, 0, 3, 2}, {3, 2, 1, 0}};
    }
    std::array<int, 4> p{0, 1, 2, 3};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool attempt(const Poly& fi, const Poly& gi, OracleTag tag, mpfr_prec_t prec, std::vector<Z>& coeffs) {
    RealQuartic f = to_real(fi, prec), g = to_real(gi, prec);
    std::vector<Cx> x = aberth(f, prec), y = aberth(g, prec);
    std::vector<Real> rx, ry;
    if (!inclusion_radii(f, x, rx) || !inclusion_radii(g, y, ry)) return false;
    if (tag == OracleTag::d4) {
        order_even(x, rx);
        order_even(y, ry);
    }
    Real unit = two_pow(-static_cast<long>(prec), prec);
    auto perms = matchings(tag);
    const long n = static_cast<long>(perms.size());
    std::vector<Cx> theta;
    Real eps(prec), big(prec);
    for (const auto& pi : perms) {
        Cx t(prec);
        Real e(prec), mag(prec);
        for (std::size_t i = 0; i < 4; ++i) {
            std::size_t j = static_cast<std::size_t>(pi[i]);
            t = t + x[i] * y[j];
            Real ax = cabs(x[i]), ay = cabs(y[j]);
            e = e + ax * ry[j] + ay * rx[i] + rx[i] * ry[j];
            mag = mag + ax * ay;
        }
        e = e + from_d(16, prec) * unit * mag;
        if (eps < e) eps = e;
        Real at = cabs(t);
        if (big < at) big = at;
        theta.push_back(t);
    }
    // coefficients of prod (X - theta), ascending
    std::vector<Cx> c;
    c.emplace_back(from_d(1, prec), Real(prec));
    for (const Cx& t : theta) {
        std::vector<Cx> nc(c.size() + 1, Cx(prec));
        for (std::size_t k = 0; k < c.size(); ++k) {
            nc[k + 1] = nc[k + 1] + c[k];
            nc[k] = nc[k] - t * c[k];
        }
        c = std::move(nc);
    }
    Real one = from_d(1, prec);
    Real base = big + eps + one;
    Real rad = from_d(static_cast<double>(n), prec) * eps * rpow(base, n - 1) +
               from_d(static_cast<double>(4 * n), prec) * unit * rpow(base, n);
    rad = from_d(2, prec) * rad;
    Real half = from_d(0.5, prec);
    if (!(rad < half)) return false;
    coeffs.clear();
    for (const Cx& ck : c) {
        Real rounded(prec);
        mpfr_round(rounded.get(), ck.re.get());
        Real dist = cabs(Cx(ck.re - rounded, ck.im));
        if (rad < dist) return false;
        Z zk;
        mpfr_get_z(zk.get_mpz_t(), rounded.get(), MPFR_RNDN);
        coeffs.push_back(zk);
    }
    return true;
}

}  // namespace

long oracle_start_bits() {
    const char* env = std::getenv("QG_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return 256;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 64) return 256;
    return std::min(v, 8192L);
}

OracleResult numeric_matching_oracle(const Poly& f, const Poly& g, OracleTag tag, long start_bits) {
    for (const Poly* h : {&f, &g}) {
        if (h->degree() != 4 || h->lc() != 1) throw Error(ErrorKind::domain, "oracle expects monic quartics");
        if (discriminant(*h) == 0) throw Error(ErrorKind::inseparable, "oracle input is inseparable");
        if (tag == OracleTag::d4 && (h->coeff(1) != 0 || h->coeff(3) != 0))
            throw Error(ErrorKind::domain, "D4 matching oracle expects even quartics");
    }
    Z lf = integral_scale(f), lg = integral_scale(g);
    Poly fi = rescale(f, lf), gi = rescale(g, lg);
    Q scale = Q(lf * lg);
    long bits = start_bits > 0 ? start_bits : oracle_start_bits();
    for (; bits <= 8192; bits *= 2) {
        std::vector<Z> c;
        if (!attempt(fi, gi, tag, static_cast<mpfr_prec_t>(bits), c)) continue;
        // prod (X - theta) = scale^-N prod (scale X - scale theta)
        const int n = static_cast<int>(c.size()) - 1;
        std::vector<Q> out(c.size());
        Q pw = 1;
        for (int k = n; k >= 0; --k) {
            out[static_cast<std::size_t>(k)] = Q(c[static_cast<std::size_t>(k)]) / pw;
            pw *= scale;
        }
        return OracleResult{Poly(out), bits};
    }
    throw Error(ErrorKind::precision, "precision insufficient, retry higher");
}

}  // namespace qg
