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

#include "modp.hpp"

#include <algorithm>
#include <utility>

#include "qgalois/simd.hpp"

namespace qg::modp {

int deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u32 inv(u32 a, u32 p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p;
    return static_cast<u32>(t);
}

u32 reduce(const mpz_class& z, u32 p) { return static_cast<u32>(mpz_fdiv_ui(z.get_mpz_t(), p)); }

PolyP add(const PolyP& a, const PolyP& b, u32 p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

PolyP sub(const PolyP& a, const PolyP& b, u32 p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

PolyP mul(const PolyP& a, const PolyP& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) simd::axpy_mod(r.data() + i, b.data(), b.size(), a[i], p);
    trim(r);
    return r;
}

PolyP scalar_mul(const PolyP& a, u32 c, u32 p) {
    PolyP r(a.size(), 0);
    simd::axpy_mod(r.data(), a.data(), a.size(), c % p, p);
    trim(r);
    return r;
}

void divrem(const PolyP& a, const PolyP& b, u32 p, PolyP* q, PolyP* r) {
    PolyP rr = a;
    int db = deg(b);
    u32 li = inv(b.back(), p);
    PolyP qq;
    if (deg(rr) >= db) qq.assign(static_cast<std::size_t>(deg(rr) - db + 1), 0);
    for (int i = deg(rr); i >= db; --i) {
        u32 c = static_cast<u32>((static_cast<std::uint64_t>(rr[static_cast<std::size_t>(i)]) * li) % p);
        if (c == 0) continue;
        qq[static_cast<std::size_t>(i - db)] = c;
        simd::axpy_mod(rr.data() + (i - db), b.data(), b.size(), p - c, p);
    }
    rr.resize(static_cast<std::size_t>(std::max(0, std::min(deg(a) + 1, db))));
    trim(rr);
    trim(qq);
    if (q) *q = std::move(qq);
    if (r) *r = std::move(rr);
}

PolyP rem(const PolyP& a, const PolyP& b, u32 p) {
    PolyP r;
    divrem(a, b, p, nullptr, &r);
    return r;
}

PolyP monic(const PolyP& a, u32 p) {
    if (a.empty()) return a;
    return scalar_mul(a, inv(a.back(), p), p);
}

PolyP gcd(PolyP a, PolyP b, u32 p) {
    while (!b.empty()) {
        PolyP r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

PolyP xgcd(const PolyP& a, const PolyP& b, u32 p, PolyP* s, PolyP* t) {
    PolyP r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        PolyP q, r;
        divrem(r0, r1, p, &q, &r);
        PolyP s2 = sub(s0, mul(q, s1, p), p);
        PolyP t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u32 li = inv(r0.back(), p);
    if (s) *s = scalar_mul(s0, li, p);
    if (t) *t = scalar_mul(t0, li, p);
    return scalar_mul(r0, li, p);
}

PolyP derivative(const PolyP& a, u32 p) {
    if (a.size() <= 1) return {};
    PolyP r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = static_cast<u32>((static_cast<std::uint64_t>(a[i]) * (i % p)) % p);
    trim(r);
    return r;
}

PolyP powmod(const PolyP& base, const mpz_class& e, const PolyP& m, u32 p) {
    PolyP result{1};
    result = rem(result, m, p);
    PolyP b = rem(base, m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
    }
    return result;
}

namespace {

// (factor, degree of each irreducible piece)
std::vector<std::pair<PolyP, int>> distinct_degree(PolyP f, u32 p) {
    std::vector<std::pair<PolyP, int>> out;
    PolyP x{0, 1};
    PolyP h = x;
    mpz_class pz(p);
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = powmod(h, pz, f, p);
        PolyP g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            PolyP q;
            divrem(f, g, p, &q, nullptr);
            f = std::move(q);
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

void equal_degree(const PolyP& f, int d, u32 p, std::mt19937_64& rng, std::vector<PolyP>& out) {
    int n = deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u32> dist(0, p - 1);
    for (;;) {
        PolyP a(static_cast<std::size_t>(n));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (deg(a) < 1) continue;
        PolyP b = sub(powmod(a, e, f, p), PolyP{1}, p);
        PolyP g = gcd(f, b, p);
        if (deg(g) > 0 && deg(g) < n) {
            PolyP q;
            divrem(f, g, p, &q, nullptr);
            equal_degree(g, d, p, rng, out);
            equal_degree(monic(q, p), d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyP> factor_squarefree(const PolyP& f, u32 p, std::mt19937_64& rng) {
    std::vector<PolyP> out;
    for (auto& [g, d] : distinct_degree(monic(f, p), p)) equal_degree(g, d, p, rng, out);
    return out;
}

std::vector<int> factor_degrees(const PolyP& f, u32 p) {
    std::vector<int> out;
    for (auto& [g, d] : distinct_degree(monic(f, p), p))
        for (int k = 0; k < deg(g) / d; ++k) out.push_back(d);
    return out;
}

}  // namespace qg::modp
