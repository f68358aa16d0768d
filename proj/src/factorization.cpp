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

#include "qgalois/factorization.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "modp.hpp"

namespace qg {

Poly FactorList::product() const {
    Poly r = Poly::constant(unit);
    for (const auto& f : factors) r = r * pow(f.poly, f.multiplicity);
    return r;
}

std::pair<Poly, bool> squarefree_part(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::domain, "squarefree part of zero polynomial");
    Poly g = gcd(f, f.derivative());
    if (g.degree() <= 0) return {f.monic(), false};
    return {(f / g).monic(), true};
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() <= 0) return out;
    Poly a = f.monic();
    Poly da = a.derivative();
    Poly b = gcd(a, da);
    Poly c = a / b;
    Poly d = da / b - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        Poly g = gcd(c, d);
        c = c / g;
        d = d / g - c.derivative();
        if (g.degree() > 0) out.emplace_back(g, i);
    }
    return out;
}

namespace {

using ZPoly = std::vector<Z>;
using modp::PolyP;
using modp::u32;

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void zmod(ZPoly& a, const Z& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
}

void zsymmetric(ZPoly& a, const Z& m) {
    Z half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
}

PolyP to_p(const ZPoly& a, u32 p) {
    PolyP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp::reduce(a[i], p);
    modp::trim(r);
    return r;
}

ZPoly from_p(const PolyP& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

// Exact division over Z; false when b does not divide a.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly* quot) {
    ZPoly r = a;
    int db = zdeg(b);
    if (zdeg(r) < db) return r.empty();
    ZPoly q(static_cast<std::size_t>(zdeg(r) - db + 1));
    for (int i = zdeg(r); i >= db; --i) {
        Z& top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        Z c = top / b.back();
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    ztrim(r);
    if (!r.empty()) return false;
    if (quot) *quot = std::move(q);
    return true;
}

// Lifts a ≡ A, b ≡ B (mod p), monic with A*B ≡ target (mod p), to mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& target, const PolyP& A, const PolyP& B, u32 p, int k) {
    PolyP s, t;
    modp::xgcd(A, B, p, &s, &t);
    ZPoly az = from_p(A), bz = from_p(B);
    Z m = p;
    for (int j = 1; j < k; ++j) {
        ZPoly prod = zmul(az, bz);
        ZPoly e(std::max(target.size(), prod.size()));
        for (std::size_t i = 0; i < target.size(); ++i) e[i] += target[i];
        for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
        for (auto& c : e) c /= m;  // exact by induction
        PolyP ep = to_p(e, p);
        PolyP q, da;
        modp::divrem(modp::mul(t, ep, p), A, p, &q, &da);
        PolyP db = modp::add(modp::mul(s, ep, p), modp::mul(q, B, p), p);
        for (std::size_t i = 0; i < da.size(); ++i) az[i] += m * da[i];
        for (std::size_t i = 0; i < db.size(); ++i) bz[i] += m * db[i];
        m *= p;
    }
    return {az, bz};
}

void hensel_multi(const ZPoly& target, const std::vector<PolyP>& fs, std::size_t lo, std::size_t hi, u32 p,
                  int k, const Z& M, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        ZPoly t = target;
        zmod(t, M);
        out.push_back(t);
        return;
    }
    std::size_t mid = (lo + hi) / 2;
    PolyP A{1}, B{1};
    for (std::size_t i = lo; i < mid; ++i) A = modp::mul(A, fs[i], p);
    for (std::size_t i = mid; i < hi; ++i) B = modp::mul(B, fs[i], p);
    auto [az, bz] = hensel_pair(target, A, B, p, k);
    zmod(az, M);
    zmod(bz, M);
    hensel_multi(az, fs, lo, mid, p, k, M, out);
    hensel_multi(bz, fs, mid, hi, p, k, M, out);
}

bool is_prime_small(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr int kMaxDeg = 128;
using DegSet = std::bitset<kMaxDeg + 1>;

DegSet subset_sums(const std::vector<int>& degs) {
    DegSet s;
    s[0] = true;
    for (int d : degs) s |= (s << static_cast<std::size_t>(d));
    return s;
}

ZPoly primitive(ZPoly h) {
    Z g = 0;
    for (const auto& c : h) g = gcd(g, c);
    if (h.back() < 0) g = -g;
    for (auto& c : h) c /= g;
    return h;
}

// Irreducible factors of a primitive squarefree integer polynomial with G(0) != 0.
std::vector<ZPoly> factor_primitive_squarefree(ZPoly G) {
    int n = zdeg(G);
    if (n <= 1) return {G};
    if (n > kMaxDeg) throw Error(ErrorKind::domain, "degree too large for factorization");

    // first five good primes above 30; keep the one with fewest modular factors
    std::vector<u32> good;
    DegSet allowed;
    allowed.set();
    u32 best = 0;
    std::size_t best_count = 0;
    for (u32 p = 31; good.size() < 5; p += 2) {
        if (p >= (1u << 15)) break;
        if (!is_prime_small(p)) continue;
        if (modp::reduce(G.back(), p) == 0) continue;
        PolyP gp = to_p(G, p);
        if (modp::deg(modp::gcd(gp, modp::derivative(gp, p), p)) != 0) continue;
        good.push_back(p);
        std::vector<int> degs = modp::factor_degrees(gp, p);
        allowed &= subset_sums(degs);
        if (best == 0 || degs.size() < best_count) {
            best = p;
            best_count = degs.size();
        }
    }
    if (best == 0) throw Error(ErrorKind::domain, "no good prime found");
    bool only_trivial = true;
    for (int d = 1; d < n; ++d)
        if (allowed[static_cast<std::size_t>(d)]) only_trivial = false;
    if (best_count == 1 || only_trivial) return {G};

    u32 p = best;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    std::vector<PolyP> mods = modp::factor_squarefree(to_p(G, p), p, rng);
    std::sort(mods.begin(), mods.end());

    // 2 * |lc| * 2^n * ||G||_2 bounds twice every lc-scaled factor coefficient
    Z norm2 = 0;
    for (const auto& c : G) norm2 += c * c;
    Z root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Z bound = 2 * abs(G.back()) * root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    int k = 1;
    Z M = p;
    while (M <= bound) {
        M *= p;
        ++k;
    }
    Z lcinv;
    mpz_invert(lcinv.get_mpz_t(), G.back().get_mpz_t(), M.get_mpz_t());
    ZPoly target = G;
    for (auto& c : target) c *= lcinv;
    zmod(target, M);
    std::vector<ZPoly> lifted;
    hensel_multi(target, mods, 0, mods.size(), p, k, M, lifted);

    std::vector<int> degs;
    for (const auto& u : lifted) degs.push_back(zdeg(u));
    std::vector<std::size_t> rest(lifted.size());
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;

    std::vector<ZPoly> out;
    for (std::size_t s = 1; 2 * s <= rest.size();) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        Z lc = G.back();
        Z c0check = lc * G[0];
        for (;;) {
            int d = 0;
            for (auto i : idx) d += degs[rest[i]];
            if (allowed[static_cast<std::size_t>(d)]) {
                Z c = lc;
                for (auto i : idx) c = (c * lifted[rest[i]][0]) % M;
                mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
                if (c > M / 2) c -= M;
                if (c != 0 && mpz_divisible_p(c0check.get_mpz_t(), c.get_mpz_t())) {
                    ZPoly h{lc};
                    for (auto i : idx) {
                        h = zmul(h, lifted[rest[i]]);
                        zmod(h, M);
                    }
                    zsymmetric(h, M);
                    h = primitive(h);
                    ZPoly q;
                    if (zdivide(G, h, &q)) {
                        out.push_back(h);
                        G = q;
                        std::vector<std::size_t> keep;
                        for (std::size_t j = 0; j < rest.size(); ++j)
                            if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(rest[j]);
                        rest = keep;
                        found = true;
                        break;
                    }
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == rest.size() - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zdeg(G) > 0) out.push_back(primitive(G));
    return out;
}

bool factor_less(const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (int i = 0; i <= a.poly.degree(); ++i)
        if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
    return a.multiplicity < b.multiplicity;
}

}  // namespace

FactorList factor_over_Q(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::domain, "factorization of zero polynomial");
    FactorList fl;
    fl.unit = f.lc();
    for (const auto& [g, e] : squarefree_decomposition(f)) {
        Poly h = g;
        if (h[0] == 0) {
            fl.factors.push_back({Poly::x(), e});
            h = h / Poly::x();
        }
        if (h.degree() <= 0) continue;
        for (const auto& z : factor_primitive_squarefree(primitive_integer(h)))
            fl.factors.push_back({from_integer(z).monic(), e});
    }
    std::sort(fl.factors.begin(), fl.factors.end(), factor_less);
    return fl;
}

DecompType decomposition_type(const FactorList& fl) {
    DecompType dt;
    for (const auto& f : fl.factors) dt.push_back(f.poly.degree() * f.multiplicity);
    std::sort(dt.rbegin(), dt.rend());
    return dt;
}

DecompType decomposition_type(const Poly& f) {
    if (f.degree() < 1) throw Error(ErrorKind::domain, "decomposition type of a constant");
    return decomposition_type(factor_over_Q(f));
}

std::string dt_to_string(const DecompType& dt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dt.size(); ++i) os << (i ? "," : "") << dt[i];
    return os.str();
}

DecompType parse_dt(const std::string& text) {
    DecompType dt;
    std::stringstream ss(text);
    std::string part;
    if (text.empty()) return dt;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.size() > 6 ||
            !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            std::stoi(part) == 0)
            throw Error(ErrorKind::parse, "bad decomposition type '" + text + "'");
        dt.push_back(std::stoi(part));
    }
    if (text.back() == ',') throw Error(ErrorKind::parse, "bad decomposition type '" + text + "'");
    std::sort(dt.rbegin(), dt.rend());
    return dt;
}

bool is_rational_power(const Q& c, int n, Q* root) {
    if (n < 1) throw Error(ErrorKind::domain, "power must be positive");
    if (c < 0 && n % 2 == 0) return false;
    Z num = abs(c.get_num());
    Z rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n))) return false;
    if (!mpz_root(rd.get_mpz_t(), c.get_den().get_mpz_t(), static_cast<unsigned long>(n))) return false;
    if (root) {
        *root = Q(c < 0 ? Z(-rn) : rn, rd);
        root->canonicalize();
    }
    return true;
}

bool is_rational_square(const Q& c, Q* root) { return is_rational_power(c, 2, root); }

std::vector<Q> rational_roots(const Poly& f) {
    std::vector<Q> out;
    if (f.degree() < 1) return out;
    for (const auto& fac : factor_over_Q(f).factors)
        if (fac.poly.degree() == 1) out.push_back(-fac.poly[0]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Z pollard_brent(const Z& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long seed = 1;; ++seed) {
        Z y = seed + 1, c = seed, m = 64, g = 1, r = 1, q = 1, x, ys;
        auto f = [&](const Z& v) { return Z((v * v + c) % n); };
        do {
            x = y;
            for (Z i = 0; i < r; ++i) y = f(y);
            Z k = 0;
            do {
                ys = y;
                for (Z i = 0; i < m && i < r - k; ++i) {
                    y = f(y);
                    q = (q * abs(Z(x - y))) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Z(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_integer(Z n, std::map<Z, int>& out) {
    for (unsigned long d = 2; d < 10000 && Z(d) * d <= n; ++d) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[Z(d)];
            n /= d;
        }
    }
    if (n == 1) return;
    std::function<void(const Z&)> rec = [&](const Z& m) {
        if (m == 1) return;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
            ++out[m];
            return;
        }
        Z r;
        if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), 2)) {
            rec(r);
            rec(r);
            return;
        }
        Z d = pollard_brent(m);
        rec(d);
        rec(m / d);
    };
    rec(n);
}

}  // namespace

Z squarefree_kernel(const Q& c) {
    if (c == 0) throw Error(ErrorKind::domain, "squarefree kernel of zero");
    Z n = abs(Z(c.get_num() * c.get_den()));
    std::map<Z, int> fac;
    factor_integer(n, fac);
    Z k = 1;
    for (const auto& [pr, e] : fac)
        if (e % 2) k *= pr;
    return c < 0 ? Z(-k) : k;
}

}  // namespace qg
