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

#include "qgalois/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace qg {

Q make_q(long num, long den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

Q parse_q(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorKind::parse, "empty number");
    std::size_t slash = s.find('/');
    auto check_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!check_int(num) || !check_int(den)) throw Error(ErrorKind::parse, "bad rational '" + text + "'");
    Z d(den);
    if (d == 0) throw Error(ErrorKind::parse, "zero denominator in '" + text + "'");
    Q q(Z(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

Poly::Poly(std::initializer_list<Q> coeffs) : c_(coeffs) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

Poly::Poly(std::vector<Q> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

Poly Poly::constant(const Q& c) { return Poly(std::vector<Q>{c}); }

Poly Poly::monomial(const Q& c, int degree) {
    std::vector<Q> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Q Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Q(0);
    return c_[static_cast<std::size_t>(i)];
}

const Q& Poly::lc() const {
    if (c_.empty()) throw Error(ErrorKind::zero_divisor, "leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Q inv = 1 / lc();
    Poly r = *this;
    for (auto& q : r.c_) q *= inv;
    return r;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Q> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Q Poly::eval(const Q& x) const {
    Q acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

Poly Poly::shift(const Q& c) const { return compose(Poly{c, Q(1)}); }

Poly Poly::scale(const Q& c) const {
    Poly r = *this;
    Q p = 1;
    for (auto& q : r.c_) {
        q *= p;
        p *= c;
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Q> v(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < f.c_.size(); ++i) v[i] += f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) v[i] += g.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Q> v(f.c_.size() + g.c_.size() - 1);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Q& c, const Poly& f) {
    Poly r = f;
    for (auto& q : r.c_) q *= c;
    r.trim();
    return r;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Q& q = c_[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        Q a = abs(q);
        if (first) {
            if (q < 0) os << '-';
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (i == 0 || !unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly pow(const Poly& f, int e) {
    Poly r = Poly::constant(Q(1)), b = f;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

void divmod(const Poly& f, const Poly& g, Poly& quot, Poly& rem) {
    if (g.is_zero()) throw Error(ErrorKind::zero_divisor, "zero divisor");
    std::vector<Q> r = f.coeffs();
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) {
        quot = Poly();
        rem = f;
        return;
    }
    std::vector<Q> q(static_cast<std::size_t>(df - dg) + 1);
    Q inv = 1 / g.lc();
    for (int i = df; i >= dg; --i) {
        Q c = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - dg)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= c * g[j];
    }
    r.resize(static_cast<std::size_t>(dg));
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly operator/(const Poly& f, const Poly& g) {
    Poly q, r;
    divmod(f, g, q, r);
    if (!r.is_zero()) throw Error(ErrorKind::domain, "inexact polynomial division");
    return q;
}

Poly operator%(const Poly& f, const Poly& g) {
    Poly q, r;
    divmod(f, g, q, r);
    return r;
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f.monic(), b = g.monic();
    while (!b.is_zero()) {
        Poly r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<Z> primitive_integer(const Poly& f, Q* scale) {
    if (f.is_zero()) {
        if (scale) *scale = 0;
        return {};
    }
    Z den = 1;
    for (const auto& q : f.coeffs()) den = lcm(den, Z(q.get_den()));
    std::vector<Z> v;
    v.reserve(f.coeffs().size());
    Z content = 0;
    for (const auto& q : f.coeffs()) {
        Z c = q.get_num() * (den / q.get_den());
        content = gcd(content, c);
        v.push_back(c);
    }
    if (v.back() < 0) content = -content;
    for (auto& c : v) c /= content;
    if (scale) {
        *scale = Q(content, den);
        scale->canonicalize();
    }
    return v;
}

Poly from_integer(const std::vector<Z>& c) {
    std::vector<Q> v;
    v.reserve(c.size());
    for (const auto& z : c) v.emplace_back(z);
    return Poly(std::move(v));
}

namespace {

using ZPoly = std::vector<Z>;

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    int db = zdeg(b);
    int delta = zdeg(a) - db + 1;
    const Z& l = b.back();
    int steps = 0;
    while (!a.empty() && zdeg(a) >= db) {
        Z c = a.back();
        int shift = zdeg(a) - db;
        for (auto& x : a) x *= l;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= c * b[static_cast<std::size_t>(j)];
        ztrim(a);
        ++steps;
    }
    Z mul;
    mpz_pow_ui(mul.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(delta - steps));
    for (auto& x : a) x *= mul;
    return a;
}

Z zpow(const Z& b, long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Subresultant PRS resultant of primitive integer polynomials.
Z subresultant(ZPoly a, ZPoly b) {
    if (a.empty() || b.empty()) return 0;
    Z s = 1;
    if (zdeg(a) < zdeg(b)) {
        if ((zdeg(a) & 1) && (zdeg(b) & 1)) s = -1;
        std::swap(a, b);
    }
    if (zdeg(b) == 0) return s * zpow(b[0], zdeg(a));
    Z g = 1, h = 1;
    for (;;) {
        int delta = zdeg(a) - zdeg(b);
        if ((zdeg(a) & 1) && (zdeg(b) & 1)) s = -s;
        ZPoly r = pseudo_rem(a, b);
        a = b;
        if (r.empty()) return 0;
        Z div = g * zpow(h, delta);
        for (auto& x : r) x /= div;
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = zpow(g, delta) / zpow(h, delta - 1);
        }
        if (zdeg(b) == 0) {
            int da = zdeg(a);
            Z num = zpow(b[0], da);
            if (da == 0) return s * h;
            // h^(1-da) * lc(b)^da
            return s * num / zpow(h, da - 1);
        }
    }
}

}  // namespace

Q resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Q(0);
    Q sf, sg;
    ZPoly a = primitive_integer(f, &sf);
    ZPoly b = primitive_integer(g, &sg);
    Q r(subresultant(a, b));
    auto qpow = [](const Q& base, int e) {
        Q out = 1;
        for (int i = 0; i < e; ++i) out *= base;
        return out;
    };
    return r * qpow(sf, g.degree()) * qpow(sg, f.degree());
}

Q discriminant(const Poly& f) {
    int n = f.degree();
    if (n < 2) throw Error(ErrorKind::domain, "discriminant needs degree >= 2");
    Q r = resultant(f, f.derivative()) / f.lc();
    if ((n * (n - 1) / 2) & 1) r = -r;
    return r;
}

Poly resultant_y(const Poly& f, const BiPoly& g) {
    if (f.is_zero()) throw Error(ErrorKind::domain, "resultant with zero polynomial");
    int n = f.degree();
    int m = static_cast<int>(g.size()) - 1;
    if (m < 0) return Poly();
    int dx = 0;
    for (const auto& gj : g) dx = std::max(dx, gj.degree());
    int bound = n * dx;
    std::vector<Q> xs, ys;
    for (int k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
        Q x = (k % 2 == 0) ? Q(k / 2) : Q(-(k + 1) / 2);
        std::vector<Q> gy;
        for (const auto& gj : g) gy.push_back(gj.eval(x));
        Poly gx(std::move(gy));
        Q r;
        if (gx.is_zero()) {
            r = 0;
        } else {
            r = resultant(f, gx);
            for (int i = gx.degree(); i < m; ++i) r *= f.lc();
            // formal degree m vs actual: Res_{n,m} = (-1)^(n(m-m')) lc(f)^(m-m') Res_{n,m'}
            if ((n * (m - gx.degree())) & 1) r = -r;
        }
        xs.push_back(x);
        ys.push_back(r);
    }
    // Newton interpolation
    std::size_t N = xs.size();
    std::vector<Q> dd = ys;
    for (std::size_t j = 1; j < N; ++j)
        for (std::size_t i = N - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly acc = Poly::constant(dd[N - 1]);
    for (std::size_t i = N - 1; i-- > 0;) acc = acc * Poly{-xs[i], Q(1)} + Poly::constant(dd[i]);
    return acc;
}

Poly tschirnhausen_transform(const Poly& f, const TschirnhausenMap& m) {
    if (f.degree() != 4) throw Error(ErrorKind::domain, "Tschirnhausen transform needs a quartic");
    Poly fm = f.monic();
    BiPoly g{Poly{-m.c0, Q(1)}, Poly::constant(-m.c1), Poly::constant(-m.c2), Poly::constant(-m.c3)};
    return resultant_y(fm, g);
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::parse, "cannot parse polynomial '" + s_ + "': " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 'x' || c == 'X' || std::isdigit(static_cast<unsigned char>(c));
    }
    Poly expr() {
        Poly acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }
    Poly term() {
        Poly acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                Poly d = unary();
                if (d.degree() != 0) fail("division by a non-constant");
                acc = (1 / d.lc()) * acc;
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }
    Poly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }
    Poly power() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            if (pos_ - start > 3) fail("exponent too large");
            return pow(base, std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }
    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return p;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(Q(Z(s_.substr(start, pos_ - start))));
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_commas(const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Poly parse_poly(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw Error(ErrorKind::parse, "empty polynomial");
    if (t.front() == '[') {
        if (t.back() != ']') throw Error(ErrorKind::parse, "missing ']' in '" + text + "'");
        std::vector<Q> c;
        for (const auto& part : split_commas(t.substr(1, t.size() - 2))) c.push_back(parse_q(part));
        return Poly(std::move(c));
    }
    return Parser(t).parse();
}

std::vector<Q> parse_tuple(const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') throw Error(ErrorKind::parse, "missing ')' in '" + text + "'");
        t = t.substr(1, t.size() - 2);
    }
    std::vector<Q> out;
    for (const auto& part : split_commas(t)) out.push_back(parse_q(part));
    return out;
}

}  // namespace qg
