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

#ifndef QGALOIS_EXACT_POLY_HPP
#define QGALOIS_EXACT_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

using Q = mpq_class;
using Z = mpz_class;

enum class ErrorKind {
    parse,
    zero_divisor,
    domain,
    inseparable,
    out_of_scope,
    form_mismatch,
    inconsistent,
    retries_exhausted,
    precision,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

Q make_q(long num, long den = 1);
Q parse_q(const std::string& text);
std::string to_string(const Q& q);

// Dense univariate polynomial over Q, coefficient i belongs to X^i.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Q> coeffs);
    explicit Poly(std::vector<Q> coeffs);
    static Poly constant(const Q& c);
    static Poly monomial(const Q& c, int degree);
    static Poly x() { return monomial(Q(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Q& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Q coeff(int i) const;
    const Q& lc() const;
    const std::vector<Q>& coeffs() const { return c_; }

    Poly monic() const;
    Poly derivative() const;
    Q eval(const Q& x) const;
    Poly compose(const Poly& inner) const;
    Poly shift(const Q& c) const;  // f(X + c)
    Poly scale(const Q& c) const;  // f(c X)
    Poly operator-() const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Q& c, const Poly& f);
    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    std::string to_string(char var = 'X') const;

private:
    void trim();
    std::vector<Q> c_;
};

Poly pow(const Poly& f, int e);
void divmod(const Poly& f, const Poly& g, Poly& quot, Poly& rem);
Poly operator/(const Poly& f, const Poly& g);  // exact division, throws otherwise
Poly operator%(const Poly& f, const Poly& g);
Poly gcd(const Poly& f, const Poly& g);  // monic, gcd(0,0) = 0

// Clears denominators and content: returns the primitive integer polynomial
// with positive leading coefficient and sets f = scale * result.
std::vector<Z> primitive_integer(const Poly& f, Q* scale = nullptr);
Poly from_integer(const std::vector<Z>& c);

Q resultant(const Poly& f, const Poly& g);
Q discriminant(const Poly& f);

// Polynomial in Y whose coefficients are polynomials in X.
using BiPoly = std::vector<Poly>;
Poly resultant_y(const Poly& f, const BiPoly& g);

struct TschirnhausenMap {
    Q c0, c1, c2, c3;
    Poly as_poly() const { return Poly{c0, c1, c2, c3}; }
};

// Res_Y(f(Y), X - m(Y)) for monic quartic f: the quartic whose roots are m(alpha).
Poly tschirnhausen_transform(const Poly& f, const TschirnhausenMap& m);

// Accepts "x^4+5*x^2+5", "x^4+5x^2+5", "(x-1)(x^3+x^2+2x+1)", and "[5,0,5,0,1]".
Poly parse_poly(const std::string& text);
// Comma separated rationals, optionally in parentheses: "(1,-1)", "2/3, 5".
std::vector<Q> parse_tuple(const std::string& text);

}  // namespace qg

#endif
