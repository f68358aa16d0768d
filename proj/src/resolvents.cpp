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

#include "qgalois/resolvents.hpp"

#include <functional>

namespace qg {

std::string case_name(ResolventCase c) {
    switch (c) {
        case ResolventCase::s4_pair:
            return "S4-pair";
        case ResolventCase::d4_pair:
            return "D4-pair";
        case ResolventCase::c4_pair:
            return "C4-pair";
        case ResolventCase::v4_pair:
            return "V4-pair";
    }
    return "?";
}

namespace {

using Term = std::function<Q(const Q&, const Q&, const Q&, const Q&)>;

Q p(const Q& x, int e) {
    Q r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

MultiResolvent resolvent_s4(const Q& s, const Q& t, const Q& S, const Q& T) {
    Q D = s4_discriminant(s, t), D2 = s4_discriminant(S, T);
    if (D == 0 || D2 == 0) throw Error(ErrorKind::inseparable, "S4-form is not separable");
    // [f] = f(s,t,s',t') + f(s',t',s,t)
    auto br = [&](const Term& f) -> Q { return f(s, t, S, T) + f(S, T, s, t); };

    Q x8 = 22 * p(s, 2) * p(S, 2) + 8 * t * p(S, 2) + 8 * p(s, 2) * T - 160 * t * T;
    Q c6 = -2 * br([](const Q& s, const Q& t, const Q& S, const Q& T) -> Q {
               return 8 * s * t * p(S, 3) + 13 * p(t, 2) * p(S, 3) - 84 * p(t, 2) * S * T;
           }) -
           28 * p(s, 3) * p(S, 3) + 576 * s * t * S * T + 57 * p(t, 2) * p(T, 2);
    Q c5 = -64 * t * T * (3 * p(s, 2) * p(S, 2) + 4 * t * p(S, 2) + 4 * p(s, 2) * T - 16 * t * T);
    Q c4 = 8 * br([](const Q& s, const Q& t, const Q& S, const Q& T) -> Q {
               return 3 * p(s, 2) * t * p(S, 4) - 14 * p(t, 2) * p(S, 4) + 6 * s * p(t, 2) * p(S, 4) +
                      304 * p(t, 2) * p(S, 2) * T - 4 * s * p(t, 2) * p(S, 2) * T - 208 * s * p(t, 2) * p(T, 2);
           }) +
           17 * p(s, 4) * p(S, 4) - 1216 * p(s, 2) * t * p(S, 2) * T - 3840 * p(t, 2) * p(T, 2) -
           380 * s * p(t, 2) * S * p(T, 2);
    Q c3 = -8 * t * T *
           (-2 * br([](const Q& s, const Q& t, const Q& S, const Q& T) -> Q {
                return 40 * s * t * p(S, 3) + 9 * p(t, 2) * p(S, 3) + 60 * p(t, 2) * S * T;
            }) -
            12 * p(s, 3) * p(S, 3) + 832 * s * t * S * T + 37 * p(t, 2) * p(T, 2));
    Q c2 = -2 * br([](const Q& s, const Q& t, const Q& S, const Q& T) -> Q {
               return 16 * p(s, 3) * t * p(S, 5) - 96 * s * p(t, 2) * p(S, 5) + 9 * p(s, 2) * p(t, 2) * p(S, 5) +
                      108 * p(t, 3) * p(S, 5) + 1280 * s * p(t, 2) * p(S, 3) * T +
                      168 * p(s, 2) * p(t, 2) * p(S, 3) * T - 288 * p(t, 3) * p(S, 3) * T -
                      1328 * p(s, 2) * p(t, 2) * S * p(T, 2) + 1472 * p(t, 3) * S * p(T, 2) -
                      270 * p(t, 3) * p(S, 2) * p(T, 2);
           }) -
           4 * p(s, 5) * p(S, 5) + 768 * p(s, 3) * t * p(S, 3) * T + 7168 * s * p(t, 2) * S * p(T, 2) +
           141 * p(s, 2) * p(t, 2) * p(S, 2) * p(T, 2) + 1616 * p(t, 3) * p(T, 3);
    Q c1 = 8 * t * T *
           (-8 * br([](const Q& s, const Q& t, const Q& S, const Q& T) -> Q {
                return 3 * p(s, 2) * t * p(S, 4) + 18 * p(t, 2) * p(S, 4) + 48 * p(t, 2) * p(S, 2) * T +
                       36 * s * p(t, 2) * p(S, 2) * T - 16 * s * p(t, 2) * p(T, 2);
            }) -
            p(s, 4) * p(S, 4) + 704 * p(s, 2) * t * p(S, 2) * T - 256 * p(t, 2) * p(T, 2) +
            84 * s * p(t, 2) * S * p(T, 2));
    Q c0 = br([](const Q& s, const Q& t, const Q& S, const Q& T) -> Q {
               return 16 * p(s, 4) * t * p(S, 6) - 128 * p(s, 2) * p(t, 2) * p(S, 6) -
                      4 * p(s, 3) * p(t, 2) * p(S, 6) + 256 * p(t, 3) * p(S, 6) + 144 * s * p(t, 3) * p(S, 6) -
                      27 * p(t, 4) * p(S, 6) + 1280 * p(s, 2) * p(t, 2) * p(S, 4) * T +
                      176 * p(s, 3) * p(t, 2) * p(S, 4) * T - 2048 * p(t, 3) * p(S, 4) * T -
                      1728 * s * p(t, 3) * p(S, 4) * T + 540 * p(t, 4) * p(S, 4) * T -
                      704 * p(s, 3) * p(t, 2) * p(S, 2) * p(T, 2) + 4096 * p(t, 3) * p(S, 2) * p(T, 2) +
                      4864 * s * p(t, 3) * p(S, 2) * p(T, 2) - 720 * p(t, 4) * p(S, 2) * p(T, 2) +
                      256 * p(t, 3) * p(S, 3) * p(T, 2) + 1008 * s * p(t, 3) * p(S, 3) * p(T, 2) -
                      270 * p(t, 4) * p(S, 3) * p(T, 2) - 1024 * s * p(t, 3) * p(T, 3) +
                      64 * p(t, 4) * p(T, 3) - 72 * p(t, 4) * S * p(T, 3);
           }) -
           256 * p(s, 4) * t * p(S, 4) * T - 4096 * p(s, 2) * p(t, 2) * p(S, 2) * p(T, 2) -
           76 * p(s, 3) * p(t, 2) * p(S, 3) * p(T, 2) - 704 * s * p(t, 3) * S * p(T, 3) -
           Q(27, 2) * p(t, 4) * p(T, 4);

    Poly G1{c0, c1, c2, c3, c4, c5, c6, 128 * s * t * S * T, x8, -24 * t * T, -8 * s * S, Q(0), Q(1)};
    Poly G2{2 * p(s, 3) * p(S, 3) - 8 * s * t * p(S, 3) + 9 * p(t, 2) * p(S, 3) - 8 * p(s, 3) * S * T +
                32 * s * t * S * T - 4 * p(t, 2) * S * T + 9 * p(s, 3) * p(T, 2) - 4 * s * t * p(T, 2) -
                Q(1, 2) * p(t, 2) * p(T, 2),
            -32 * s * t * S * T,
            -9 * p(s, 2) * p(S, 2) + 20 * t * p(S, 2) + 20 * p(s, 2) * T - 16 * t * T,
            8 * t * T,
            12 * s * S,
            Q(0),
            Q(-5)};
    MultiResolvent r;
    r.tag = ResolventCase::s4_pair;
    r.part1 = G1;
    r.part2 = G2;
    r.total = G1 * G1 - (D * D2) * (G2 * G2);
    return r;
}

MultiResolvent resolvent_d4(const Q& s, const Q& t, const Q& S, const Q& T) {
    if (d4_discriminant(s, t) == 0 || d4_discriminant(S, T) == 0)
        throw Error(ErrorKind::inseparable, "D4-form is not separable");
    Q ss = s * S;
    Q k = t * S * S - s * s * T;
    Poly R1{256 * k * k,
            Q(0),
            -128 * ss * (t * S * S + s * s * T - 8 * t * T),
            Q(0),
            16 * (s * s * S * S + 2 * t * S * S + 2 * s * s * T - 16 * t * T),
            Q(0),
            -8 * ss,
            Q(0),
            Q(1)};
    Q e = s * s - 4 * t, e2 = S * S - 4 * T;
    Poly R2{e * e * e2 * e2,
            Q(0),
            -4 * ss * e * e2,
            Q(0),
            2 * (3 * s * s * S * S - 4 * t * S * S - 4 * s * s * T - 16 * t * T),
            Q(0),
            -4 * ss,
            Q(0),
            Q(1)};
    MultiResolvent r;
    r.tag = ResolventCase::d4_pair;
    r.part1 = R1;
    r.part2 = R2;
    r.total = R1 * R2 * R2;
    return r;
}

C4PairResolvent resolvent_c4_pair(const Q& a, const Q& c, const Q& a2, const Q& c2) {
    if (a * a2 * c * c2 == 0) throw Error(ErrorKind::domain, "C4 pair needs a a' c c' != 0");
    if (c == c2 || c == -c2 || c * c2 == 4 || c * c2 == -4)
        throw Error(ErrorKind::domain, "excluded parameters (c' in {+-c, +-4/c}): apply the (2a, 4/c) rewrite first");
    Q den = (c * c + 4) * (c2 * c2 + 4);
    Q aa = a * a2;
    C4PairResolvent r;
    r.A = -aa;
    r.c_plus = (c * c2 - 4) / (c + c2);
    r.c_minus = (c * c2 + 4) / (c - c2);
    r.plus = Poly{aa * aa * (c + c2) * (c + c2) / den, Q(0), -aa, Q(0), Q(1)};
    r.minus = Poly{aa * aa * (c - c2) * (c - c2) / den, Q(0), -aa, Q(0), Q(1)};
    return r;
}

Poly resolvent_v4(const Q& s, const Q& v, const Q& S, const Q& V) {
    if (d4_discriminant(s, v * v) == 0 || d4_discriminant(S, V * V) == 0)
        throw Error(ErrorKind::inseparable, "V4-form is not separable");
    Q x = s * V + S * v, y = s * V - S * v;
    Poly f1{x * x, Q(0), -(s * S + 4 * v * V), Q(0), Q(1)};
    Poly f2{y * y, Q(0), -(s * S - 4 * v * V), Q(0), Q(1)};
    return f1 * f2;
}

}  // namespace qg
