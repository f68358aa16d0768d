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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgalois/factorization.hpp"
#include "qgalois/isomorphisms.hpp"
#include "qgalois/quartic_forms.hpp"
#include "support.hpp"

using namespace qg;

namespace {

GaloisLabel G(const char* s) { return quartic_galois_group(parse_poly(s)); }

}  // namespace

TEST_CASE("Galois groups of reference quartics") {
    CHECK(G("x^4+x+1") == GaloisLabel::S4);
    CHECK(G("x^4-x-1") == GaloisLabel::S4);
    CHECK(G("x^4+8x+12") == GaloisLabel::A4);
    CHECK(G("x^4+64/9x+64/9") == GaloisLabel::A4);
    CHECK(G("x^4-2") == GaloisLabel::D4);
    CHECK(G("x^4-3") == GaloisLabel::D4);
    CHECK(G("x^4+5x^2+5") == GaloisLabel::C4);
    CHECK(G("x^4-4x^2+2") == GaloisLabel::C4);
    CHECK(G("x^4+x^3+x^2+x+1") == GaloisLabel::C4);
    CHECK(G("x^4+1") == GaloisLabel::V4);
    CHECK(G("x^4-10x^2+1") == GaloisLabel::V4);
    CHECK(G("(x-1)(x^3+x^2+2x+1)") == GaloisLabel::S3);
    CHECK(G("x(x^3-3x+1)") == GaloisLabel::C3);
    CHECK(G("(x^2+1)(x^2+4)") == GaloisLabel::C2);
    CHECK(G("(x-1)(x-2)(x-3)(x-4)") == GaloisLabel::C1);
    CHECK(G("x^4-1") == GaloisLabel::reducible_other);
    CHECK(G("(x^2+1)(x^2+2)") == GaloisLabel::reducible_other);
    CHECK(cubic_galois_group(parse_poly("x^3-3x+1")) == GaloisLabel::C3);
    CHECK(cubic_galois_group(parse_poly("x^3-2")) == GaloisLabel::S3);
    CHECK(group_order(GaloisLabel::D4) == 8);
    CHECK(label_name(GaloisLabel::reducible_other) == "reducible-other");
}

TEST_CASE("simplest quartics are cyclic except n = 0, 3") {
    for (long n : {1, 2, 4, 5, 10, 103}) {
        CAPTURE(n);
        CHECK(quartic_galois_group(simplest_quartic(n)) == GaloisLabel::C4);
        D4Reduction r = to_d4_form(simplest_quartic(n));
        CHECK(r.form.p1 == -(n * n + 16));
        CHECK(r.form.p2 == 4 * (n * n + 16));
    }
    CHECK(quartic_galois_group(simplest_quartic(0)) != GaloisLabel::C4);
    CHECK(quartic_galois_group(simplest_quartic(3)) != GaloisLabel::C4);
}

TEST_CASE("S4-form reduction") {
    S4Reduction r = to_s4_form(parse_poly("x^4+x+1"));
    CHECK(r.form.to_string() == "(0,1)");
    CHECK(to_s4_form(parse_poly("x^4+2x^2+x+1")).form.to_string() == "(2,1)");
    // the cubic-term polynomial is a different field
    CHECK(to_s4_form(parse_poly("x^4+2x^3+x+1")).form.to_string() == "(-1536/25,65536/125)");
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        Poly g = qgt::rand_poly(rng, 4, 9, 3);
        if (i % 5 == 0) g = Poly{g[0], Q(0), g[2], Q(0), Q(1)};  // forces the degenerate branch
        if (discriminant(g) == 0) continue;
        CAPTURE(g.to_string());
        S4Reduction s = to_s4_form(g);
        CHECK(s.form.kind == FormKind::s4);
        CHECK(tschirnhausen_transform(g, s.map) == s.form.poly());
        CHECK(s.form.separable());
    }
}

TEST_CASE("S4-form invariants under shifting and scaling") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 40; ++i) {
        Poly g = qgt::rand_poly(rng, 4, 9);
        if (discriminant(g) == 0 || g[1] == 0) continue;
        Q c = qgt::rand_q(rng, 5, 2), l = qgt::rand_q(rng, 5, 3);
        if (l == 0) continue;
        Poly h = (g.shift(c).scale(l)).monic();
        CHECK(quartic_galois_group(h) == quartic_galois_group(g));
        Poly gd = g.shift(-g[3] / 4);
        if (gd[1] != 0 && gd[0] != 0) CHECK(to_s4_form(g).form == to_s4_form(h).form);
    }
}

TEST_CASE("D4-form reduction") {
    D4Reduction r = to_d4_form(parse_poly("x^4+x^3+x^2+x+1"));
    CHECK(r.form.to_string() == "(5,5)");
    CHECK(r.root == 2);
    CHECK(quartic_galois_group(r.form.poly()) == GaloisLabel::C4);
    CHECK_THROWS_AS(to_d4_form(parse_poly("x^4+x+1")), Error);
    CHECK(resolvent_cubic(GeneralQuartic::from_poly(parse_poly("x^4+x^3+x^2+x+1"))) == parse_poly("x^3-x^2-3x+2"));
    CHECK(dual_d4_form(make_form(FormKind::d4, Q(5), Q(5))).to_string() == "(10,5)");
    // the reduction keeps the group for Tschirnhausen images of D4, C4 and V4 quartics
    std::mt19937_64 rng(33);
    for (const char* s : {"x^4-2", "x^4+5x^2+5", "x^4+1", "x^4-3x^2+1"}) {
        Poly f = parse_poly(s);
        for (int i = 0; i < 5; ++i) {
            TschirnhausenMap m{qgt::rand_q(rng, 3), qgt::rand_q(rng, 3), qgt::rand_q(rng, 3), qgt::rand_q(rng, 3)};
            Poly g = tschirnhausen_transform(f, m);
            if (discriminant(g) == 0) continue;
            CAPTURE(g.to_string());
            CHECK(quartic_galois_group(g) == quartic_galois_group(f));
            if (g[3] * g[3] * g[3] - 4 * g[3] * g[2] + 8 * g[1] == 0) continue;
            QuarticForm d = to_d4_form(g).form;
            CHECK(quartic_galois_group(d.poly()) == quartic_galois_group(f));
        }
    }
}

TEST_CASE("quadratic subfields") {
    auto k = quadratic_subfields(make_form(FormKind::d4, Q(0), Q(-2)));  // x^4 - 2
    REQUIRE(k.size() == 3);
    CHECK(k[0] == -2);
    CHECK(k[1] == -1);  // 8 / (-2)
    CHECK(k[2] == 2);   // 8
    Classification c = classify(parse_poly("x^4-2"));
    REQUIRE(c.subfields.size() == 3);
    for (int d : {2, -1, -2}) {
        bool found = false;
        for (const Q& e : c.subfields) found = found || same_quadratic_field(e, Q(d));
        CHECK(found);
    }
    CHECK(classify(parse_poly("x^4+1")).subfields.size() == 3);
    CHECK(classify(parse_poly("x^4+x+1")).subfields.size() == 1);
    CHECK(classify(parse_poly("x^4+8x+12")).subfields.empty());
    CHECK(same_quadratic_field(make_q(8, 9), Q(2)));
    CHECK_FALSE(same_quadratic_field(Q(2), Q(3)));
}

TEST_CASE("forms") {
    CHECK(make_form(FormKind::s4, Q(0), Q(1)).poly() == parse_poly("x^4+x+1"));
    CHECK(make_form(FormKind::c4, Q(-20), Q(1)).poly() == parse_poly("x^4-20x^2+80"));
    CHECK(make_form(FormKind::v4, Q(-10), Q(1)).poly() == parse_poly("x^4-10x^2+1"));
    CHECK(s4_discriminant(Q(0), Q(1)) == 229);
    std::mt19937_64 rng(34);
    for (int i = 0; i < 30; ++i) {
        Q s = qgt::rand_q(rng, 9, 2), t = qgt::rand_q(rng, 9, 2);
        CHECK(s4_discriminant(s, t) == discriminant(make_form(FormKind::s4, s, t).poly()));
        CHECK(d4_discriminant(s, t) == discriminant(make_form(FormKind::d4, s, t).poly()));
    }
    CHECK(parse_form_kind("d4") == FormKind::d4);
    CHECK_THROWS_AS(parse_form_kind("q8"), Error);
}
