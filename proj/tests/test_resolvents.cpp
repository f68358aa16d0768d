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

#include <algorithm>

#include "qgalois/factorization.hpp"
#include "qgalois/isomorphisms.hpp"
#include "qgalois/oracle.hpp"
#include "qgalois/resolvents.hpp"
#include "support.hpp"

using namespace qg;

namespace {

std::vector<std::string> factor_strings(const Poly& f) {
    std::vector<std::string> out;
    for (const Factor& fa : factor_over_Q(f).factors)
        out.push_back(fa.poly.to_string() + (fa.multiplicity > 1 ? "^" + std::to_string(fa.multiplicity) : ""));
    std::sort(out.begin(), out.end());
    return out;
}

bool has_factor(const Poly& f, const Poly& g, int mult = 1) { return f % pow(g, mult) == Poly(); }

}  // namespace

TEST_CASE("S4 pair resolvent of the first worked example") {
    MultiResolvent r = resolvent_s4(Q(0), Q(1), Q(2), Q(1));
    CHECK(r.total.degree() == 24);
    CHECK(r.part1.degree() == 12);
    CHECK(r.part2.degree() == 6);
    std::vector<std::string> expected{"X - 3", "X + 1^3", "X^6 - 6*X^5 + 12*X^4 - 8*X^3 - 64*X^2 + 128*X - 64",
                                      "X^6 + 6*X^5 + 24*X^4 + 56*X^3 + 32*X^2 - 32*X - 256",
                                      "X^8 + 6*X^6 - 16*X^5 - 89*X^4 - 48*X^3 + 686*X^2 - 1048*X + 4233"};
    std::sort(expected.begin(), expected.end());
    CHECK(factor_strings(r.total) == expected);
    CHECK(dt_to_string(decomposition_type(r.total)) == "8,6,6,3,1");
}

TEST_CASE("S4 pair resolvent of the A4 example") {
    MultiResolvent r = resolvent_s4(Q(0), make_q(64, 9), make_q(128, 9), make_q(4096, 81));
    CHECK(has_factor(r.total, Poly{make_q(-64, 3), Q(1)}));
    CHECK(has_factor(r.total, Poly{make_q(64, 9), Q(1)}, 3));
    CHECK(dt_to_string(decomposition_type(r.total)) == "6,6,4,4,3,1");
}

TEST_CASE("S4 pair resolvent of the reducible example") {
    MultiResolvent r = resolvent_s4(Q(1), Q(-1), Q(-1), Q(1));
    CHECK(dt_to_string(decomposition_type(r.total)) == "6,6,3,3,3,2,1");
}

TEST_CASE("closed forms agree with the numeric matching oracle") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> d(-9, 9);
    int s4_checked = 0, d4_checked = 0;
    for (int i = 0; i < 50; ++i) {
        Q s = d(rng), t = d(rng), S = d(rng), T = d(rng);
        QuarticForm a = make_form(FormKind::s4, s, t), b = make_form(FormKind::s4, S, T);
        if (a.separable() && b.separable()) {
            MultiResolvent r = resolvent_s4(s, t, S, T);
            CHECK(numeric_matching_oracle(a.poly(), b.poly(), OracleTag::s4).resolvent == r.total);
            CHECK(pow(r.part1, 2) - a.discriminant() * b.discriminant() * pow(r.part2, 2) == r.total);
            ++s4_checked;
        }
        QuarticForm c = make_form(FormKind::d4, s, t), e = make_form(FormKind::d4, S, T);
        if (c.separable() && e.separable()) {
            MultiResolvent r = resolvent_d4(s, t, S, T);
            CHECK(numeric_matching_oracle(c.poly(), e.poly(), OracleTag::d4).resolvent == r.part1);
            CHECK(numeric_matching_oracle(c.poly(), e.poly(), OracleTag::s4).resolvent == r.total);
            CHECK(r.part1 * pow(r.part2, 2) == r.total);
            ++d4_checked;
        }
    }
    CHECK(s4_checked >= 40);
    CHECK(d4_checked >= 40);
}

TEST_CASE("square discriminant product splits the S4 pair resolvent") {
    std::mt19937_64 rng(42);
    int checked = 0;
    auto check_split = [&](const QuarticForm& a, const QuarticForm& b) {
        Q root;
        REQUIRE(is_rational_square(Q(a.discriminant() * b.discriminant()), &root));
        MultiResolvent r = resolvent_s4(a.p1, a.p2, b.p1, b.p2);
        Poly plus = r.part1 + root * r.part2, minus = r.part1 - root * r.part2;
        CHECK(plus.degree() == 12);
        CHECK(plus * minus == r.total);
        CHECK(r.total % plus == Poly());
        CHECK(r.total % minus == Poly());
        ++checked;
    };
    for (int i = 0; i < 20; ++i) {
        QuarticForm a = make_form(FormKind::s4, qgt::rand_q(rng, 9), qgt::rand_q(rng, 9));
        if (!a.separable()) continue;
        check_split(a, a);
        try {
            check_split(a, isom_s4_case1(a, param_at(static_cast<std::size_t>(i % 5))).target);
        } catch (const Error&) {
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("D4 pair resolvents") {
    MultiResolvent same = resolvent_d4(Q(3), Q(7), Q(3), Q(7));
    CHECK(same.part1.eval(Q(0)) == 0);  // identical forms share a matching
    MultiResolvent dual = resolvent_d4(Q(5), Q(5), Q(10), Q(5));
    CHECK_FALSE(rational_roots(dual.part1).empty());
    CHECK(factor_strings(dual.part1) == std::vector<std::string>{"X + 10^2", "X - 10^2", "X^2 - 180", "X^2 - 20"});
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) {
        Q s = qgt::rand_q(rng, 9), v = qgt::rand_q(rng, 9), S = qgt::rand_q(rng, 9), V = qgt::rand_q(rng, 9);
        if (d4_discriminant(s, v * v) == 0 || d4_discriminant(S, V * V) == 0) continue;
        // V4 resolvent is the (s, v^2, s', v'^2) specialization of R1(2X) / 2^8
        Poly r1 = resolvent_d4(s, v * v, S, V * V).part1;
        CHECK(resolvent_v4(s, v, S, V) == make_q(1, 256) * r1.scale(Q(2)));
    }
}

TEST_CASE("C4 pair resolvent") {
    // (m, n) = (2, 22): (-20, 1) and (-500, 11)
    C4PairResolvent r = resolvent_c4_pair(Q(-20), Q(1), Q(-500), Q(11));
    CHECK(rational_roots(r.plus) == std::vector<Q>{Q(-80), Q(-60), Q(60), Q(80)});
    CHECK(rational_roots(r.minus).empty());
    CHECK(r.A == -10000);
    CHECK(r.c_plus == make_q(7, 12));
    CHECK(r.c_minus == make_q(-3, 2));
    C4PairResolvent h = resolvent_c4_pair(Q(-17), make_q(1, 2), Q(-(103 * 103 + 16)), make_q(103, 2));
    CHECK(rational_roots(h.minus) == std::vector<Q>{Q(-340), Q(-255), Q(255), Q(340)});
    C4PairResolvent k = resolvent_c4_pair(Q(-32), Q(2), Q(-(956 * 956 + 16)), Q(478));
    CHECK(rational_roots(k.plus) == std::vector<Q>{Q(-4992), Q(-2080), Q(2080), Q(4992)});
    CHECK_THROWS_AS(resolvent_c4_pair(Q(-17), make_q(1, 2), Q(-272), Q(8)), Error);  // c c' = 4
    CHECK_THROWS_AS(resolvent_c4_pair(Q(5), Q(1), Q(7), Q(-1)), Error);
    // displayed quartic for ((c^2+4)/a, c)
    for (int c = 1; c <= 5; ++c) {
        Q a = 3, a2 = Q(c * c + 4) / a, cc = c;
        Poly f{a * a * a2 * a2 * 4 * cc * cc / ((cc * cc + 4) * (cc * cc + 4)), Q(0), -a * a2, Q(0), Q(1)};
        CHECK(f == Poly{Q(-2), Q(1)} * Poly{Q(2), Q(1)} * Poly{-cc, Q(1)} * Poly{cc, Q(1)});
    }
}
