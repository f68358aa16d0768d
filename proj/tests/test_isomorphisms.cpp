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
#include "qgalois/intersection.hpp"
#include "qgalois/isomorphisms.hpp"

using namespace qg;

namespace {

void check_point(const FamilyPoint& pt) {
    CAPTURE(pt.family);
    CAPTURE(pt.target.poly().to_string());
    CHECK(tschirnhausen_transform(pt.source.poly(), pt.witness) == pt.target.poly());
    CHECK(pt.target.separable());
}

}  // namespace

TEST_CASE("parameter order") {
    std::vector<Q> got;
    for (std::size_t i = 0; i < 7; ++i) got.push_back(param_at(i));
    CHECK(got == std::vector<Q>{Q(0), Q(1), Q(-1), Q(2), Q(-2), Q(3), Q(-3)});
}

TEST_CASE("first S4 family") {
    for (auto [s, t] : {std::pair{0, 1}, {2, 1}, {-1, 3}, {3, -5}}) {
        QuarticForm a = make_form(FormKind::s4, Q(s), Q(t));
        S4Family fam(a);
        for (int i = 0; i < 25; ++i) {
            FamilyPoint pt = fam.next();
            check_point(pt);
            Q p = pt.params.at(0), R = s4_R(a.p1, a.p2, p), Qp = s4_Q(a.p1, a.p2, p), S = s4_S(a.p1, a.p2, p);
            CHECK(pt.target.p1 == s4_P(a.p1, a.p2, p) * Qp * Qp / (R * R));
            Q r12 = R * R * R;
            r12 = r12 * r12 * r12 * r12;
            Q q12 = Qp * Qp * Qp;
            q12 = q12 * q12 * q12 * q12;
            CHECK(pt.target.discriminant() == a.discriminant() * q12 * S * S / r12);
        }
        for (const SkippedParam& sk : fam.skipped()) CHECK_FALSE(sk.reason.empty());
    }
    FamilyPoint pt = S4Family(make_form(FormKind::s4, Q(0), Q(1))).next();
    CHECK(splitting_fields_equal(pt.source.poly(), pt.target.poly()));
}

TEST_CASE("second S4 family") {
    for (auto [s, t] : {std::pair{0, 1}, {2, 1}, {-1, 3}}) {
        S4UVFamily fam(make_form(FormKind::s4, Q(s), Q(t)));
        for (int i = 0; i < 25; ++i) check_point(fam.next());
    }
    FamilyPoint pt = isom_s4_case2(make_form(FormKind::s4, Q(2), Q(1)), Q(1), Q(-1));
    check_point(pt);
    CHECK(splitting_fields_equal(pt.source.poly(), pt.target.poly()));
}

TEST_CASE("D4 families") {
    for (auto [a, b] : {std::pair{0, -2}, {5, 5}, {3, 7}, {-4, 2}, {1, -3}}) {
        QuarticForm f = make_form(FormKind::d4, Q(a), Q(b));
        D4PQFamily pq(f);
        int dual = 0;
        for (int i = 0; i < 30; ++i) {
            FamilyPoint pt = pq.next();
            check_point(pt);
            if (pt.branch == "dual-orbit") {
                ++dual;
                CHECK(pt.source == dual_d4_form(f));
            } else {
                CHECK(pt.source == f);
            }
        }
        CHECK(dual > 0);
        D4FourthPowerFamily fp(f);
        for (int i = 0; i < 10; ++i) {
            FamilyPoint pt = fp.next();
            check_point(pt);
            Q u = pt.params.at(0);
            CHECK_FALSE(is_rational_square(Q(b - a * u + u * u)));
            CHECK_FALSE(is_rational_power(Q(pt.target.p2 / b), 4));
            CHECK(pt.target == d4_u_point(f, u).target);
        }
    }
    FamilyPoint pt = d4_isom_param(make_form(FormKind::d4, Q(3), Q(7)), Q(1), Q(2), D4Branch::dual_orbit);
    CHECK(splitting_fields_equal(make_form(FormKind::d4, Q(3), Q(7)).poly(), pt.target.poly()));
}

TEST_CASE("C4 forms") {
    QuarticForm h = simplest_c4_form(2);
    CHECK(h.p1 == -20);
    CHECK(h.p2 == 1);
    CHECK(d4_from_c4(h).poly() == make_form(FormKind::d4, Q(-20), Q(80)).poly());
    CHECK(c4_from_d4(d4_from_c4(h)).p1 == h.p1);
    QuarticForm not_c4 = make_form(FormKind::d4, Q(0), Q(-2));
    CHECK_THROWS_AS(c4_from_d4(not_c4), Error);
    for (long n : {1L, 2L, 5L, 7L}) {
        QuarticForm c = simplest_c4_form(n);
        CHECK(splitting_fields_equal(simplest_quartic(n), d4_from_c4(c).poly()));
        for (const QuarticForm& comp : c4_known_identities(c)) {
            CHECK(c4_equal_test(c, comp));
            CHECK(c4_equal_test(comp, c));
            CHECK(splitting_fields_equal(d4_from_c4(c).poly(), d4_from_c4(comp).poly()));
        }
        for (const FamilyPoint& pt : c4_family_points(c)) check_point(pt);
    }
    CHECK(c4_family_points(simplest_c4_form(2)).size() == 3);
}

TEST_CASE("C4 test agrees with the intersection module") {
    for (long m = 1; m <= 24; ++m)
        for (long n = m + 1; n <= 24; ++n) {
            if (m == 3 || n == 3) continue;  // n^2 + 16 = 25, not a C4 field
            CAPTURE(m);
            CAPTURE(n);
            bool direct = splitting_fields_equal(simplest_quartic(m), simplest_quartic(n));
            CHECK(c4_test(simplest_c4_form(m), simplest_c4_form(n)).equal == direct);
            CHECK(c4_test(simplest_c4_form(n), simplest_c4_form(m)).equal == direct);
        }
}

TEST_CASE("Table 2 search") {
    std::vector<Table2Row> rows = search_table2(-256, 768);
    std::vector<long> bs;
    for (const Table2Row& r : rows) {
        bs.push_back(r.b.get_si());
        CHECK(r.B * (3 * r.b - 256) == 8 * r.b);
        CHECK(r.a_target == -6 * r.B * r.B);
        CHECK(r.b_target == -8 * r.B * r.B * r.B);
        FamilyPoint pt = isom_s4_case2(make_form(FormKind::s4, Q(0), Q(r.b)), Q(0), Q(0));
        check_point(pt);
    }
    CHECK(bs == std::vector<long>{-256, 64, 80, 84, 85, 86, 88, 96, 128, 256, 768});
}

TEST_CASE("simplest quartic search") {
    std::vector<SimplestHit> hits = search_simplest(1, 1000, 4);
    REQUIRE(hits.size() == 5);
    auto roots = [](std::initializer_list<int> r) {
        std::vector<Q> out;
        for (int x : r) out.push_back(Q(x));
        return out;
    };
    CHECK((hits[0].m == 1 && hits[0].n == 16 && hits[0].rewritten && !hits[0].equal));
    CHECK((hits[1].m == 1 && hits[1].n == 103 && !hits[1].rewritten && hits[1].equal));
    CHECK(hits[1].roots == roots({-340, -255, 255, 340}));
    CHECK((hits[2].m == 2 && hits[2].n == 8 && hits[2].rewritten && !hits[2].equal));
    CHECK((hits[3].m == 2 && hits[3].n == 22 && !hits[3].rewritten && hits[3].equal));
    CHECK(hits[3].roots == roots({-80, -60, 60, 80}));
    CHECK((hits[4].m == 4 && hits[4].n == 956 && !hits[4].rewritten && hits[4].equal));
    CHECK(hits[4].roots == roots({-4992, -2080, 2080, 4992}));
    std::vector<SimplestHit> serial = search_simplest(1, 120, 1);
    CHECK(serial.size() == 4);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].m == hits[i].m);
        CHECK(serial[i].n == hits[i].n);
    }
}

TEST_CASE("certificates") {
    auto c = find_isom_certificate(parse_poly("x^4+x+1"), parse_poly("x^4+2x^2+x+1"), 50);
    REQUIRE(c);
    CHECK(c->family == "s4-p");
    check_point(c->point);
    auto id = find_isom_certificate(parse_poly("x^4+x+1"), parse_poly("x^4-x+1"), 50);
    REQUIRE(id);
    CHECK(id->family == "identity");
    CHECK_FALSE(find_isom_certificate(parse_poly("x^4+x+1"), parse_poly("x^4-x-1"), 10));
    QuarticForm f = make_form(FormKind::d4, Q(3), Q(7));
    for (D4Branch br : {D4Branch::same_orbit, D4Branch::dual_orbit}) {
        FamilyPoint pt = d4_isom_param(f, Q(2), Q(-3), br);
        auto d = find_isom_certificate(f.poly(), pt.target.poly(), 50);
        REQUIRE(d);
        check_point(d->point);
    }
}
