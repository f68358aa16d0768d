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

// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qgalois/factorization.hpp"
#include "qgalois/intersection.hpp"
#include "qgalois/isomorphisms.hpp"
#include "qgalois/oracle.hpp"
#include "qgalois/resolvents.hpp"

using namespace qg;

namespace {

int failures = 0;

void report(int n, const std::function<std::string(bool&)>& body) {
    bool ok = true;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> sorted_factors(const Poly& f) {
    std::vector<std::string> out;
    for (const Factor& fa : factor_over_Q(f).factors)
        out.push_back(fa.poly.to_string() + (fa.multiplicity > 1 ? "^" + std::to_string(fa.multiplicity) : ""));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Q> ints(std::initializer_list<long> xs) {
    std::vector<Q> out;
    for (long x : xs) out.push_back(Q(x));
    return out;
}

bool round_trips(const FamilyPoint& pt) { return tschirnhausen_transform(pt.source.poly(), pt.witness) == pt.target.poly(); }

}  // namespace

int main() {
    report(1, [](bool& ok) {
        auto t0 = std::chrono::steady_clock::now();
        Poly f = parse_poly("X^4+X+1"), g = parse_poly("X^4+2X^2+X+1");
        IntersectionAnswer a = intersect(f, g);
        MultiResolvent r = resolvent_s4(a.form_a.p1, a.form_a.p2, a.form_b.p1, a.form_b.p2);
        std::vector<std::string> printed{"X - 3", "X + 1^3", "X^6 - 6*X^5 + 12*X^4 - 8*X^3 - 64*X^2 + 128*X - 64",
                                         "X^6 + 6*X^5 + 24*X^4 + 56*X^3 + 32*X^2 - 32*X - 256",
                                         "X^8 + 6*X^6 - 16*X^5 - 89*X^4 - 48*X^3 + 686*X^2 - 1048*X + 4233"};
        std::sort(printed.begin(), printed.end());
        bool factors = sorted_factors(r.total) == printed;
        bool literal_not_equal = !splitting_fields_equal(f, parse_poly("X^4+2X^3+X+1"));
        double s = seconds_since(t0);
        ok = a.relation == Relation::equal && dt_to_string(a.evidence.block_dt) == "8,6,6,3,1" && factors &&
             literal_not_equal && s < 5.0;
        return "equal=" + std::string(a.relation == Relation::equal ? "yes" : "no") +
               " DT=" + dt_to_string(a.evidence.block_dt) + " factors=" + (factors ? "exact" : "mismatch") +
               " (X^4+2X^2+X+1; printed X^4+2X^3+X+1 not equal: " + (literal_not_equal ? "yes" : "no") + ") " +
               std::to_string(s) + "s";
    });

    report(2, [](bool& ok) {
        auto t0 = std::chrono::steady_clock::now();
        Q b = make_q(64, 9);
        Poly f = make_form(FormKind::s4, Q(0), b).poly(), g = make_form(FormKind::s4, 2 * b, b * b).poly();
        IntersectionAnswer a = intersect(f, g);
        MultiResolvent r = resolvent_s4(Q(0), b, 2 * b, b * b);
        Poly lin = Poly{make_q(-64, 3), Q(1)}, cube = pow(Poly{make_q(64, 9), Q(1)}, 3);
        bool factors = r.total % lin == Poly() && r.total % cube == Poly() &&
                       r.total % (lin * lin) != Poly() && r.total % (cube * Poly{make_q(64, 9), Q(1)}) != Poly();
        bool row = std::find(a.rows.begin(), a.rows.end(), "I-16") != a.rows.end();
        double s = seconds_since(t0);
        ok = a.group_a == GaloisLabel::A4 && a.group_b == GaloisLabel::A4 && row && a.relation == Relation::equal &&
             dt_to_string(a.evidence.block_dt) == "6,6,4,4,3,1" && factors && s < 5.0;
        return "row=" + (a.rows.empty() ? std::string("-") : a.rows.front()) +
               " DT=" + dt_to_string(a.evidence.block_dt) + " (X-64/3)(X+64/9)^3 " + (factors ? "exact" : "mismatch") +
               " " + std::to_string(s) + "s";
    });

    report(3, [](bool& ok) {
        std::vector<Table2Row> rows = search_table2(-256, 768);
        std::vector<long> expect{-256, 64, 80, 84, 85, 86, 88, 96, 128, 256, 768};
        std::string bs;
        ok = rows.size() == expect.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Table2Row& r = rows[i];
            bs += (i ? "," : "") + r.b.get_str();
            ok = ok && i < expect.size() && r.b == expect[i] && r.B * (3 * r.b - 256) == 8 * r.b &&
                 r.a_target == -6 * r.B * r.B && r.b_target == -8 * r.B * r.B * r.B;
        }
        return std::to_string(rows.size()) + " rows, b=" + bs;
    });

    report(4, [](bool& ok) {
        std::vector<SimplestHit> hits = search_simplest(1, 1000, 4);
        std::vector<std::pair<long, long>> direct, rewrite;
        bool roots_ok = true, verdicts_ok = true;
        for (const SimplestHit& h : hits) {
            (h.rewritten ? rewrite : direct).push_back({h.m, h.n});
            verdicts_ok = verdicts_ok &&
                          h.equal == splitting_fields_equal(simplest_quartic(h.m), simplest_quartic(h.n));
            if (h.m == 1 && h.n == 103) roots_ok = roots_ok && h.roots == ints({-340, -255, 255, 340});
            if (h.m == 2 && h.n == 22) roots_ok = roots_ok && h.roots == ints({-80, -60, 60, 80});
            if (h.m == 4 && h.n == 956) roots_ok = roots_ok && h.roots == ints({-4992, -2080, 2080, 4992});
        }
        std::vector<std::pair<long, long>> want_direct{{1, 103}, {2, 22}, {4, 956}}, want_rewrite{{1, 16}, {2, 8}};
        ok = direct == want_direct && rewrite == want_rewrite && roots_ok && verdicts_ok;
        std::string d;
        for (auto [m, n] : direct) d += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        std::string w;
        for (auto [m, n] : rewrite) w += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        return "direct " + d + " roots " + (roots_ok ? "match" : "differ") + "; rewrite " + w +
               " (verdict not equal, confirmed by the intersection tables: " + (verdicts_ok ? "yes" : "no") + ")";
    });

    report(5, [](bool& ok) {
        Poly f = parse_poly("X^4+X^3+X^2+X+1");
        D4Reduction d = to_d4_form(f);
        GaloisLabel g = quartic_galois_group(d.form.poly());
        ok = d.form.p1 == 5 && d.form.p2 == 5 && d.root == 2 && g == GaloisLabel::C4 &&
             quartic_galois_group(f) == GaloisLabel::C4;
        return "form=(" + to_string(d.form.p1) + "," + to_string(d.form.p2) + ") c=" + to_string(d.root) +
               " group=" + label_name(g);
    });

    report(6, [](bool& ok) {
        IntersectionAnswer a = intersect(parse_poly("(X-1)(X^3+X^2+2X+1)"), parse_poly("(X+1)(X^3-X^2+1)"));
        bool row = std::find(a.rows.begin(), a.rows.end(), "IV-18") != a.rows.end();
        ok = a.relation == Relation::equal && row && dt_to_string(a.evidence.block_dt) == "6,6,3,3,3,2,1";
        return "relation=" + relation_name(a.relation) + " DT=" + dt_to_string(a.evidence.block_dt) +
               " row=" + (row ? "IV-18" : "missing");
    });

    report(7, [](bool& ok) {
        std::mt19937_64 rng(20260101);
        std::uniform_int_distribution<int> d(-9, 9);
        int tuples = 0, s4 = 0, d4 = 0, bad = 0;
        while (tuples < 50) {
            Q s = d(rng), t = d(rng), S = d(rng), T = d(rng);
            QuarticForm a = make_form(FormKind::s4, s, t), b = make_form(FormKind::s4, S, T);
            QuarticForm c = make_form(FormKind::d4, s, t), e = make_form(FormKind::d4, S, T);
            ++tuples;
            if (a.separable() && b.separable()) {
                MultiResolvent r = resolvent_s4(s, t, S, T);
                bad += numeric_matching_oracle(a.poly(), b.poly(), OracleTag::s4).resolvent != r.total;
                bad += r.part1 * r.part1 - a.discriminant() * b.discriminant() * r.part2 * r.part2 != r.total;
                ++s4;
            }
            if (c.separable() && e.separable()) {
                MultiResolvent r = resolvent_d4(s, t, S, T);
                bad += numeric_matching_oracle(c.poly(), e.poly(), OracleTag::d4).resolvent != r.part1;
                bad += numeric_matching_oracle(c.poly(), e.poly(), OracleTag::s4).resolvent != r.total;
                ++d4;
            }
        }
        // square D D': a form against itself and against points of its own family
        int square = 0;
        for (int i = 0; i < 25; ++i) {
            QuarticForm a = make_form(FormKind::s4, Q(d(rng)), Q(d(rng)));
            if (!a.separable()) continue;
            for (const QuarticForm& b : {a, S4Family(a).next().target}) {
                Q root;
                if (!is_rational_square(Q(a.discriminant() * b.discriminant()), &root)) {
                    ++bad;
                    continue;
                }
                MultiResolvent r = resolvent_s4(a.p1, a.p2, b.p1, b.p2);
                Poly plus = r.part1 + root * r.part2, minus = r.part1 - root * r.part2;
                bad += plus.degree() != 12 || r.total % plus != Poly() || r.total % minus != Poly();
                ++square;
            }
        }
        ok = bad == 0 && s4 > 0 && d4 > 0 && square > 0;
        return std::to_string(tuples) + " tuples (" + std::to_string(s4) + " S4, " + std::to_string(d4) +
               " D4 separable pairs) match the oracle and the norm identity; " + std::to_string(square) +
               " square-discriminant pairs split into dividing degree-12 factors; mismatches " + std::to_string(bad);
    });

    report(8, [](bool& ok) {
        // (field the point must reproduce, point); dual-orbit witnesses start at the dual form
        std::vector<std::pair<Poly, FamilyPoint>> pts;
        auto take = [&](auto&& fam, int n) {
            for (int i = 0; i < n; ++i) {
                FamilyPoint pt = fam.next();
                pts.push_back({pt.source.poly(), pt});
            }
        };
        for (auto [s, t] : {std::pair{0, 1}, {2, 1}, {-1, 3}, {3, -5}}) {
            take(S4Family(make_form(FormKind::s4, Q(s), Q(t))), 5);
            take(S4UVFamily(make_form(FormKind::s4, Q(s), Q(t))), 5);
        }
        int same = 0, dual = 0;
        for (auto [a, b] : {std::pair{0, -2}, {3, 7}, {-4, 2}, {1, -3}, {5, 5}}) {
            QuarticForm f = make_form(FormKind::d4, Q(a), Q(b));
            for (long p = 1; p <= 3; ++p)
                for (D4Branch br : {D4Branch::same_orbit, D4Branch::dual_orbit}) {
                    FamilyPoint pt = d4_isom_param(f, Q(p), Q(p + 1), br);
                    if (!pt.target.separable()) continue;
                    (br == D4Branch::same_orbit ? same : dual)++;
                    pts.push_back({f.poly(), pt});
                }
            take(D4FourthPowerFamily(f), 3);
        }
        int c4 = 0;
        for (long n = 1; c4 < 15 && n < 40; ++n) {
            if (n == 3) continue;  // n^2 + 16 square
            for (const FamilyPoint& pt : c4_family_points(simplest_c4_form(n)))
                if (c4 < 15) pts.push_back({pt.source.poly(), pt}), ++c4;
        }
        int rt = 0, eq = 0;
        for (const auto& [field, pt] : pts) {
            rt += round_trips(pt);
            eq += splitting_fields_equal(field, pt.target.poly());
        }
        int total = static_cast<int>(pts.size());
        ok = total >= 100 && rt == total && eq == total && same > 0 && dual > 0 && c4 > 0;
        return std::to_string(total) + " points (" + std::to_string(same) + " same-orbit, " + std::to_string(dual) +
               " dual-orbit, " + std::to_string(c4) + " C4): round-trip " + std::to_string(rt) + ", equal fields " +
               std::to_string(eq);
    });

    report(9, [](bool& ok) {
        std::mt19937_64 rng(909);
        std::uniform_int_distribution<int> d(-12, 12), cd(1, 6);
        int done = 0, eq = 0, inv = 0, tries = 0;
        while (done < 50 && ++tries < 10000) {
            Q a = d(rng), b = d(rng), c = Q(cd(rng)) / Q(cd(rng));
            if (d(rng) < 0) c = -c;
            Poly f = make_form(FormKind::d4, a, b).poly();
            if (!make_form(FormKind::d4, a, b).separable() || factor_over_Q(f).factors.size() != 1) continue;
            Poly g = make_form(FormKind::d4, a * c * c, b * c * c * c * c).poly();
            eq += splitting_fields_equal(f, g);
            Poly shifted = f.shift(c), scaled = (Q(1) / (c * c * c * c)) * f.scale(c);
            GaloisLabel gf = quartic_galois_group(f);
            inv += quartic_galois_group(shifted) == gf && quartic_galois_group(scaled) == gf;
            ++done;
        }
        ok = done == 50 && eq == 50 && inv == 50;
        return std::to_string(done) + " irreducible separable (a,b,c): equal " + std::to_string(eq) +
               ", group shift/scale invariant " + std::to_string(inv);
    });

    std::printf("criterion 10: NOTE - search capped at n <= 1000 here; the n <= 100000 scan is available as "
                "'qgalois search simplest-quartic --range 1:100000 --jobs N' and is not run by the test suite\n");
    return failures == 0 ? 0 : 1;
}
