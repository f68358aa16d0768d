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

#include "qgalois/intersection.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qg {

extern const char* const kTableData;

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::trivial:
            return "trivial";
        case Relation::proper:
            return "proper";
        case Relation::equal:
            return "equal";
        case Relation::a_contains_b:
            return "a-contains-b";
        case Relation::b_contains_a:
            return "b-contains-a";
    }
    return "?";
}

Relation parse_relation(const std::string& name) {
    for (Relation r : {Relation::trivial, Relation::proper, Relation::equal, Relation::a_contains_b,
                       Relation::b_contains_a})
        if (relation_name(r) == name) return r;
    throw Error(ErrorKind::parse, "unknown relation '" + name + "'");
}

namespace {

GaloisLabel parse_label(const std::string& name) {
    for (GaloisLabel g : {GaloisLabel::S4, GaloisLabel::A4, GaloisLabel::D4, GaloisLabel::C4, GaloisLabel::V4,
                          GaloisLabel::S3, GaloisLabel::C3, GaloisLabel::C2, GaloisLabel::C1})
        if (label_name(g) == name) return g;
    throw Error(ErrorKind::parse, "unknown group label '" + name + "'");
}

int dt_sum(const DecompType& dt) {
    int s = 0;
    for (int d : dt) s += d;
    return s;
}

}  // namespace

DecompType parse_table_dt(const std::string& text) {
    DecompType dt;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t caret = part.find('^');
        int d = std::stoi(part.substr(0, caret));
        int k = caret == std::string::npos ? 1 : std::stoi(part.substr(caret + 1));
        for (int i = 0; i < k; ++i) dt.push_back(d);
    }
    std::sort(dt.rbegin(), dt.rend());
    return dt;
}

std::vector<TableRow> parse_table_rows(const std::string& text) {
    std::vector<TableRow> rows;
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ls(line);
        std::vector<std::string> cols;
        for (std::string c; ls >> c;) cols.push_back(c);
        if (cols.empty()) continue;
        if (cols.size() != 10)
            throw Error(ErrorKind::parse, "table line " + std::to_string(lineno) + ": expected 10 columns");
        TableRow r;
        r.table = std::stoi(cols[0]);
        r.id = cols[1];
        r.group_a = parse_label(cols[2]);
        r.group_b = parse_label(cols[3]);
        r.joint_order = std::stoi(cols[4]);
        r.joint_index = std::stoi(cols[5]);
        r.dt_r = parse_table_dt(cols[6]);
        if (cols[7] != "-") r.dt_r1 = parse_table_dt(cols[7]);
        r.degree = std::stoi(cols[8]);
        r.relation = parse_relation(cols[9]);
        if (dt_sum(r.dt_r) != 24 || (r.dt_r1 && dt_sum(*r.dt_r1) != 8))
            throw Error(ErrorKind::parse, "table row " + r.id + ": decomposition type has the wrong degree");
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = parse_table_rows(kTableData);
    return rows;
}

namespace {

bool squarefree_factors(const FactorList& fl) {
    for (const auto& f : fl.factors)
        if (f.multiplicity != 1) return false;
    return true;
}

TschirnhausenMap s4_retry_map(int i) {
    Q k(i / 2 + 1);
    return i % 2 == 0 ? TschirnhausenMap{Q(0), Q(1), k, Q(0)} : TschirnhausenMap{Q(0), Q(1), Q(0), k};
}

Q u_sequence(int i) {
    // 1, -1, 2, -2, ...
    int m = i / 2 + 1;
    return Q(i % 2 == 0 ? m : -m);
}

}  // namespace

RetryDT dt_with_retry_s4(const QuarticForm& a, const QuarticForm& b, int max_retries) {
    if (a.kind != FormKind::s4 || b.kind != FormKind::s4) throw Error(ErrorKind::form_mismatch, "S4-forms expected");
    FactorList fl = factor_over_Q(resolvent_s4(a.p1, a.p2, b.p1, b.p2).total);
    RetryDT out;
    out.block_dt = decomposition_type(fl);
    out.form_b = b;
    if (squarefree_factors(fl)) {
        out.dt = out.block_dt;
        return out;
    }
    Poly g = b.poly();
    for (int i = 0; i < max_retries; ++i) {
        Poly h = tschirnhausen_transform(g, s4_retry_map(i));
        if (discriminant(h) == 0) continue;
        QuarticForm b2 = to_s4_form(h).form;
        FactorList f2 = factor_over_Q(resolvent_s4(a.p1, a.p2, b2.p1, b2.p2).total);
        if (squarefree_factors(f2)) {
            out.dt = decomposition_type(f2);
            out.retries = i + 1;
            out.form_b = b2;
            return out;
        }
    }
    throw Error(ErrorKind::retries_exhausted,
                "no squarefree resolvent after " + std::to_string(max_retries) + " Tschirnhausen retries");
}

RetryDT dt_with_retry_d4(const QuarticForm& a, const QuarticForm& b, int max_retries) {
    if (a.kind != FormKind::d4 || b.kind != FormKind::d4) throw Error(ErrorKind::form_mismatch, "D4-forms expected");
    MultiResolvent r = resolvent_d4(a.p1, a.p2, b.p1, b.p2);
    RetryDT out;
    out.block_dt = decomposition_type(r.total);
    out.block_dt_r1 = decomposition_type(r.part1);
    for (int i = 0; i <= max_retries; ++i) {
        QuarticForm b2 = b;
        if (i > 0) {
            Q u = u_sequence(i - 1);
            const Q& s = b.p1;
            const Q& t = b.p2;
            Q w = t - s * u + u * u;
            b2 = make_form(FormKind::d4, s * s * s - 3 * s * t - 2 * s * s * u + 4 * t * u + s * u * u, t * w * w);
            if (!b2.separable()) continue;
            r = resolvent_d4(a.p1, a.p2, b2.p1, b2.p2);
        }
        FactorList f1 = factor_over_Q(r.part1);
        FactorList f2 = factor_over_Q(r.part2);
        if (!squarefree_factors(f1) || !squarefree_factors(f2) || gcd(r.part1, r.part2).degree() > 0) continue;
        out.dt_r1 = decomposition_type(f1);
        out.dt_r2 = decomposition_type(f2);
        out.dt = *out.dt_r1;
        for (int d : *out.dt_r2) out.dt.push_back(2 * d);
        std::sort(out.dt.rbegin(), out.dt.rend());
        out.retries = i;
        out.form_b = b2;
        return out;
    }
    throw Error(ErrorKind::retries_exhausted,
                "no squarefree R1*R2 after " + std::to_string(max_retries) + " Tschirnhausen retries");
}

namespace {

bool remove_part(DecompType& m, int d) {
    auto it = std::find(m.begin(), m.end(), d);
    if (it == m.end()) return false;
    m.erase(it);
    return true;
}

bool cover(DecompType rest, const DecompType& r2, std::size_t i) {
    if (i == r2.size()) return rest.empty();
    int d = r2[i];
    DecompType a = rest;
    if (remove_part(a, 2 * d) && cover(a, r2, i + 1)) return true;
    DecompType b = rest;
    return remove_part(b, d) && remove_part(b, d) && cover(b, r2, i + 1);
}

}  // namespace

bool d4_dt_compatible(const TableRow& row, const DecompType& dt_r1, const DecompType& dt_r2) {
    if (!row.dt_r1 || *row.dt_r1 != dt_r1) return false;
    DecompType rest = row.dt_r;
    for (int d : dt_r1)
        if (!remove_part(rest, d)) return false;
    return cover(rest, dt_r2, 0);
}

std::string IntersectionAnswer::relation_text() const {
    if (relation == Relation::proper) return "proper-degree-" + std::to_string(degree);
    return relation_name(relation);
}

namespace {

bool is_s4_side(GaloisLabel g) {
    return g == GaloisLabel::S4 || g == GaloisLabel::A4 || g == GaloisLabel::S3 || g == GaloisLabel::C3;
}

bool is_small(GaloisLabel g) { return g == GaloisLabel::S3 || g == GaloisLabel::C3; }

int subfield_count(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::S4:
        case GaloisLabel::C4:
        case GaloisLabel::S3:
            return 1;
        case GaloisLabel::D4:
        case GaloisLabel::V4:
            return 3;
        default:
            return 0;
    }
}

// Number of quadratic subfields of the intersection field implied by a row.
int expected_common(const TableRow& r) {
    switch (r.relation) {
        case Relation::trivial:
            return 0;
        case Relation::equal:
        case Relation::b_contains_a:
            return subfield_count(r.group_a);
        case Relation::a_contains_b:
            return subfield_count(r.group_b);
        case Relation::proper:
            break;
    }
    switch (r.degree) {
        case 2:
        case 6:
            return 1;
        case 4:
            return 3;
        default:
            return 0;
    }
}

int count_common(const std::vector<Q>& x, const std::vector<Q>& y) {
    int n = 0;
    for (const auto& a : x)
        for (const auto& b : y)
            if (same_quadratic_field(a, b)) {
                ++n;
                break;
            }
    return n;
}

Relation flip(Relation r) {
    if (r == Relation::a_contains_b) return Relation::b_contains_a;
    if (r == Relation::b_contains_a) return Relation::a_contains_b;
    return r;
}

}  // namespace

IntersectionAnswer intersect(const Poly& f, const Poly& g, int max_retries) {
    Classification ca = classify(f);
    Classification cb = classify(g);
    for (GaloisLabel l : {ca.label, cb.label})
        if (group_order(l) <= 2)
            throw Error(ErrorKind::out_of_scope,
                        "Galois group " + label_name(l) + " is out of scope (order <= 2 or reducible shape)");

    IntersectionAnswer ans;
    ans.group_a = ca.label;
    ans.group_b = cb.label;
    ans.subfields_a = ca.subfields;
    ans.subfields_b = cb.subfields;
    ans.common_subfields = count_common(ca.subfields, cb.subfields);

    bool s4_path = is_s4_side(ca.label) || is_s4_side(cb.label);
    bool swap;
    if (s4_path && (is_small(ca.label) || is_small(cb.label)))
        swap = !is_small(ca.label);
    else
        swap = group_order(cb.label) > group_order(ca.label);
    ans.swapped = swap;
    const Poly& pa = swap ? g : f;
    const Poly& pb = swap ? f : g;
    const Classification& xa = swap ? cb : ca;
    const Classification& xb = swap ? ca : cb;

    if (s4_path) {
        ans.resolvent = ResolventCase::s4_pair;
        ans.form_a = to_s4_form(pa).form;
        ans.form_b = to_s4_form(pb).form;
        ans.evidence = dt_with_retry_s4(ans.form_a, ans.form_b, max_retries);
    } else {
        ans.resolvent = ResolventCase::d4_pair;
        ans.form_a = *xa.d4;
        ans.form_b = *xb.d4;
        ans.evidence = dt_with_retry_d4(ans.form_a, ans.form_b, max_retries);
    }

    std::vector<const TableRow*> cands;
    for (const auto& r : table_rows()) {
        if (r.group_a != xa.label || r.group_b != xb.label) continue;
        if (ans.evidence.dt_r1) {
            if (!d4_dt_compatible(r, *ans.evidence.dt_r1, *ans.evidence.dt_r2)) continue;
        } else if (r.dt_r != ans.evidence.dt) {
            continue;
        }
        cands.push_back(&r);
    }
    std::vector<const TableRow*> kept;
    for (const auto* r : cands)
        if (expected_common(*r) == ans.common_subfields) kept.push_back(r);

    auto describe = [&]() {
        std::string s = label_name(xa.label) + " x " + label_name(xb.label) + ", DT " + dt_to_string(ans.evidence.dt);
        if (ans.evidence.dt_r1) s += ", DT(R1) " + dt_to_string(*ans.evidence.dt_r1);
        s += ", common quadratic subfields " + std::to_string(ans.common_subfields);
        return s;
    };
    if (kept.empty()) throw Error(ErrorKind::inconsistent, "inconsistent DT: no table row matches " + describe());
    for (const auto* r : kept)
        if (r->degree != kept.front()->degree || r->relation != kept.front()->relation)
            throw Error(ErrorKind::inconsistent, "ambiguous table rows for " + describe());

    const TableRow& row = *kept.front();
    ans.table = row.table;
    ans.degree = row.degree;
    ans.relation = swap ? flip(row.relation) : row.relation;
    bool same_group = true;
    for (const auto* r : kept) {
        ans.rows.push_back(r->id);
        if (r->joint_order != row.joint_order || r->joint_index != row.joint_index) same_group = false;
    }
    if (same_group) ans.joint_group_id = std::make_pair(row.joint_order, row.joint_index);
    return ans;
}

bool splitting_fields_equal(const Poly& f, const Poly& g) { return intersect(f, g).relation == Relation::equal; }

}  // namespace qg
