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

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qgalois/factorization.hpp"
#include "qgalois/intersection.hpp"
#include "qgalois/isomorphisms.hpp"
#include "qgalois/oracle.hpp"
#include "qgalois/quartic_forms.hpp"
#include "qgalois/resolvents.hpp"
#include "report.hpp"

using namespace qg;
using qg::report::Json;

namespace {

struct Options {
    std::string form;
    long bound = 50;
    int retries = 16;
    bool machine = false;
    bool timing = false;
    int jobs = 1;
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse: return 2;
        case ErrorKind::inseparable: return 3;
        case ErrorKind::out_of_scope: return 4;
        case ErrorKind::form_mismatch: return 5;
        default: return 1;
    }
}

std::string kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::zero_divisor: return "zero-divisor";
        case ErrorKind::domain: return "domain";
        case ErrorKind::inseparable: return "inseparable";
        case ErrorKind::out_of_scope: return "out-of-scope";
        case ErrorKind::form_mismatch: return "form-mismatch";
        case ErrorKind::inconsistent: return "inconsistent";
        case ErrorKind::retries_exhausted: return "retries-exhausted";
        case ErrorKind::precision: return "precision";
    }
    return "unknown";
}

Json qj(const Q& q) { return to_string(q); }

Json qlist(const std::vector<Q>& v) {
    Json a = Json::array();
    for (const Q& q : v) a.push_back(qj(q));
    return a;
}

Json form_json(const QuarticForm& f) {
    return Json{{"kind", form_kind_name(f.kind)}, {"params", qlist({f.p1, f.p2})}, {"poly", f.poly().to_string()}};
}

Json map_json(const TschirnhausenMap& m) { return qlist({m.c0, m.c1, m.c2, m.c3}); }

Json dt_json(const std::optional<DecompType>& dt) {
    if (!dt) return nullptr;
    return dt_to_string(*dt);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// A polynomial, or a parameter tuple when a form is given ("--form s4" or a trailing "S4-form").
struct Input {
    std::string text;
    Poly poly;
    std::optional<QuarticForm> form;
};

Input read_input(const std::string& raw, const std::string& form_flag) {
    Input in;
    in.text = raw;
    std::string text = raw;
    std::string kind = form_flag;
    auto sp = text.find_last_of(' ');
    if (sp != std::string::npos) {
        std::string tail = lower(text.substr(sp + 1));
        if (tail.size() > 5 && tail.substr(tail.size() - 5) == "-form") {
            kind = tail.substr(0, tail.size() - 5);
            text = text.substr(0, sp);
        }
    }
    if (!kind.empty()) {
        FormKind fk;
        try {
            fk = parse_form_kind(kind);
        } catch (const Error&) {
            throw Error(ErrorKind::parse, "unknown form kind '" + kind + "'");
        }
        std::vector<Q> params = parse_tuple(text);
        if (params.size() != 2) throw Error(ErrorKind::parse, "a form needs two parameters: " + raw);
        in.form = make_form(fk, params[0], params[1]);
        in.poly = in.form->poly();
    } else {
        in.poly = parse_poly(text);
    }
    if (in.poly.degree() != 4) throw Error(ErrorKind::parse, "expected a quartic: " + raw);
    in.poly = in.poly.monic();
    return in;
}

Json input_json(const Input& in) {
    Json j{{"text", in.text}, {"poly", in.poly.to_string()}};
    if (in.form) j["form"] = form_json(*in.form);
    return j;
}

void require_separable(const Input& in) {
    if (discriminant(in.poly) == 0) throw Error(ErrorKind::inseparable, in.poly.to_string() + " is inseparable");
}

Json classification_json(const Poly& f) {
    Classification c = classify(f);
    Json j{{"label", label_name(c.label)}, {"order", group_order(c.label)},
           {"discriminant", qj(discriminant(f))}, {"quadratic_subfields", qlist(c.subfields)}};
    j["d4_form"] = c.d4 ? form_json(*c.d4) : Json(nullptr);
    if (c.label == GaloisLabel::S4 || c.label == GaloisLabel::A4) {
        S4Reduction r = to_s4_form(f);
        j["s4_form"] = form_json(r.form);
        j["s4_map"] = map_json(r.map);
    } else {
        j["s4_form"] = nullptr;
    }
    if (c.label == GaloisLabel::C4 && c.d4) j["c4_form"] = form_json(c4_from_d4(*c.d4));
    return j;
}

Json answer_json(const IntersectionAnswer& a) {
    Json j{{"group_a", label_name(a.group_a)},
           {"group_b", label_name(a.group_b)},
           {"relation", a.relation_text()},
           {"degree", a.degree},
           {"table", a.table},
           {"rows", a.rows},
           {"joint_group", a.joint_group_id ? Json::array({a.joint_group_id->first, a.joint_group_id->second})
                                            : Json(nullptr)},
           {"resolvent", case_name(a.resolvent)},
           {"swapped", a.swapped},
           {"form_a", form_json(a.form_a)},
           {"form_b", form_json(a.form_b)}};
    const RetryDT& e = a.evidence;
    j["evidence"] = Json{{"dt", dt_to_string(e.dt)},
                         {"block_dt", dt_to_string(e.block_dt)},
                         {"dt_r1", dt_json(e.dt_r1)},
                         {"block_dt_r1", dt_json(e.block_dt_r1)},
                         {"dt_r2", dt_json(e.dt_r2)},
                         {"retries", e.retries},
                         {"squarefree", e.squarefree},
                         {"form_b_used", form_json(e.form_b)}};
    j["subfields_a"] = qlist(a.subfields_a);
    j["subfields_b"] = qlist(a.subfields_b);
    j["common_quadratic_subfields"] = a.common_subfields;
    return j;
}

Json point_json(const FamilyPoint& p) {
    Json j{{"family", p.family}};
    if (!p.branch.empty()) j["branch"] = p.branch;
    j["params"] = qlist(p.params);
    j["source"] = form_json(p.source);
    j["target"] = form_json(p.target);
    j["witness_map"] = map_json(p.witness);
    return j;
}

Json cmd_galois(const Input& f) {
    require_separable(f);
    return Json{{"classification", classification_json(f.poly)}};
}

Json cmd_intersect(const Input& f, const Input& g, const Options& o) {
    require_separable(f);
    require_separable(g);
    return Json{{"answer", answer_json(intersect(f.poly, g.poly, o.retries))}};
}

Json cmd_isom(const Input& f, const Input& g, const Options& o) {
    require_separable(f);
    require_separable(g);
    IntersectionAnswer a = intersect(f.poly, g.poly, o.retries);
    bool equal = a.relation == Relation::equal;
    Json j{{"verdict", equal ? "equal" : "not-equal"}, {"relation", a.relation_text()}, {"rows", a.rows},
           {"bound", o.bound}};
    j["certificate"] = nullptr;
    if (equal) {
        if (auto c = find_isom_certificate(f.poly, g.poly, o.bound)) {
            Json cj = point_json(c->point);
            cj["roundtrip"] = tschirnhausen_transform(c->point.source.poly(), c->point.witness) ==
                              c->point.target.poly();
            j["certificate"] = cj;
        }
    }
    return j;
}

QuarticForm family_source(const Input& in, FormKind need) {
    if (in.form) {
        if (in.form->kind != need)
            throw Error(ErrorKind::form_mismatch, "family needs a " + form_kind_name(need) + "-form, got " +
                                                      form_kind_name(in.form->kind) + "-form");
        return *in.form;
    }
    try {
        if (need == FormKind::s4) return to_s4_form(in.poly).form;
        QuarticForm d4 = in.poly.coeff(3) == 0 && in.poly.coeff(1) == 0
                             ? make_form(FormKind::d4, in.poly.coeff(2), in.poly.coeff(0))
                             : to_d4_form(in.poly).form;
        if (need == FormKind::c4) return c4_from_d4(d4);
        if (need == FormKind::v4) {
            Q v;
            if (!is_rational_square(d4.p2, &v)) throw Error(ErrorKind::form_mismatch, "constant term is not a square");
            return make_form(FormKind::v4, d4.p1, v);
        }
        return d4;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::inseparable) throw;
        throw Error(ErrorKind::form_mismatch,
                    in.poly.to_string() + " has no " + form_kind_name(need) + "-form: " + e.what());
    }
}

Json cmd_family(const Input& in, const std::string& kind, long count) {
    require_separable(in);
    static const std::vector<std::string> kinds{"s4-p", "s4-uv", "d4-u", "d4-pq", "c4", "d4-hil"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw Error(ErrorKind::parse, "unknown family kind '" + kind + "'");
    FormKind need = kind.rfind("s4", 0) == 0 ? FormKind::s4 : kind == "c4" ? FormKind::c4 : FormKind::d4;
    QuarticForm src = family_source(in, need);
    if (!src.separable()) throw Error(ErrorKind::inseparable, "form " + src.to_string() + " is inseparable");

    std::vector<FamilyPoint> pool;
    std::size_t pool_pos = 0;
    std::optional<S4Family> s4p;
    std::optional<S4UVFamily> s4uv;
    std::optional<D4PQFamily> d4pq;
    std::optional<D4FourthPowerFamily> d4hil;
    std::size_t u_index = 0;
    if (kind == "s4-p") s4p.emplace(src);
    if (kind == "s4-uv") s4uv.emplace(src);
    if (kind == "d4-pq") d4pq.emplace(src);
    if (kind == "d4-hil") d4hil.emplace(src);
    if (kind == "c4") pool = c4_family_points(src);
    auto next = [&]() -> std::optional<FamilyPoint> {
        if (s4p) return s4p->next();
        if (s4uv) return s4uv->next();
        if (d4pq) return d4pq->next();
        if (d4hil) return d4hil->next();
        if (kind == "d4-u") {
            for (;;) {
                try {
                    return d4_u_point(src, param_at(u_index++));
                } catch (const Error&) {
                }
            }
        }
        if (pool_pos < pool.size()) return pool[pool_pos++];
        return std::nullopt;
    };

    Json points = Json::array();
    long attempts = 0;
    while (static_cast<long>(points.size()) < count && attempts++ < 100000) {
        std::optional<FamilyPoint> p = next();
        if (!p) break;
        if (tschirnhausen_transform(p->source.poly(), p->witness) != p->target.poly()) continue;
        Json pj = point_json(*p);
        pj["roundtrip"] = true;
        try {
            bool eq = splitting_fields_equal(p->source.poly(), p->target.poly());
            if (!eq) continue;
            pj["splitting_fields_equal"] = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::out_of_scope) throw;
            pj["splitting_fields_equal"] = nullptr;
        }
        points.push_back(pj);
    }
    Json skipped = Json::array();
    const std::vector<SkippedParam>* sk = s4p ? &s4p->skipped() : d4hil ? &d4hil->skipped() : nullptr;
    if (sk)
        for (const auto& s : *sk) skipped.push_back(Json{{"params", qlist(s.params)}, {"reason", s.reason}});
    return Json{{"kind", kind}, {"source", form_json(src)}, {"count", count}, {"points", points},
                {"skipped", skipped}};
}

std::pair<long, long> parse_range(const std::string& text, std::pair<long, long> dflt) {
    if (text.empty()) return dflt;
    auto colon = text.find(':', text[0] == '-' ? 1 : 0);
    try {
        if (colon == std::string::npos) throw std::invalid_argument(text);
        std::size_t used = 0;
        long lo = std::stol(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(text);
        std::string hs = text.substr(colon + 1);
        long hi = std::stol(hs, &used);
        if (used != hs.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "range must look like LO:HI, got '" + text + "'");
    }
}

Json cmd_search(const std::string& family, const std::string& range, const Options& o) {
    Json hits = Json::array();
    std::pair<long, long> r;
    if (family == "table2") {
        r = parse_range(range, {-256, 768});
        for (const Table2Row& row : search_table2(r.first, r.second))
            hits.push_back(Json{{"b", row.b.get_str()},
                                {"B", row.B.get_str()},
                                {"a_target", row.a_target.get_str()},
                                {"b_target", row.b_target.get_str()}});
    } else if (family == "simplest-quartic") {
        r = parse_range(range, {1, 1000});
        if (r.first < 1) throw Error(ErrorKind::parse, "simplest-quartic range must be positive");
        for (const SimplestHit& h : search_simplest(r.first, r.second, o.jobs))
            hits.push_back(Json{{"m", h.m},
                                {"n", h.n},
                                {"equal", h.equal},
                                {"via", h.rewritten ? "rewrite" : "direct"},
                                {"roots", qlist(h.roots)}});
    } else {
        throw Error(ErrorKind::parse, "unknown search family '" + family + "'");
    }
    return Json{{"family", family}, {"range", Json::array({r.first, r.second})}, {"hits", hits}};
}

Json poly_dt(const Poly& p) {
    return Json{{"poly", p.to_string()}, {"dt", dt_to_string(decomposition_type(factor_over_Q(p)))}};
}

Json cmd_resolvent(const Input& f, const Input& g, const Options& o, bool self_check) {
    require_separable(f);
    require_separable(g);
    FormKind kind = o.form.empty() ? FormKind::s4 : parse_form_kind(o.form);
    if (f.form && g.form && f.form->kind != g.form->kind)
        throw Error(ErrorKind::form_mismatch, "the two forms have different kinds");
    if (f.form) kind = f.form->kind;
    QuarticForm a = family_source(f, kind), b = family_source(g, kind);
    Json j{{"case", form_kind_name(kind)}, {"form_a", form_json(a)}, {"form_b", form_json(b)}};
    std::optional<Poly> oracle_s4, oracle_d4;
    if (kind == FormKind::s4) {
        MultiResolvent r = resolvent_s4(a.p1, a.p2, b.p1, b.p2);
        j["total"] = poly_dt(r.total);
        j["g1"] = r.part1.to_string();
        j["g2"] = r.part2.to_string();
        oracle_s4 = r.total;
    } else if (kind == FormKind::d4) {
        MultiResolvent r = resolvent_d4(a.p1, a.p2, b.p1, b.p2);
        j["total"] = poly_dt(r.total);
        j["r1"] = poly_dt(r.part1);
        j["r2"] = poly_dt(r.part2);
        oracle_s4 = r.total;
        oracle_d4 = r.part1;
    } else if (kind == FormKind::c4) {
        C4PairResolvent r = resolvent_c4_pair(a.p1, a.p2, b.p1, b.p2);
        j["plus"] = poly_dt(r.plus);
        j["minus"] = poly_dt(r.minus);
        j["A"] = qj(r.A);
        j["c_plus"] = qj(r.c_plus);
        j["c_minus"] = qj(r.c_minus);
    } else {
        j["total"] = poly_dt(resolvent_v4(a.p1, a.p2, b.p1, b.p2));
    }
    if (self_check) {
        Json sc{{"start_bits", oracle_start_bits()}};
        bool ok = true;
        if (oracle_s4) {
            OracleResult r = numeric_matching_oracle(a.poly(), b.poly(), OracleTag::s4);
            sc["s4_match"] = r.resolvent == *oracle_s4;
            sc["s4_bits"] = r.bits;
            ok = ok && r.resolvent == *oracle_s4;
        }
        if (oracle_d4) {
            OracleResult r = numeric_matching_oracle(a.poly(), b.poly(), OracleTag::d4);
            sc["d4_match"] = r.resolvent == *oracle_d4;
            sc["d4_bits"] = r.bits;
            ok = ok && r.resolvent == *oracle_d4;
        }
        if (!oracle_s4 && !oracle_d4) sc["note"] = "no numeric oracle for this case";
        j["self_check"] = sc;
        if (!ok) throw Error(ErrorKind::inconsistent, "closed-form resolvent disagrees with the numeric oracle");
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splitting fields of quartic polynomials over Q"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--form", o.form, "Read inputs as parameter tuples of this form")
            ->check(CLI::IsMember({"s4", "d4", "c4", "v4"}));
        sub->add_option("--bound", o.bound, "Height bound for certificate search")->check(CLI::NonNegativeNumber);
        sub->add_option("--retries", o.retries, "Maximum retries for non-squarefree resolvents")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--machine", o.machine, "Print one JSON document");
        sub->add_flag("--timing", o.timing, "Include wall-clock timing");
        sub->add_option("--jobs", o.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
    };

    std::string p1, p2, kind, family, range;
    long count = 5;
    bool self_check = false;

    auto* galois = app.add_subcommand("galois", "Galois group and normal forms of a quartic");
    galois->add_option("poly", p1)->required();
    auto* inter = app.add_subcommand("intersect", "Intersection of two splitting fields");
    inter->add_option("f", p1)->required();
    inter->add_option("g", p2)->required();
    auto* isom = app.add_subcommand("isom", "Decide equality of splitting fields and search a certificate");
    isom->add_option("f", p1)->required();
    isom->add_option("g", p2)->required();
    auto* fam = app.add_subcommand("family", "Points of an isomorphism family");
    fam->add_option("poly", p1)->required();
    fam->add_option("kind", kind, "s4-p, s4-uv, d4-u, d4-pq, c4, d4-hil")->required();
    fam->add_option("count", count)->check(CLI::NonNegativeNumber);
    auto* search = app.add_subcommand("search", "Parameter-space searches");
    search->add_option("family", family, "table2 or simplest-quartic")->required();
    search->add_option("--range", range, "LO:HI, inclusive");
    auto* res = app.add_subcommand("resolvent", "Exact multi-resolvent of two quartics");
    res->add_option("f", p1)->required();
    res->add_option("g", p2)->required();
    res->add_flag("--self-check", self_check, "Compare with the numeric matching oracle (QG_PRECISION_BITS)");
    for (auto* sub : {galois, inter, isom, fam, search, res}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Json doc{{"command", cmd->get_name()}};
    Json inputs = Json::object();
    int rc = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Json result;
        if (cmd == search) {
            inputs["family"] = family;
            result = cmd_search(family, range, o);
        } else {
            Input f = read_input(p1, o.form);
            inputs["f"] = input_json(f);
            if (cmd == galois) {
                result = cmd_galois(f);
            } else if (cmd == fam) {
                inputs["kind"] = kind;
                result = cmd_family(f, kind, count);
            } else {
                Input g = read_input(p2, o.form);
                inputs["g"] = input_json(g);
                if (cmd == inter) result = cmd_intersect(f, g, o);
                else if (cmd == isom) result = cmd_isom(f, g, o);
                else result = cmd_resolvent(f, g, o, self_check);
            }
        }
        doc["inputs"] = inputs;
        doc["status"] = "ok";
        doc["result"] = result;
    } catch (const Error& e) {
        doc["inputs"] = inputs;
        doc["status"] = "error";
        doc["error"] = Json{{"kind", kind_name(e.kind())}, {"message", e.what()}};
        rc = exit_code(e.kind());
        std::cerr << "qgalois: " << e.what() << "\n";
    }
    if (o.timing)
        doc["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (o.machine) std::cout << doc.dump(2) << "\n";
    else std::cout << qg::report::to_lines(doc);
    return rc;
}
