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

#include "qgalois/quartic_forms.hpp"

#include <algorithm>

#include "qgalois/factorization.hpp"

namespace qg {

GeneralQuartic GeneralQuartic::from_poly(const Poly& f) {
    if (f.degree() != 4) throw Error(ErrorKind::domain, "expected a quartic, got degree " + std::to_string(f.degree()));
    Poly m = f.monic();
    return {m[3], m[2], m[1], m[0]};
}

Poly GeneralQuartic::poly() const { return Poly{a4, a3, a2, a1, Q(1)}; }

Q s4_discriminant(const Q& s, const Q& t) {
    Q s2 = s * s, t2 = t * t;
    return t * (16 * s2 * s2 - 128 * s2 * t - 4 * s2 * s * t + 256 * t2 + 144 * s * t2 - 27 * t2 * t);
}

Q d4_discriminant(const Q& s, const Q& t) {
    Q d = s * s - 4 * t;
    return 16 * t * d * d;
}

Poly QuarticForm::poly() const {
    switch (kind) {
        case FormKind::s4:
            return Poly{p2, p2, p1, Q(0), Q(1)};
        case FormKind::d4:
            return Poly{p2, Q(0), p1, Q(0), Q(1)};
        case FormKind::c4:
            return Poly{p1 * p1 / (p2 * p2 + 4), Q(0), p1, Q(0), Q(1)};
        case FormKind::v4:
            return Poly{p2 * p2, Q(0), p1, Q(0), Q(1)};
    }
    return {};
}

Q QuarticForm::discriminant() const {
    switch (kind) {
        case FormKind::s4:
            return s4_discriminant(p1, p2);
        case FormKind::d4:
            return d4_discriminant(p1, p2);
        case FormKind::c4:
            return d4_discriminant(p1, p1 * p1 / (p2 * p2 + 4));
        case FormKind::v4:
            return d4_discriminant(p1, p2 * p2);
    }
    return 0;
}

bool QuarticForm::separable() const { return discriminant() != 0; }

std::string QuarticForm::to_string() const { return "(" + p1.get_str() + "," + p2.get_str() + ")"; }

QuarticForm make_form(FormKind kind, const Q& p1, const Q& p2) {
    QuarticForm f{kind, p1, p2};
    f.p1.canonicalize();
    f.p2.canonicalize();
    return f;
}

FormKind parse_form_kind(const std::string& name) {
    if (name == "s4") return FormKind::s4;
    if (name == "d4") return FormKind::d4;
    if (name == "c4") return FormKind::c4;
    if (name == "v4") return FormKind::v4;
    throw Error(ErrorKind::parse, "unknown form '" + name + "' (expected s4, d4, c4 or v4)");
}

std::string form_kind_name(FormKind kind) {
    switch (kind) {
        case FormKind::s4:
            return "s4";
        case FormKind::d4:
            return "d4";
        case FormKind::c4:
            return "c4";
        case FormKind::v4:
            return "v4";
    }
    return "?";
}

std::string label_name(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::S4:
            return "S4";
        case GaloisLabel::A4:
            return "A4";
        case GaloisLabel::D4:
            return "D4";
        case GaloisLabel::C4:
            return "C4";
        case GaloisLabel::V4:
            return "V4";
        case GaloisLabel::S3:
            return "S3";
        case GaloisLabel::C3:
            return "C3";
        case GaloisLabel::C2:
            return "C2";
        case GaloisLabel::C1:
            return "C1";
        case GaloisLabel::reducible_other:
            return "reducible-other";
    }
    return "?";
}

int group_order(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::S4:
            return 24;
        case GaloisLabel::A4:
            return 12;
        case GaloisLabel::D4:
            return 8;
        case GaloisLabel::C4:
        case GaloisLabel::V4:
            return 4;
        case GaloisLabel::S3:
            return 6;
        case GaloisLabel::C3:
            return 3;
        case GaloisLabel::C2:
            return 2;
        case GaloisLabel::C1:
            return 1;
        case GaloisLabel::reducible_other:
            return 0;
    }
    return 0;
}

namespace {

struct Depressed {
    Q A2, A3, A4;
};

Depressed depress(const GeneralQuartic& g) {
    Poly h = g.poly().shift(-g.a1 / 4);
    return {h[2], h[1], h[0]};
}

TschirnhausenMap compose_linear(const TschirnhausenMap& inner, const Q& c, const Q& lam) {
    // c + lam * inner(Y)
    return {c + lam * inner.c0, lam * inner.c1, lam * inner.c2, lam * inner.c3};
}

void require_separable(const Poly& g) {
    if (discriminant(g) == 0) throw Error(ErrorKind::inseparable, "polynomial is not separable: " + g.to_string());
}

}  // namespace

S4Reduction to_s4_form(const Poly& input) {
    GeneralQuartic g = GeneralQuartic::from_poly(input);
    require_separable(g.poly());
    for (int k = 0; k <= 16; ++k) {
        TschirnhausenMap pre{Q(0), Q(1), Q(0), Q(0)};
        Poly h = g.poly();
        if (k > 0) {
            pre = {Q(0), Q(k), Q(1), Q(0)};
            h = tschirnhausen_transform(h, pre);
            if (discriminant(h) == 0) continue;
        }
        GeneralQuartic gh = GeneralQuartic::from_poly(h);
        Depressed d = depress(gh);
        if (d.A3 == 0 || d.A4 == 0) continue;
        Q lam = d.A3 / d.A4;
        QuarticForm form = make_form(FormKind::s4, d.A2 * d.A3 * d.A3 / (d.A4 * d.A4),
                                     d.A3 * d.A3 * d.A3 * d.A3 / (d.A4 * d.A4 * d.A4));
        return {form, compose_linear(pre, lam * gh.a1 / 4, lam)};
    }
    throw Error(ErrorKind::retries_exhausted, "no non-degenerate S4-form found for " + input.to_string());
}

Poly resolvent_cubic(const GeneralQuartic& g) {
    return Poly{-(g.a3 * g.a3 + g.a1 * g.a1 * g.a4 - 4 * g.a2 * g.a4), g.a1 * g.a3 - 4 * g.a4, -g.a2, Q(1)};
}

namespace {

std::optional<Q> pick_cubic_root(const Poly& cubic) {
    std::vector<Q> roots = rational_roots(cubic);
    if (roots.empty()) return std::nullopt;
    std::sort(roots.begin(), roots.end(), [](const Q& x, const Q& y) {
        if (abs(x) != abs(y)) return abs(x) < abs(y);
        return x < y;
    });
    return roots.front();
}

QuarticForm d4_from_root(const GeneralQuartic& g, const Q& c) {
    Q a = -g.a1 * g.a1 + 2 * g.a2 + 2 * c;
    Q b = g.a2 * g.a2 - 4 * g.a1 * g.a3 + 16 * g.a4 + 2 * g.a2 * c - 3 * c * c;
    return make_form(FormKind::d4, a, b);
}

}  // namespace

D4Reduction to_d4_form(const Poly& input) {
    GeneralQuartic g = GeneralQuartic::from_poly(input);
    auto c = pick_cubic_root(resolvent_cubic(g));
    if (!c) throw Error(ErrorKind::out_of_scope, "Galois group not <= D4: resolvent cubic has no rational root");
    if (g.a1 * g.a1 * g.a1 - 4 * g.a1 * g.a2 + 8 * g.a3 == 0)
        throw Error(ErrorKind::domain,
                    "degenerate input (a1^3 - 4 a1 a2 + 8 a3 = 0); shift X -> X - a1/4 to get X^4 + aX^2 + b directly");
    return {d4_from_root(g, *c), *c};
}

QuarticForm dual_d4_form(const QuarticForm& f) {
    if (f.kind != FormKind::d4) throw Error(ErrorKind::form_mismatch, "dual form needs a D4-form");
    return make_form(FormKind::d4, 2 * f.p1, f.p1 * f.p1 - 4 * f.p2);
}

bool same_quadratic_field(const Q& x, const Q& y) { return is_rational_square(x * y); }

namespace {

void add_field(std::vector<Q>& out, const Q& rep) {
    if (rep == 0 || is_rational_square(rep)) return;
    for (const auto& r : out)
        if (same_quadratic_field(r, rep)) return;
    out.push_back(rep);
}

// Biquadratic D4-form with the splitting field of the irreducible quartic g.
QuarticForm biquadratic_model(const GeneralQuartic& g) {
    if (g.a1 * g.a1 * g.a1 - 4 * g.a1 * g.a2 + 8 * g.a3 == 0) {
        Depressed d = depress(g);
        return make_form(FormKind::d4, d.A2, d.A4);
    }
    return to_d4_form(g.poly()).form;
}

}  // namespace

GaloisLabel cubic_galois_group(const Poly& g) {
    if (g.degree() != 3) throw Error(ErrorKind::domain, "expected a cubic");
    return is_rational_square(discriminant(g)) ? GaloisLabel::C3 : GaloisLabel::S3;
}

Classification classify(const Poly& input) {
    GeneralQuartic g = GeneralQuartic::from_poly(input);
    Poly f = g.poly();
    Q disc = discriminant(f);
    if (disc == 0) throw Error(ErrorKind::inseparable, "polynomial is not separable: " + f.to_string());
    Classification out;
    FactorList fl = factor_over_Q(f);
    if (fl.factors.size() > 1) {
        std::vector<int> degs;
        for (const auto& fac : fl.factors) degs.push_back(fac.poly.degree());
        std::sort(degs.begin(), degs.end());
        if (degs == std::vector<int>{1, 3}) {
            out.label = cubic_galois_group(fl.factors[1].poly);
            if (out.label == GaloisLabel::S3) add_field(out.subfields, disc);
        } else if (degs == std::vector<int>{1, 1, 1, 1}) {
            out.label = GaloisLabel::C1;
        } else if (degs == std::vector<int>{2, 2} &&
                   same_quadratic_field(discriminant(fl.factors[0].poly), discriminant(fl.factors[1].poly))) {
            out.label = GaloisLabel::C2;
            add_field(out.subfields, discriminant(fl.factors[0].poly));
        } else {
            out.label = GaloisLabel::reducible_other;
            for (const auto& fac : fl.factors)
                if (fac.poly.degree() == 2) add_field(out.subfields, discriminant(fac.poly));
        }
        return out;
    }
    auto c = pick_cubic_root(resolvent_cubic(g));
    if (!c) {
        out.label = is_rational_square(disc) ? GaloisLabel::A4 : GaloisLabel::S4;
        if (out.label == GaloisLabel::S4) add_field(out.subfields, disc);
        return out;
    }
    QuarticForm m = biquadratic_model(g);
    const Q& a = m.p1;
    const Q& b = m.p2;
    Q e = a * a - 4 * b;
    out.d4 = m;
    Q v;
    if (is_rational_square(b, &v)) {
        out.label = GaloisLabel::V4;
        add_field(out.subfields, -a + 2 * v);
        add_field(out.subfields, -a - 2 * v);
        add_field(out.subfields, e);
    } else if (is_rational_square(e / b)) {
        out.label = GaloisLabel::C4;
        add_field(out.subfields, b);
    } else {
        out.label = GaloisLabel::D4;
        add_field(out.subfields, b);
        add_field(out.subfields, e / b);
        add_field(out.subfields, e);
    }
    return out;
}

GaloisLabel quartic_galois_group(const Poly& g) { return classify(g).label; }

std::vector<Z> quadratic_subfields(const QuarticForm& f) {
    if (f.kind != FormKind::d4) throw Error(ErrorKind::form_mismatch, "quadratic subfields need a D4-form");
    if (!f.separable()) throw Error(ErrorKind::inseparable, "D4-form " + f.to_string() + " is not separable");
    const Q& a = f.p1;
    const Q& b = f.p2;
    Q e = a * a - 4 * b;
    return {squarefree_kernel(b), squarefree_kernel(e / b), squarefree_kernel(e)};
}

}  // namespace qg
