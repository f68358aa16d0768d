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

#ifndef QGALOIS_QUARTIC_FORMS_HPP
#define QGALOIS_QUARTIC_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgalois/exact_poly.hpp"

namespace qg {

// X^4 + a1 X^3 + a2 X^2 + a3 X + a4
struct GeneralQuartic {
    Q a1, a2, a3, a4;

    static GeneralQuartic from_poly(const Poly& f);  // makes f monic; throws unless degree 4
    Poly poly() const;
};

enum class FormKind { s4, d4, c4, v4 };

//   s4: X^4 + s X^2 + t X + t        (p1, p2) = (s, t)
//   d4: X^4 + s X^2 + t              (s, t)
//   c4: X^4 + s X^2 + s^2/(u^2 + 4)  (s, u)
//   v4: X^4 + s X^2 + v^2            (s, v)
struct QuarticForm {
    FormKind kind = FormKind::s4;
    Q p1, p2;

    Poly poly() const;
    Q discriminant() const;
    bool separable() const;
    std::string to_string() const;  // "(s,t)"

    friend bool operator==(const QuarticForm& x, const QuarticForm& y) {
        return x.kind == y.kind && x.p1 == y.p1 && x.p2 == y.p2;
    }
    friend bool operator!=(const QuarticForm& x, const QuarticForm& y) { return !(x == y); }
};

QuarticForm make_form(FormKind kind, const Q& p1, const Q& p2);
FormKind parse_form_kind(const std::string& name);
std::string form_kind_name(FormKind kind);

Q s4_discriminant(const Q& s, const Q& t);
Q d4_discriminant(const Q& s, const Q& t);

enum class GaloisLabel { S4, A4, D4, C4, V4, S3, C3, C2, C1, reducible_other };

std::string label_name(GaloisLabel g);
int group_order(GaloisLabel g);  // 0 for reducible-other

struct S4Reduction {
    QuarticForm form;
    TschirnhausenMap map;  // sends roots of the input to roots of form.poly()
};
S4Reduction to_s4_form(const Poly& g);

Poly resolvent_cubic(const GeneralQuartic& g);

struct D4Reduction {
    QuarticForm form;
    Q root;  // rational root of the resolvent cubic that was used
};
D4Reduction to_d4_form(const Poly& g);

QuarticForm dual_d4_form(const QuarticForm& f);

struct Classification {
    GaloisLabel label = GaloisLabel::reducible_other;
    // D4-form with the same splitting field, for irreducible inputs with group inside D4
    std::optional<QuarticForm> d4;
    // Nontrivial quadratic subfields of the splitting field, one non-square
    // representative each: the field is Q(sqrt(rep)).
    std::vector<Q> subfields;
};

Classification classify(const Poly& g);
GaloisLabel quartic_galois_group(const Poly& g);
GaloisLabel cubic_galois_group(const Poly& g);  // S3 or C3 for irreducible cubics

// Kernels of b, (a^2-4b)/b and a^2-4b for a D4-form (a,b); kernel 1 entries are kept.
std::vector<Z> quadratic_subfields(const QuarticForm& f);

bool same_quadratic_field(const Q& x, const Q& y);

}  // namespace qg

#endif
