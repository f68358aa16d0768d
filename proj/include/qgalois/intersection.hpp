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

#ifndef QGALOIS_INTERSECTION_HPP
#define QGALOIS_INTERSECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgalois/factorization.hpp"
#include "qgalois/quartic_forms.hpp"
#include "qgalois/resolvents.hpp"

namespace qg {

enum class Relation { trivial, proper, equal, a_contains_b, b_contains_a };

std::string relation_name(Relation r);
Relation parse_relation(const std::string& name);

struct TableRow {
    int table = 0;
    std::string id;
    GaloisLabel group_a = GaloisLabel::S4;
    GaloisLabel group_b = GaloisLabel::S4;
    int joint_order = 0;
    int joint_index = 0;
    DecompType dt_r;
    std::optional<DecompType> dt_r1;
    int degree = 1;
    Relation relation = Relation::trivial;
};

// Parses the table text format (see data/tables.txt).
std::vector<TableRow> parse_table_rows(const std::string& text);
// The built-in tables.
const std::vector<TableRow>& table_rows();
// "8^2,2^4" -> {8,8,2,2,2,2}
DecompType parse_table_dt(const std::string& text);

// Table DT(R) for D4 pairs counts orbits of matchings; an R2 factor of degree d
// covers either one orbit of size 2d or two orbits of size d.
bool d4_dt_compatible(const TableRow& row, const DecompType& dt_r1, const DecompType& dt_r2);

struct RetryDT {
    DecompType dt;        // DT of a squarefree resolvent (or the block DT when retries run out)
    DecompType block_dt;  // block-read DT of the original resolvent
    std::optional<DecompType> dt_r1;        // D4 pairs only
    std::optional<DecompType> block_dt_r1;  // D4 pairs only
    std::optional<DecompType> dt_r2;        // D4 pairs only: factor degrees of R2
    int retries = 0;
    bool squarefree = true;  // false when dt fell back to block reading
    QuarticForm form_b;      // the second form actually used
};

// S4-forms a, b. Retries transform the second polynomial by the maps
// (0,1,k,0), (0,1,0,k), k = 1, 2, ... and renormalize.
RetryDT dt_with_retry_s4(const QuarticForm& a, const QuarticForm& b, int max_retries = 16);
// D4-forms a, b. Retries replace b by the Tschirnhausen-equivalent form from
// the map (0,u,0,1), u = 1, -1, 2, -2, ...
RetryDT dt_with_retry_d4(const QuarticForm& a, const QuarticForm& b, int max_retries = 16);

struct IntersectionAnswer {
    GaloisLabel group_a = GaloisLabel::S4;  // input order
    GaloisLabel group_b = GaloisLabel::S4;
    std::optional<std::pair<int, int>> joint_group_id;
    int degree = 1;
    Relation relation = Relation::trivial;  // relative to input order
    int table = 0;
    std::vector<std::string> rows;  // all candidate rows sharing the answer
    ResolventCase resolvent = ResolventCase::s4_pair;
    bool swapped = false;  // tables were read with the inputs exchanged
    QuarticForm form_a;    // normal forms in table orientation
    QuarticForm form_b;
    RetryDT evidence;
    std::vector<Q> subfields_a;  // input order
    std::vector<Q> subfields_b;
    int common_subfields = 0;

    std::string relation_text() const;  // "equal", "proper-degree-2", ...
};

IntersectionAnswer intersect(const Poly& f, const Poly& g, int max_retries = 16);
bool splitting_fields_equal(const Poly& f, const Poly& g);

}  // namespace qg

#endif
