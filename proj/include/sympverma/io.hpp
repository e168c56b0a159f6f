#pragma once

#include "sympverma/core.hpp"
#include "sympverma/tableau.hpp"
#include "sympverma/tensor.hpp"
#include "sympverma/verma.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace sympverma {

using ordered_json = nlohmann::ordered_json;

// {"n": 2, "shape": [3,2], "rows": [["1","2","2b"],["2b","1b"]]}
ordered_json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const ordered_json& j);

// Rows of space-separated entries, cells left-padded to equal width;
// the empty tableau renders as "(empty)".
std::string tableau_to_ascii(const Tableau& t);

// One ytableau environment, entries 1, 2, \overline{2}, \overline{1}.
std::string tableau_to_latex(const Tableau& t);

// {"tuple": [...], "monomial": "...", "tableau": {...}, "weight": [c1,c2]}
ordered_json basis_record_json(VermaTuple a, HighestWeight hw);

ordered_json certificate_to_json(const TriangularCertificate& cert);

// Coordinate-list export of the Verma matrix: header "rows cols nnz", then
// one "row col value" line per nonzero. Rows follow lexicographic tuple
// order, columns tableau_order descending over the pure-tensor basis; both
// indices 0-based. Within a row, lines are sorted by column.
void write_matrix(std::ostream& os,
                  const std::vector<std::pair<VermaTuple, ExactVector>>& rows,
                  HighestWeight hw);

}  // namespace sympverma
