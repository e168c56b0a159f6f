#include "sympverma/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace sympverma {

ordered_json tableau_to_json(const Tableau& t) {
  ordered_json j;
  j["n"] = t.n;
  j["shape"] = t.shape();
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json row = ordered_json::array();
    for (Entry v : r) row.push_back(entry_to_string(v));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Tableau tableau_from_json(const ordered_json& j) {
  Tableau t;
  t.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    std::vector<Entry> r;
    for (const auto& cell : row) {
      r.push_back(entry_from_string(cell.get<std::string>(), t.n));
    }
    t.rows.push_back(std::move(r));
  }
  if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape()) {
    throw std::invalid_argument("tableau shape field disagrees with rows");
  }
  return t;
}

std::string tableau_to_ascii(const Tableau& t) {
  if (t.rows.empty()) return "(empty)";
  std::size_t width = 1;
  for (const auto& r : t.rows) {
    for (Entry v : r) width = std::max(width, entry_to_string(v).size());
  }
  std::string out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0) out += '\n';
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      std::string cell = entry_to_string(t.rows[i][j]);
      if (j > 0) out += ' ';
      out += std::string(width - cell.size(), ' ') + cell;
    }
  }
  return out;
}

std::string tableau_to_latex(const Tableau& t) {
  std::string out = "\\begin{ytableau}";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0) out += " \\\\";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      Entry v = t.rows[i][j];
      out += j > 0 ? " & " : " ";
      out += v > 0 ? std::to_string(v)
                   : "\\overline{" + std::to_string(-v) + "}";
    }
  }
  out += " \\end{ytableau}";
  return out;
}

ordered_json basis_record_json(VermaTuple a, HighestWeight hw) {
  ordered_json j;
  j["tuple"] = {a.a1, a.a2, a.a3, a.a4};
  j["monomial"] = monomial_string(a);
  j["tableau"] = tableau_to_json(tuple_to_tableau(a, hw));
  WeightVec w = verma_weight(a, hw);
  j["weight"] = {w.c1, w.c2};
  return j;
}

ordered_json certificate_to_json(const TriangularCertificate& cert) {
  ordered_json arr = ordered_json::array();
  for (const auto& rec : cert.records) {
    ordered_json j;
    j["tuple"] = {rec.tuple.a1, rec.tuple.a2, rec.tuple.a3, rec.tuple.a4};
    j["leading_tableau"] = tableau_to_json(rec.leading);
    j["leading_coeff"] = rec.coeff.str();
    j["num_terms"] = rec.num_terms;
    arr.push_back(std::move(j));
  }
  return arr;
}

void write_matrix(std::ostream& os,
                  const std::vector<std::pair<VermaTuple, ExactVector>>& rows,
                  HighestWeight hw) {
  std::size_t nnz = 0;
  for (const auto& [a, v] : rows) nnz += v.num_terms();
  os << rows.size() << ' ' << states_of(hw) << ' ' << nnz << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::pair<long long, const Int*>> entries;
    entries.reserve(rows[r].second.num_terms());
    for (const auto& [code, c] : rows[r].second.terms) {
      entries.emplace_back(column_of_index(code, hw), &c);
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& [col, c] : entries) {
      os << r << ' ' << col << ' ' << *c << '\n';
    }
  }
}

}  // namespace sympverma
