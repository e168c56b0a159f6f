#pragma once

#include "sympverma/core.hpp"
#include "sympverma/tableau.hpp"
#include "sympverma/verma.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sympverma {

// Pure tensor index of W = V^(x)m1 (x) (wedge^2 V)^(x)m2 over the relabeled
// basis 1, 2, 2b, 1b (2b := eps4, 1b := -eps3), in which every structure
// constant of the generator action is +1 or -1.
struct TensorIndex {
  std::vector<Entry> word;                      // m1 letters
  std::vector<std::pair<Entry, Entry>> wedges;  // m2 strictly increasing pairs

  bool operator==(const TensorIndex&) const = default;
};

// Packed form: word letters then wedge pairs, leftmost factor in the most
// significant bits, each letter as its order key (2 bits), each wedge as
// key(j)<<2 | key(k) (4 bits). Numeric order of codes equals tableau_order
// of the corresponding column-strict tableaux.
std::uint64_t pack(const TensorIndex& ix);
TensorIndex unpack(std::uint64_t code, HighestWeight hw);

// Sort a wedge pair into increasing order: returns the ordered pair and the
// sign picked up (+1 kept, -1 swapped, 0 annihilated by equal letters).
std::pair<std::pair<Entry, Entry>, int> canonical_wedge(Entry j, Entry k);

struct ExactVector {
  HighestWeight ambient;
  std::unordered_map<std::uint64_t, Int> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  std::size_t num_terms() const { return terms.size(); }

  bool operator==(const ExactVector&) const = default;
};

enum class Gen { e1, e2, f1, f2, h1, h2 };

enum class ExecMode { serial, parallel };

// 4^m1 * 6^m2, saturated.
unsigned long long states_of(HighestWeight hw);

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

// Throws resource_error when states_of(hw) exceeds the budget.
void check_budget(HighestWeight hw, unsigned long long budget);

// Single-letter action; all coefficients +1/-1.
std::vector<std::pair<Entry, int>> act_on_letter(Gen g, Entry x);

// Leibniz derivation over every word slot and wedge letter, with wedge
// re-canonicalization.
ExactVector act(Gen g, const ExactVector& v);

ExactVector scale(const ExactVector& v, const Int& c);

// v_lambda: word of 1s, wedges (1,2), coefficient 1.
ExactVector highest_weight_vector(HighestWeight hw);

// Reads a column-strict rank-2 tableau of shape (m1+m2, m2) into its pure
// tensor: word[t] = row-1 entry in column m1+m2+1-t, wedges[s] = column
// m2+1-s top to bottom.
TensorIndex u_of_tableau(const Tableau& y);
Tableau tableau_of_index(const TensorIndex& ix);

// f1^a4 f2^a3 f1^a2 f2^a1 v_lambda by repeated application.
ExactVector verma_vector(VermaTuple a, HighestWeight hw,
                         unsigned long long budget = kDefaultBudget);

// Maximal index under tableau_order and its coefficient; input must be nonzero.
std::pair<Tableau, Int> leading_term(const ExactVector& v);

// Coordinates of an m1=1, m2=0 vector in the original basis of C^4
// (the relabeling sends 2b to slot 4 and 1b to minus slot 3).
std::array<Int, 4> original_coordinates(const ExactVector& v);

struct CertRecord {
  VermaTuple tuple;
  Tableau leading;
  Int coeff;
  std::size_t num_terms = 0;
};

struct TriangularCertificate {
  std::vector<CertRecord> records;       // lex tuple order
  std::vector<std::string> violations;   // empty iff every tuple passed

  bool ok() const { return violations.empty(); }
};

// Expands every Verma vector and checks, per tuple: the leading tableau is
// T(a), nothing above it survives, all coefficients are nonnegative, and the
// leading coefficient is a1! a2! a3! a4!.
TriangularCertificate check_triangular(HighestWeight hw,
                                       unsigned long long budget = kDefaultBudget,
                                       ExecMode mode = ExecMode::parallel);

// Exact rank over the integers of the matrix of all Verma vectors in the
// pure-tensor basis.
long long independence_rank(HighestWeight hw,
                            unsigned long long budget = kDefaultBudget,
                            ExecMode mode = ExecMode::parallel);

// Commutation relations of e_i, f_i, h_i as operators on W, verified on
// every basis index.
bool relation_check(HighestWeight hw,
                    unsigned long long budget = kDefaultBudget);

// All (tuple, verma_vector) pairs in lex tuple order. The serial mode
// expands each tuple independently; the parallel mode shares monomial
// prefixes within (a1, a2) groups and fans the groups out across threads.
std::vector<std::pair<VermaTuple, ExactVector>> expand_all(
    HighestWeight hw, unsigned long long budget = kDefaultBudget,
    ExecMode mode = ExecMode::parallel);

// Streaming variant; sink is called once per tuple, possibly concurrently
// and out of order.
void expand_walk(HighestWeight hw, unsigned long long budget, ExecMode mode,
                 const std::function<void(VermaTuple, ExactVector&&)>& sink);

// 0-based column of a packed index in the export order (tableau_order
// descending over all of the pure-tensor basis).
long long column_of_index(std::uint64_t code, HighestWeight hw);

}  // namespace sympverma
