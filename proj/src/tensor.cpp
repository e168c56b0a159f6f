#include "sympverma/tensor.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

namespace sympverma {

namespace {

// Letter keys 0,1,2,3 stand for 1, 2, 2b, 1b.
constexpr Entry kEntryOfKey[4] = {1, 2, -2, -1};

// Single-letter moves by key; -1 annihilates.
constexpr int kF1[4] = {1, -1, 3, -1};
constexpr int kF2[4] = {-1, 2, -1, -1};
constexpr int kE1[4] = {-1, 0, -1, 2};
constexpr int kE2[4] = {-1, -1, 1, -1};
constexpr int kH1[4] = {1, -1, 1, -1};
constexpr int kH2[4] = {0, 1, -1, 0};

const int* move_table(Gen g) {
  switch (g) {
    case Gen::f1: return kF1;
    case Gen::f2: return kF2;
    case Gen::e1: return kE1;
    case Gen::e2: return kE2;
    default: return nullptr;
  }
}

const int* diag_table(Gen g) {
  switch (g) {
    case Gen::h1: return kH1;
    case Gen::h2: return kH2;
    default: return nullptr;
  }
}

int key_of(Entry v) { return order_key(v, 2); }

// The 6 increasing wedge fields key(j)<<2 | key(k), ascending.
constexpr std::uint64_t kWedgeFields[6] = {1, 2, 3, 6, 7, 11};
constexpr int kWedgeRank[16] = {-1, 0,  1,  2,  -1, -1, 3,  4,
                                -1, -1, -1, 5,  -1, -1, -1, -1};

int bits_of(HighestWeight hw) { return 2 * hw.m1 + 4 * hw.m2; }

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::uint64_t pack(const TensorIndex& ix) {
  int bits = 2 * static_cast<int>(ix.word.size()) + 4 * static_cast<int>(ix.wedges.size());
  if (bits > 64) throw std::invalid_argument("tensor index exceeds 64 packed bits");
  std::uint64_t code = 0;
  for (Entry v : ix.word) code = code << 2 | static_cast<std::uint64_t>(key_of(v));
  for (auto [j, k] : ix.wedges) {
    int kj = key_of(j), kk = key_of(k);
    if (kj >= kk) throw std::invalid_argument("wedge pair not strictly increasing");
    code = code << 4 | static_cast<std::uint64_t>(kj << 2 | kk);
  }
  return code;
}

TensorIndex unpack(std::uint64_t code, HighestWeight hw) {
  TensorIndex ix;
  ix.word.resize(hw.m1);
  ix.wedges.resize(hw.m2);
  for (int s = hw.m2 - 1; s >= 0; --s) {
    std::uint64_t f = code & 15u;
    code >>= 4;
    ix.wedges[s] = {kEntryOfKey[f >> 2], kEntryOfKey[f & 3]};
  }
  for (int t = hw.m1 - 1; t >= 0; --t) {
    ix.word[t] = kEntryOfKey[code & 3u];
    code >>= 2;
  }
  return ix;
}

std::pair<std::pair<Entry, Entry>, int> canonical_wedge(Entry j, Entry k) {
  int c = entry_compare(j, k, 2);
  if (c == 0) return {{j, k}, 0};
  if (c < 0) return {{j, k}, 1};
  return {{k, j}, -1};
}

unsigned long long states_of(HighestWeight hw) {
  unsigned __int128 n = 1;
  for (int i = 0; i < hw.m1; ++i) n *= 4;
  for (int i = 0; i < hw.m2; ++i) {
    n *= 6;
    if (n > static_cast<unsigned __int128>(~0ULL)) return ~0ULL;
  }
  if (n > static_cast<unsigned __int128>(~0ULL)) return ~0ULL;
  return static_cast<unsigned long long>(n);
}

void check_budget(HighestWeight hw, unsigned long long budget) {
  unsigned long long n = states_of(hw);
  if (n > budget) {
    std::ostringstream os;
    os << "state space 4^" << hw.m1 << " * 6^" << hw.m2 << " = " << n
       << " exceeds budget " << budget;
    throw resource_error(os.str());
  }
}

std::vector<std::pair<Entry, int>> act_on_letter(Gen g, Entry x) {
  int key = key_of(x);
  if (const int* d = diag_table(g)) {
    if (d[key] == 0) return {};
    return {{x, d[key]}};
  }
  int to = move_table(g)[key];
  if (to < 0) return {};
  return {{kEntryOfKey[to], 1}};
}

ExactVector act(Gen g, const ExactVector& v) {
  const int m1 = v.ambient.m1, m2 = v.ambient.m2;
  const int bits = bits_of(v.ambient);
  ExactVector out{v.ambient, {}};
  out.terms.reserve(v.terms.size() * 2);
  auto add = [&out](std::uint64_t code, Int c) {
    auto [it, fresh] = out.terms.try_emplace(code, std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  };
  if (const int* d = diag_table(g)) {
    for (const auto& [code, c] : v.terms) {
      int tot = 0;
      std::uint64_t rest = code;
      for (int s = 0; s < m2; ++s) {
        std::uint64_t f = rest & 15u;
        rest >>= 4;
        tot += d[f >> 2] + d[f & 3];
      }
      for (int t = 0; t < m1; ++t) {
        tot += d[rest & 3u];
        rest >>= 2;
      }
      if (tot != 0) add(code, c * tot);
    }
    return out;
  }
  const int* mv = move_table(g);
  for (const auto& [code, c] : v.terms) {
    for (int t = 0; t < m1; ++t) {
      int shift = bits - 2 * (t + 1);
      int key = static_cast<int>(code >> shift & 3u);
      int to = mv[key];
      if (to < 0) continue;
      std::uint64_t ncode =
          (code & ~(3ULL << shift)) | static_cast<std::uint64_t>(to) << shift;
      add(ncode, c);
    }
    for (int s = 0; s < m2; ++s) {
      int shift = 4 * (m2 - 1 - s);
      std::uint64_t field = code >> shift & 15u;
      int j = static_cast<int>(field >> 2), k = static_cast<int>(field & 3u);
      std::uint64_t base = code & ~(15ULL << shift);
      int x = mv[j];
      if (x >= 0 && x != k) {
        std::uint64_t nf = x < k ? static_cast<std::uint64_t>(x << 2 | k)
                                 : static_cast<std::uint64_t>(k << 2 | x);
        add(base | nf << shift, x < k ? c : -c);
      }
      x = mv[k];
      if (x >= 0 && x != j) {
        std::uint64_t nf = j < x ? static_cast<std::uint64_t>(j << 2 | x)
                                 : static_cast<std::uint64_t>(x << 2 | j);
        add(base | nf << shift, j < x ? c : -c);
      }
    }
  }
  return out;
}

ExactVector scale(const ExactVector& v, const Int& c) {
  ExactVector out{v.ambient, {}};
  if (c == 0) return out;
  out.terms.reserve(v.terms.size());
  for (const auto& [code, x] : v.terms) out.terms.emplace(code, x * c);
  return out;
}

ExactVector highest_weight_vector(HighestWeight hw) {
  TensorIndex ix;
  ix.word.assign(hw.m1, 1);
  ix.wedges.assign(hw.m2, {1, 2});
  ExactVector v{hw, {}};
  v.terms.emplace(pack(ix), 1);
  return v;
}

TensorIndex u_of_tableau(const Tableau& y) {
  if (y.n != 2) throw std::invalid_argument("u_of_tableau requires rank 2");
  auto shape = y.shape();
  if (shape.size() > 2 || (shape.size() == 2 && shape[1] > shape[0])) {
    throw std::invalid_argument("u_of_tableau requires a two-row shape");
  }
  int l1 = shape.empty() ? 0 : shape[0];
  int l2 = shape.size() < 2 ? 0 : shape[1];
  for (int c = 0; c < l2; ++c) {
    if (entry_compare(y.rows[0][c], y.rows[1][c], 2) >= 0) {
      throw std::invalid_argument("u_of_tableau requires strictly increasing columns");
    }
  }
  TensorIndex ix;
  for (int t = 1; t <= l1 - l2; ++t) ix.word.push_back(y.rows[0][l1 - t]);
  for (int s = 1; s <= l2; ++s) {
    ix.wedges.emplace_back(y.rows[0][l2 - s], y.rows[1][l2 - s]);
  }
  return ix;
}

Tableau tableau_of_index(const TensorIndex& ix) {
  int m1 = static_cast<int>(ix.word.size());
  int m2 = static_cast<int>(ix.wedges.size());
  Tableau t;
  t.n = 2;
  if (m1 + m2 == 0) return t;
  t.rows.emplace_back();
  for (int c = 0; c < m2; ++c) t.rows[0].push_back(ix.wedges[m2 - 1 - c].first);
  for (int c = m2; c < m1 + m2; ++c) t.rows[0].push_back(ix.word[m1 + m2 - 1 - c]);
  if (m2 > 0) {
    t.rows.emplace_back();
    for (int c = 0; c < m2; ++c) t.rows[1].push_back(ix.wedges[m2 - 1 - c].second);
  }
  return t;
}

ExactVector verma_vector(VermaTuple a, HighestWeight hw, unsigned long long budget) {
  if (!is_valid_tuple(a, hw)) {
    throw std::invalid_argument("tuple violates the inequality system");
  }
  check_budget(hw, budget);
  ExactVector v = highest_weight_vector(hw);
  const std::pair<Gen, int> steps[] = {
      {Gen::f2, a.a1}, {Gen::f1, a.a2}, {Gen::f2, a.a3}, {Gen::f1, a.a4}};
  for (auto [g, count] : steps) {
    for (int k = 0; k < count; ++k) v = act(g, v);
  }
  return v;
}

std::pair<Tableau, Int> leading_term(const ExactVector& v) {
  if (v.is_zero()) throw std::invalid_argument("leading_term of the zero vector");
  auto it = std::max_element(
      v.terms.begin(), v.terms.end(),
      [](const auto& a, const auto& b) { return a.first < b.first; });
  return {tableau_of_index(unpack(it->first, v.ambient)), it->second};
}

std::array<Int, 4> original_coordinates(const ExactVector& v) {
  if (v.ambient.m1 != 1 || v.ambient.m2 != 0) {
    throw std::invalid_argument("original_coordinates requires ambient (1,0)");
  }
  // eps1, eps2, eps3, eps4; letter 1b is -eps3 and 2b is eps4.
  std::array<Int, 4> out{0, 0, 0, 0};
  constexpr int slot[4] = {0, 1, 3, 2};
  constexpr int sign[4] = {1, 1, 1, -1};
  for (const auto& [code, c] : v.terms) {
    out[slot[code & 3u]] += sign[code & 3u] * c;
  }
  return out;
}

void expand_walk(HighestWeight hw, unsigned long long budget, ExecMode mode,
                 const std::function<void(VermaTuple, ExactVector&&)>& sink) {
  check_budget(hw, budget);
  if (mode == ExecMode::serial) {
    for (VermaTuple a : enumerate_tuples(hw)) {
      sink(a, verma_vector(a, hw, budget));
    }
    return;
  }
  // Shared f2^a1 prefixes, then one job per (a1, a2) exponent pair; each job
  // extends its own f1 chain and walks the whole (a3, a4) subtree.
  std::vector<ExactVector> chain1;
  chain1.push_back(highest_weight_vector(hw));
  for (int a1 = 1; a1 <= hw.m2; ++a1) chain1.push_back(act(Gen::f2, chain1.back()));
  std::vector<std::pair<int, int>> jobs;
  for (int a1 = 0; a1 <= hw.m2; ++a1) {
    for (int a2 = 0; a2 <= hw.m1 + 2 * a1; ++a2) jobs.emplace_back(a1, a2);
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [a1, a2] = jobs[i];
    ExactVector v2 = chain1[a1];
    for (int k = 0; k < a2; ++k) v2 = act(Gen::f1, v2);
    int a3max = std::min((a2 + hw.m1) / 2, a2);
    ExactVector v3 = std::move(v2);
    for (int a3 = 0; a3 <= a3max; ++a3) {
      if (a3 > 0) v3 = act(Gen::f2, v3);
      int a4max = std::min(hw.m1, a3);
      ExactVector v4 = v3;
      for (int a4 = 0; a4 <= a4max; ++a4) {
        if (a4 > 0) v4 = act(Gen::f1, v4);
        if (a4 == a4max && a3 == a3max) {
          sink({a1, a2, a3, a4}, std::move(v4));
          v4 = ExactVector{hw, {}};
        } else {
          sink({a1, a2, a3, a4}, ExactVector(v4));
        }
      }
    }
  }
}

std::vector<std::pair<VermaTuple, ExactVector>> expand_all(
    HighestWeight hw, unsigned long long budget, ExecMode mode) {
  auto tuples = enumerate_tuples(hw);
  std::vector<std::pair<VermaTuple, ExactVector>> out(tuples.size());
  expand_walk(hw, budget, mode, [&](VermaTuple a, ExactVector&& v) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), a);
    std::size_t slot = static_cast<std::size_t>(it - tuples.begin());
    out[slot] = {a, std::move(v)};
  });
  return out;
}

TriangularCertificate check_triangular(HighestWeight hw,
                                       unsigned long long budget, ExecMode mode) {
  auto tuples = enumerate_tuples(hw);
  TriangularCertificate cert;
  cert.records.resize(tuples.size());
  std::mutex viol_mu;
  auto complain = [&](VermaTuple a, const std::string& what) {
    std::ostringstream os;
    os << "tuple (" << a.a1 << "," << a.a2 << "," << a.a3 << "," << a.a4
       << "): " << what;
    std::lock_guard<std::mutex> lock(viol_mu);
    cert.violations.push_back(os.str());
  };
  expand_walk(hw, budget, mode, [&](VermaTuple a, ExactVector&& v) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), a);
    std::size_t slot = static_cast<std::size_t>(it - tuples.begin());
    if (v.is_zero()) {
      complain(a, "expanded to the zero vector");
      return;
    }
    Tableau expected = tuple_to_tableau(a, hw);
    std::uint64_t expected_code = pack(u_of_tableau(expected));
    std::uint64_t lead = 0;
    bool first = true;
    for (const auto& [code, c] : v.terms) {
      if (first || code > lead) lead = code;
      first = false;
      if (code > expected_code) {
        complain(a, "nonzero coefficient above the matched tableau");
      }
      if (c < 0) complain(a, "negative coefficient");
    }
    const Int& coeff = v.terms.at(lead);
    Int want = factorial(a.a1) * factorial(a.a2) * factorial(a.a3) * factorial(a.a4);
    if (lead != expected_code) {
      complain(a, "leading tableau differs from the matched tableau");
    } else if (coeff != want) {
      std::ostringstream os;
      os << "leading coefficient " << coeff << " != " << want;
      complain(a, os.str());
    }
    cert.records[slot] = {a, tableau_of_index(unpack(lead, hw)), coeff,
                          v.num_terms()};
  });
  return cert;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint64_t, Int>>;  // code descending

SparseRow to_sorted_row(ExactVector&& v) {
  SparseRow row(v.terms.begin(), v.terms.end());
  v.terms.clear();
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return row;
}

// cr*row - cp*pivot with cr = pivot_lead/g, cp = row_lead/g; kills the lead.
SparseRow eliminate_lead(const SparseRow& row, const SparseRow& pivot) {
  Int g = boost::multiprecision::gcd(row[0].second, pivot[0].second);
  Int cr = pivot[0].second / g, cp = row[0].second / g;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < row.size() && row[i].first > pivot[j].first)) {
      out.emplace_back(row[i].first, row[i].second * cr);
      ++i;
    } else if (i == row.size() || pivot[j].first > row[i].first) {
      out.emplace_back(pivot[j].first, -pivot[j].second * cp);
      ++j;
    } else {
      Int c = row[i].second * cr - pivot[j].second * cp;
      if (c != 0) out.emplace_back(row[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

long long independence_rank(HighestWeight hw, unsigned long long budget,
                            ExecMode mode) {
  auto tuples = enumerate_tuples(hw);
  std::vector<SparseRow> rows(tuples.size());
  expand_walk(hw, budget, mode, [&](VermaTuple a, ExactVector&& v) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), a);
    rows[static_cast<std::size_t>(it - tuples.begin())] = to_sorted_row(std::move(v));
  });
  std::unordered_map<std::uint64_t, std::size_t> pivot_of;
  std::vector<SparseRow> pivots;
  pivots.reserve(rows.size());
  long long rank = 0;
  for (auto& r : rows) {
    SparseRow row = std::move(r);
    while (!row.empty()) {
      auto it = pivot_of.find(row[0].first);
      if (it == pivot_of.end()) {
        pivot_of.emplace(row[0].first, pivots.size());
        pivots.push_back(std::move(row));
        ++rank;
        break;
      }
      row = eliminate_lead(row, pivots[it->second]);
    }
  }
  return rank;
}

bool relation_check(HighestWeight hw, unsigned long long budget) {
  check_budget(hw, budget);
  const int m1 = hw.m1, m2 = hw.m2;
  auto single = [&](std::uint64_t code) {
    ExactVector v{hw, {}};
    v.terms.emplace(code, 1);
    return v;
  };
  auto bracket = [&](Gen x, Gen y, const ExactVector& u) {
    ExactVector a = act(x, act(y, u));
    const ExactVector b = act(y, act(x, u));
    for (const auto& [code, c] : b.terms) {
      auto [it, fresh] = a.terms.try_emplace(code, Int(-c));
      if (!fresh) {
        it->second -= c;
        if (it->second == 0) a.terms.erase(it);
      }
    }
    return a;
  };
  // [h_i, f_j] = -alpha_j(h_i) f_j with the C2 Cartan pairings.
  struct HRel { Gen h; Gen f; int scalar; };
  const HRel hrels[] = {{Gen::h1, Gen::f1, -2}, {Gen::h1, Gen::f2, 2},
                        {Gen::h2, Gen::f1, 1},  {Gen::h2, Gen::f2, -2}};
  // Enumerate every basis code by mixed radix: word letters then wedge fields.
  std::uint64_t total = states_of(hw);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t rem = n, code = 0;
    std::uint64_t wf[32];
    for (int s = m2 - 1; s >= 0; --s) {
      wf[s] = kWedgeFields[rem % 6];
      rem /= 6;
    }
    std::uint64_t wl[32];
    for (int t = m1 - 1; t >= 0; --t) {
      wl[t] = rem & 3u;
      rem >>= 2;
    }
    for (int t = 0; t < m1; ++t) code = code << 2 | wl[t];
    for (int s = 0; s < m2; ++s) code = code << 4 | wf[s];
    ExactVector u = single(code);
    if (bracket(Gen::e1, Gen::f1, u) != act(Gen::h1, u)) return false;
    if (bracket(Gen::e2, Gen::f2, u) != act(Gen::h2, u)) return false;
    if (!bracket(Gen::e1, Gen::f2, u).is_zero()) return false;
    if (!bracket(Gen::e2, Gen::f1, u).is_zero()) return false;
    for (const auto& rel : hrels) {
      if (bracket(rel.h, rel.f, u) != scale(act(rel.f, u), rel.scalar)) return false;
    }
  }
  return true;
}

long long column_of_index(std::uint64_t code, HighestWeight hw) {
  long long n = 0;
  std::uint64_t rest = code;
  std::uint64_t wedge_part[32];
  for (int s = hw.m2 - 1; s >= 0; --s) {
    wedge_part[s] = rest & 15u;
    rest >>= 4;
  }
  std::uint64_t word_part[32];
  for (int t = hw.m1 - 1; t >= 0; --t) {
    word_part[t] = rest & 3u;
    rest >>= 2;
  }
  for (int t = 0; t < hw.m1; ++t) n = n * 4 + static_cast<long long>(word_part[t]);
  for (int s = 0; s < hw.m2; ++s) {
    int r = kWedgeRank[wedge_part[s]];
    if (r < 0) throw std::invalid_argument("malformed wedge field in packed index");
    n = n * 6 + r;
  }
  return static_cast<long long>(states_of(hw)) - 1 - n;
}

}  // namespace sympverma
