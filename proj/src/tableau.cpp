#include "sympverma/tableau.hpp"

#include "sympverma/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympverma {

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  s.reserve(rows.size());
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

bool well_formed(const Tableau& t) {
  if (static_cast<int>(t.rows.size()) > t.n) return false;
  int prev = -1;
  for (const auto& r : t.rows) {
    if (r.empty()) return false;
    if (prev >= 0 && static_cast<int>(r.size()) > prev) return false;
    prev = static_cast<int>(r.size());
    for (Entry v : r) {
      if (!entry_valid(v, t.n)) return false;
    }
  }
  return true;
}

static std::vector<std::vector<Entry>> columns_of(const Tableau& t) {
  int ncols = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  std::vector<std::vector<Entry>> cols(ncols);
  for (const auto& r : t.rows) {
    for (int j = 0; j < static_cast<int>(r.size()) && j < ncols; ++j) {
      cols[j].push_back(r[j]);
    }
  }
  return cols;
}

bool is_semistandard(const Tableau& t) {
  if (!well_formed(t)) return false;
  for (const auto& r : t.rows) {
    for (size_t j = 1; j < r.size(); ++j) {
      if (entry_compare(r[j - 1], r[j], t.n) > 0) return false;
    }
  }
  for (const auto& col : columns_of(t)) {
    for (size_t i = 1; i < col.size(); ++i) {
      if (entry_compare(col[i - 1], col[i], t.n) >= 0) return false;
    }
  }
  return true;
}

bool check_one_bar_pairs(const Tableau& t) {
  for (const auto& col : columns_of(t)) {
    int h = static_cast<int>(col.size());
    for (int i = 1; i <= t.n; ++i) {
      int p = 0, q = 0;  // 1-based from top / from bottom
      for (int k = 0; k < h; ++k) {
        if (col[k] == i) p = k + 1;
        if (col[k] == -i) q = h - k;
      }
      if (p > 0 && q > 0 && p + q > i) return false;
    }
  }
  return true;
}

bool check_adjacent_columns(const Tableau& t) {
  auto cols = columns_of(t);
  auto row_of = [](const std::vector<Entry>& col, Entry v) {
    for (size_t k = 0; k < col.size(); ++k) {
      if (col[k] == v) return static_cast<int>(k) + 1;
    }
    return 0;
  };
  for (size_t c = 0; c + 1 < cols.size(); ++c) {
    const auto& L = cols[c];
    const auto& R = cols[c + 1];
    for (int i = 1; i <= t.n; ++i) {
      for (int j = i; j <= t.n; ++j) {
        // config 1: i in the left column; j, jbar, ibar stacked in the right
        int p = row_of(L, i), q = row_of(R, j), r = row_of(R, -j), s = row_of(R, -i);
        if (p && q && r && s && p <= q && q < r && r <= s &&
            (q - p) + (s - r) >= j - i) {
          return false;
        }
        // config 2: i, j, jbar in the left column; ibar in the right
        p = row_of(L, i), q = row_of(L, j), r = row_of(L, -j), s = row_of(R, -i);
        if (p && q && r && s && p <= q && q < r && r <= s &&
            (q - p) + (s - r) >= j - i) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_kn(const Tableau& t) {
  return is_semistandard(t) && check_one_bar_pairs(t) && check_adjacent_columns(t);
}

bool is_kn_sp4(const Tableau& t) {
  if (t.n != 2) throw std::invalid_argument("is_kn_sp4 requires rank 2");
  if (t.rows.size() > 2) {
    throw std::invalid_argument("is_kn_sp4 requires at most 2 rows");
  }
  if (!is_semistandard(t)) return false;
  auto cols = columns_of(t);
  for (const auto& col : cols) {
    bool one = false, onebar = false;
    for (Entry v : col) {
      one |= v == 1;
      onebar |= v == -1;
    }
    if (one && onebar) return false;
  }
  auto is_two_twobar = [](const std::vector<Entry>& col) {
    return col.size() == 2 && col[0] == 2 && col[1] == -2;
  };
  for (size_t c = 0; c + 1 < cols.size(); ++c) {
    const auto& L = cols[c];
    const auto& R = cols[c + 1];
    if (is_two_twobar(R) && !L.empty() && L[0] == 2) return false;   // pattern A
    if (is_two_twobar(L) && R.size() >= 2 && R[1] == -2) return false;  // pattern B
  }
  return true;
}

std::vector<long> weight_vector(const Tableau& t) {
  std::vector<long> w(t.n, 0);
  for (const auto& r : t.rows) {
    for (Entry v : r) {
      w[std::abs(v) - 1] += v > 0 ? 1 : -1;
    }
  }
  return w;
}

WeightVec tableau_weight(const Tableau& t) {
  if (t.n != 2) throw std::invalid_argument("tableau_weight requires rank 2");
  auto w = weight_vector(t);
  return {w[0], w[1]};
}

namespace {

// Columns admissible on their own at rank 2: any single letter, or a
// strictly increasing pair other than (1, 1bar).
const std::vector<std::vector<Entry>>& tall_columns() {
  static const std::vector<std::vector<Entry>> cols = {
      {1, 2}, {1, -2}, {2, -2}, {2, -1}, {-2, -1}};
  return cols;
}

const std::vector<std::vector<Entry>>& short_columns() {
  static const std::vector<std::vector<Entry>> cols = {{1}, {2}, {-2}, {-1}};
  return cols;
}

// May `left` sit immediately left of `right`?
bool columns_compatible(const std::vector<Entry>& left,
                        const std::vector<Entry>& right) {
  size_t common = std::min(left.size(), right.size());
  for (size_t k = 0; k < common; ++k) {
    if (entry_compare(left[k], right[k], 2) > 0) return false;
  }
  auto is_two_twobar = [](const std::vector<Entry>& col) {
    return col.size() == 2 && col[0] == 2 && col[1] == -2;
  };
  if (is_two_twobar(right) && left[0] == 2) return false;
  if (is_two_twobar(left) && right.size() >= 2 && right[1] == -2) return false;
  return true;
}

}  // namespace

std::vector<Tableau> enumerate_kn4(HighestWeight hw) {
  auto [l1, l2] = partition_of(hw);
  int ncols = l1;
  std::vector<Tableau> out;
  // Column heights left to right: l2 twos, then ones.
  std::vector<const std::vector<Entry>*> picked(ncols, nullptr);
  // Fill right to left so each new column only needs checking against the
  // one previously placed to its right.
  auto emit = [&]() {
    Tableau t;
    t.n = 2;
    if (ncols > 0) {
      t.rows.emplace_back();
      for (int c = 0; c < ncols; ++c) t.rows.back().push_back((*picked[c])[0]);
      if (l2 > 0) {
        t.rows.emplace_back();
        for (int c = 0; c < l2; ++c) t.rows.back().push_back((*picked[c])[1]);
      }
    }
    out.push_back(std::move(t));
  };
  auto rec = [&](auto&& self, int col) -> void {
    if (col < 0) {
      emit();
      return;
    }
    const auto& choices = col < l2 ? tall_columns() : short_columns();
    for (const auto& cand : choices) {
      if (col + 1 < ncols && !columns_compatible(cand, *picked[col + 1])) continue;
      picked[col] = &cand;
      self(self, col - 1);
    }
  };
  rec(rec, ncols - 1);

  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return tableau_order(a, b) > 0; });
  for (size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1] == out[i]) {
      throw std::logic_error("enumerate_kn4 produced a duplicate tableau");
    }
  }
  return out;
}

}  // namespace sympverma
