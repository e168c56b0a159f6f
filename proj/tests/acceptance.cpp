// acceptance.cpp - end-to-end gate for the Verma vector system
// Eight criteria, one [PASS]/[FAIL] line each; exits 1 if any fail.
#include "sympverma/io.hpp"
#include "sympverma/order.hpp"
#include "sympverma/tableau.hpp"
#include "sympverma/tensor.hpp"
#include "sympverma/verma.hpp"
#include "sympverma/weyl.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sympverma;
using nlohmann::json;

namespace {

int failures = 0;
bool current_ok = true;

#define ACC_CHECK(cond)                                                     \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::cout << "    check failed: " #cond " (line " << __LINE__ << ")\n"; \
      current_ok = false;                                                   \
    }                                                                       \
  } while (0)

void criterion(int num, const std::string& name,
               const std::function<void()>& body) {
  current_ok = true;
  try {
    body();
  } catch (const std::exception& e) {
    std::cout << "    unexpected exception: " << e.what() << '\n';
    current_ok = false;
  }
  if (!current_ok) ++failures;
  std::cout << (current_ok ? "[PASS] " : "[FAIL] ") << num << ". " << name
            << std::endl;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = "\"" SYMP_VERMA_BIN "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// All 4^boxes fillings of the two-row shape, column-strict or not.
void for_each_filling(int l1, int l2, const std::function<void(const Tableau&)>& fn) {
  const Entry letters[4] = {1, 2, -2, -1};
  int boxes = l1 + l2;
  std::vector<int> digits(boxes, 0);
  while (true) {
    Tableau t{2, {}};
    if (l1 > 0) t.rows.emplace_back();
    if (l2 > 0) t.rows.emplace_back();
    for (int i = 0; i < l1; ++i) t.rows[0].push_back(letters[digits[i]]);
    for (int i = 0; i < l2; ++i) t.rows[1].push_back(letters[digits[l1 + i]]);
    fn(t);
    int k = 0;
    while (k < boxes && digits[k] == 3) digits[k++] = 0;
    if (k == boxes) return;
    ++digits[k];
  }
}

}  // namespace

int main() {
  std::cout << "acceptance gate: Verma vector system of irreducible sp4-modules\n\n";

  criterion(1, "tuple count = tableau count = Weyl dimension for all m1, m2 <= 6", [] {
    for (int m1 = 0; m1 <= 6; ++m1) {
      for (int m2 = 0; m2 <= 6; ++m2) {
        HighestWeight hw{m1, m2};
        auto [l1, l2] = partition_of(hw);
        long long dim = weyl_dim(l1, l2);
        ACC_CHECK(static_cast<long long>(enumerate_tuples(hw).size()) == dim);
        ACC_CHECK(static_cast<long long>(enumerate_kn4(hw).size()) == dim);
      }
    }
  });

  criterion(2, "CLI basis listing for (1,2) reproduces the frozen 40-record table", [] {
    auto res = run_cli("basis --m1 1 --m2 2 --format json");
    ACC_CHECK(res.code == 0);
    std::vector<json> records;
    std::istringstream is(res.out);
    std::string line;
    while (std::getline(is, line)) records.push_back(json::parse(line));
    ACC_CHECK(records.size() == 40);

    std::ifstream golden_file(std::string(GOLDEN_DIR) + "/example44.json");
    ACC_CHECK(golden_file.good());
    json golden = json::parse(golden_file);
    ACC_CHECK(golden.size() == records.size());
    for (std::size_t i = 0; i < records.size() && i < golden.size(); ++i) {
      ACC_CHECK(records[i] == golden[i]);
    }

    auto find = [&](const json& tuple) -> json {
      for (const auto& r : records) {
        if (r["tuple"] == tuple) return r;
      }
      return json();
    };
    json r1 = find(json({2, 3, 1, 0}));
    ACC_CHECK(r1["monomial"] == "f2 f1^3 f2^2 v");
    ACC_CHECK(r1["tableau"]["rows"] == json({{"1", "2", "2b"}, {"2b", "1b"}}));
    ACC_CHECK(r1["weight"] == json({0, -1}));
    json r2 = find(json({0, 1, 1, 1}));
    ACC_CHECK(r2["monomial"] == "f1 f2 f1 v");
    ACC_CHECK(r2["tableau"]["rows"] == json({{"1", "1", "1b"}, {"2", "2"}}));
    ACC_CHECK(r2["weight"] == json({1, 2}));
  });

  criterion(3, "the four (1,0) Verma vectors are the standard basis of C^4, f1 f2 f1 v = -eps3", [] {
    HighestWeight hw{1, 0};
    auto tuples = enumerate_tuples(hw);
    ACC_CHECK(tuples.size() == 4);
    const std::array<Int, 4> expect[4] = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      ExactVector v = verma_vector(tuples[i], hw);
      ACC_CHECK(v.num_terms() == 1);
      ACC_CHECK(original_coordinates(v) == expect[i]);
    }
    ACC_CHECK((tuples[3] == VermaTuple{0, 1, 1, 1}));
  });

  criterion(4, "closed-form weights match tableau weights (m <= 6) and h eigenvalues (m <= 3)", [] {
    for (int m1 = 0; m1 <= 6; ++m1) {
      for (int m2 = 0; m2 <= 6; ++m2) {
        HighestWeight hw{m1, m2};
        for (VermaTuple a : enumerate_tuples(hw)) {
          ACC_CHECK(verma_weight(a, hw) == tableau_weight(tuple_to_tableau(a, hw)));
        }
      }
    }
    for (int m1 = 0; m1 <= 3; ++m1) {
      for (int m2 = 0; m2 <= 3; ++m2) {
        for (auto& [a, v] : expand_all({m1, m2})) {
          WeightVec w = verma_weight(a, {m1, m2});
          ACC_CHECK(act(Gen::h1, v) == scale(v, w.c1 - w.c2));
          ACC_CHECK(act(Gen::h2, v) == scale(v, w.c2));
        }
      }
    }
  });

  criterion(5, "every expansion is triangular with leading coefficient a1! a2! a3! a4!", [] {
    for (int m1 = 0; m1 <= 3; ++m1) {
      for (int m2 = 0; m2 <= 3; ++m2) {
        HighestWeight hw{m1, m2};
        TriangularCertificate cert = check_triangular(hw);
        for (const auto& viol : cert.violations) std::cout << "    ! " << viol << '\n';
        ACC_CHECK(cert.ok());
        ACC_CHECK(cert.records.size() == enumerate_tuples(hw).size());
      }
    }
    ACC_CHECK(check_triangular({1, 2}).ok());
  });

  criterion(6, "independence rank equals the Weyl dimension wherever 4^m1 6^m2 <= 10^6", [] {
    int verified = 0;
    for (int m2 = 0; m2 <= 8; ++m2) {
      for (int m1 = 0; m1 <= 10; ++m1) {
        HighestWeight hw{m1, m2};
        if (states_of(hw) > 1'000'000ULL) continue;
        auto [l1, l2] = partition_of(hw);
        long long rank = independence_rank(hw);
        if (rank != weyl_dim(l1, l2)) {
          std::cout << "    rank mismatch at (" << m1 << ',' << m2 << "): "
                    << rank << " vs " << weyl_dim(l1, l2) << '\n';
          current_ok = false;
        }
        ++verified;
      }
    }
    std::cout << "    " << verified << " highest weights verified\n";
    ACC_CHECK(verified == 47);
  });

  criterion(7, "specialized pattern checker agrees with the general column-pair definition", [] {
    long long agreed = 0;
    for (int l1 = 0; l1 <= 4; ++l1) {
      for (int l2 = 0; l2 <= l1; ++l2) {
        for_each_filling(l1, l2, [&](const Tableau& t) {
          if (is_kn_sp4(t) == is_kn(t)) {
            ++agreed;
          } else {
            current_ok = false;
          }
        });
      }
    }
    std::cout << "    " << agreed << " fillings compared\n";
    // The general checker also handles higher rank: two sp6 spot checks.
    ACC_CHECK(is_kn(Tableau{3, {{1, 3}, {2, -3}, {3, -1}}}));
    ACC_CHECK(!is_kn(Tableau{3, {{2, 3}, {3, -3}, {-3, -2}}}));
  });

  criterion(8, "generator relations hold on W and v is a maximal vector of weight (m1, m2)", [] {
    ACC_CHECK(relation_check({1, 0}));
    ACC_CHECK(relation_check({0, 1}));
    ACC_CHECK(relation_check({1, 1}));
    for (int m1 = 0; m1 <= 4; ++m1) {
      for (int m2 = 0; m2 <= 4; ++m2) {
        ExactVector v = highest_weight_vector({m1, m2});
        ACC_CHECK(act(Gen::e1, v).is_zero());
        ACC_CHECK(act(Gen::e2, v).is_zero());
        ACC_CHECK(act(Gen::h1, v) == scale(v, m1));
        ACC_CHECK(act(Gen::h2, v) == scale(v, m2));
      }
    }
  });

  std::cout << '\n'
            << (failures == 0 ? "all 8 criteria passed"
                              : std::to_string(failures) + " criteria FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
