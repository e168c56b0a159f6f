#include "sympverma/io.hpp"
#include "sympverma/order.hpp"
#include "sympverma/tableau.hpp"
#include "sympverma/tensor.hpp"
#include "sympverma/verma.hpp"
#include "sympverma/weyl.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace sv = sympverma;

namespace {

struct Opts {
  int m1 = 0;
  int m2 = 0;
  std::string format = "ascii";
  std::string out;
  unsigned long long budget = sv::kDefaultBudget;
  bool skip_rank = false;
};

// --out PATH writes a file, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string latex_monomial(sv::VermaTuple a) {
  std::string s = "$";
  auto factor = [&](int i, int e) {
    if (e == 0) return;
    s += "f_{" + std::to_string(i) + "}";
    if (e > 1) s += "^{" + std::to_string(e) + "}";
    s += ' ';
  };
  factor(1, a.a4);
  factor(2, a.a3);
  factor(1, a.a2);
  factor(2, a.a1);
  s += "v_{\\lambda}$";
  return s;
}

std::string ascii_rows(const sv::Tableau& t) {
  if (t.rows.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0) s += " / ";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j > 0) s += ' ';
      s += sv::entry_to_string(t.rows[i][j]);
    }
  }
  return s;
}

int cmd_tableaux(const Opts& o) {
  Sink sink(o.out);
  auto& os = sink.stream();
  auto list = sv::enumerate_kn4({o.m1, o.m2});
  for (const auto& t : list) {
    if (o.format == "json") {
      os << sv::tableau_to_json(t).dump() << '\n';
    } else if (o.format == "latex") {
      os << sv::tableau_to_latex(t) << '\n';
    } else {
      os << sv::tableau_to_ascii(t) << "\n\n";
    }
  }
  return 0;
}

int cmd_basis(const Opts& o) {
  Sink sink(o.out);
  auto& os = sink.stream();
  sv::HighestWeight hw{o.m1, o.m2};
  for (sv::VermaTuple a : sv::enumerate_tuples(hw)) {
    if (o.format == "json") {
      os << sv::basis_record_json(a, hw).dump() << '\n';
    } else if (o.format == "latex") {
      os << latex_monomial(a) << " & "
         << sv::tableau_to_latex(sv::tuple_to_tableau(a, hw)) << " \\\\\n";
    } else {
      sv::WeightVec w = sv::verma_weight(a, hw);
      os << '(' << a.a1 << ',' << a.a2 << ',' << a.a3 << ',' << a.a4 << ")  "
         << sv::monomial_string(a) << "  ->  "
         << ascii_rows(sv::tuple_to_tableau(a, hw)) << "  wt (" << w.c1 << ','
         << w.c2 << ")\n";
    }
  }
  return 0;
}

int cmd_matrix(const Opts& o) {
  sv::HighestWeight hw{o.m1, o.m2};
  auto rows = sv::expand_all(hw, o.budget);
  Sink sink(o.out);
  sv::write_matrix(sink.stream(), rows, hw);
  return 0;
}

int cmd_verify(const Opts& o) {
  sv::HighestWeight hw{o.m1, o.m2};
  auto [l1, l2] = sv::partition_of(hw);
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass, const std::string& note) {
    all_pass &= pass;
    std::cout << name << std::string(name.size() < 16 ? 16 - name.size() : 1, ' ')
              << (pass ? "pass" : "FAIL");
    if (!note.empty()) std::cout << "  (" << note << ')';
    std::cout << '\n';
  };

  auto tuples = sv::enumerate_tuples(hw);
  auto tableaux = sv::enumerate_kn4(hw);
  long long dim = sv::weyl_dim(l1, l2);
  {
    std::ostringstream note;
    note << "tuples=" << tuples.size() << " tableaux=" << tableaux.size()
         << " weyl=" << dim;
    report("counting", static_cast<long long>(tuples.size()) == dim &&
                           static_cast<long long>(tableaux.size()) == dim,
           note.str());
  }
  {
    bool ok = true;
    std::vector<sv::Tableau> image;
    image.reserve(tuples.size());
    for (sv::VermaTuple a : tuples) {
      sv::Tableau t = sv::tuple_to_tableau(a, hw);
      ok &= sv::is_kn_sp4(t);
      ok &= sv::tableau_to_tuple(t) == a;
      ok &= sv::tableau_weight(t) == sv::verma_weight(a, hw);
      image.push_back(std::move(t));
    }
    std::sort(image.begin(), image.end(), [](const auto& x, const auto& y) {
      return sv::tableau_order(x, y) > 0;
    });
    ok &= image == tableaux;
    report("bijection", ok, "round-trip, image, weights");
  }
  {
    bool ok = sv::relation_check(hw, o.budget);
    sv::ExactVector v = sv::highest_weight_vector(hw);
    ok &= sv::act(sv::Gen::e1, v).is_zero() && sv::act(sv::Gen::e2, v).is_zero();
    ok &= sv::act(sv::Gen::h1, v) == sv::scale(v, o.m1);
    ok &= sv::act(sv::Gen::h2, v) == sv::scale(v, o.m2);
    report("relations", ok, "commutators, maximal vector");
  }
  sv::TriangularCertificate cert = sv::check_triangular(hw, o.budget);
  {
    std::ostringstream note;
    note << cert.records.size() << " tuples";
    report("triangularity", cert.ok(), note.str());
    for (const auto& viol : cert.violations) std::cout << "  ! " << viol << '\n';
  }
  if (o.skip_rank) {
    std::cout << "rank            skipped\n";
  } else {
    long long rank = sv::independence_rank(hw, o.budget);
    std::ostringstream note;
    note << "rank=" << rank << " weyl=" << dim;
    report("rank", rank == dim, note.str());
  }
  if (!o.out.empty()) {
    Sink sink(o.out);
    sink.stream() << sv::certificate_to_json(cert).dump(2) << '\n';
  }
  std::cout << "RESULT          " << (all_pass ? "pass" : "FAIL") << '\n';
  return all_pass ? 0 : 1;
}

unsigned long long env_budget() {
  const char* env = std::getenv("SYMP_VERMA_BUDGET");
  if (env == nullptr || *env == '\0') return sv::kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw CLI::ValidationError("SYMP_VERMA_BUDGET",
                               "must be a nonnegative integer");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verma vector system of finite dimensional irreducible "
               "sp4-modules: enumeration, bijection, tensor-model expansion, "
               "and exact independence checks"};
  app.require_subcommand(1);

  Opts o;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--m1", o.m1, "multiplicity of omega_1")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--m2", o.m2, "multiplicity of omega_2")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "write output to a file instead of stdout");
    if (with_format) {
      sub->add_option("--format", o.format, "output format")
          ->check(CLI::IsMember({"ascii", "json", "latex"}))
          ->capture_default_str();
    }
  };

  CLI::App* tab = app.add_subcommand("tableaux", "list the KN tableaux of shape (m1+m2, m2)");
  add_common(tab, true);
  CLI::App* bas = app.add_subcommand("basis", "list the Verma basis records");
  add_common(bas, true);
  CLI::App* ver = app.add_subcommand(
      "verify", "check counting, bijection, relations, triangularity and rank");
  add_common(ver, false);
  ver->add_option("--budget", o.budget,
                  "state-count budget (default 10^7, env SYMP_VERMA_BUDGET)");
  ver->add_flag("--skip-rank", o.skip_rank, "skip the rank computation");
  CLI::App* mat = app.add_subcommand("matrix", "export the Verma matrix as coordinate triples");
  add_common(mat, false);
  mat->add_option("--budget", o.budget,
                  "state-count budget (default 10^7, env SYMP_VERMA_BUDGET)");

  try {
    o.budget = env_budget();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tab->parsed()) return cmd_tableaux(o);
    if (bas->parsed()) return cmd_basis(o);
    if (ver->parsed()) return cmd_verify(o);
    return cmd_matrix(o);
  } catch (const sv::resource_error& e) {
    std::cerr << "resource refusal: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
