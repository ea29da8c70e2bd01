// powq: command line front end.
//
// Exit codes: 0 all checks pass, 1 usage or input error, 2 counterexample
// found, 3 check failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/extension.hpp"
#include "powq/homology.hpp"
#include "powq/io.hpp"
#include "powq/power_quandle.hpp"
#include "powq/presentation.hpp"
#include "powq/report.hpp"

namespace {

using namespace powq;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailure = 3;

void print_map(const std::vector<Index>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << m[i];
  std::cout << "\n";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, power quandles and the Gr / Pq adjunction"};
  app.require_subcommand(1);
  int code = kOk;

  // group
  auto* group = app.add_subcommand("group", "Finite groups given by multiplication tables");
  group->require_subcommand(1);
  std::string group_file, group_file_b, catalog_name, out_path;
  std::vector<long> catalog_params;

  auto* g_validate = group->add_subcommand("validate", "Check the group axioms of a group file");
  g_validate->add_option("file", group_file)->required();
  g_validate->callback([&] {
    try {
      const FiniteGroup g = read_group_file(group_file);
      std::cout << "valid group of order " << g.order() << "\n";
    } catch (const GroupError& e) {
      std::cout << "invalid: " << e.what() << "\n";
      code = kCheckFailure;
    }
  });

  auto* g_catalog = group->add_subcommand("catalog", "Write a catalog group as a group file");
  g_catalog->add_option("name", catalog_name, "Family name or expression such as product(cyclic(2),klein)")->required();
  g_catalog->add_option("params", catalog_params);
  g_catalog->add_option("-o,--output", out_path);
  g_catalog->callback([&] {
    const FiniteGroup g = catalog_params.empty() && catalog_name.find('(') != std::string::npos
                              ? catalog_from_string(catalog_name)
                              : catalog(catalog_name, catalog_params);
    emit(group_to_json(g).dump() + "\n", out_path);
  });

  auto* g_iso = group->add_subcommand("iso", "Search for an isomorphism between two groups");
  g_iso->add_option("fileA", group_file)->required();
  g_iso->add_option("fileB", group_file_b)->required();
  g_iso->callback([&] {
    const auto iso = group_iso(read_group_file(group_file), read_group_file(group_file_b));
    if (iso) {
      std::cout << "isomorphic\n";
      print_map(*iso);
    } else {
      std::cout << "not isomorphic\n";
    }
  });

  // pq
  auto* pq = app.add_subcommand("pq", "Finite power quandles");
  pq->require_subcommand(1);
  std::string pq_file, pq_file_b;

  auto* p_validate = pq->add_subcommand("validate", "Check axioms A1..A9 of a power quandle file");
  p_validate->add_option("file", pq_file)->required();
  p_validate->callback([&] {
    try {
      const PowerQuandle p = read_pq_file(pq_file);
      std::cout << "valid power quandle of size " << p.size() << ", exponent " << p.exponent() << "\n";
    } catch (const AxiomViolation& e) {
      std::cout << "invalid: " << e.what() << "\n";
      code = kCheckFailure;
    }
  });

  auto* p_of_group = pq->add_subcommand("of-group", "Write Pq(G) for a group file");
  p_of_group->add_option("groupfile", group_file)->required();
  p_of_group->add_option("-o,--output", out_path);
  p_of_group->callback([&] { emit(pq_to_json(pq_of_group(read_group_file(group_file))).dump() + "\n", out_path); });

  auto* p_iso = pq->add_subcommand("iso", "Search for an isomorphism of power quandles");
  p_iso->add_option("fileA", pq_file)->required();
  p_iso->add_option("fileB", pq_file_b)->required();
  p_iso->callback([&] {
    const auto iso = pq_iso(read_pq_file(pq_file), read_pq_file(pq_file_b));
    if (iso) {
      std::cout << "isomorphic\n";
      print_map(*iso);
    } else {
      std::cout << "not isomorphic\n";
    }
  });

  auto* p_orbits = pq->add_subcommand("orbits", "Print the orbits of a power quandle");
  p_orbits->add_option("file", pq_file)->required();
  p_orbits->callback([&] {
    const OrbitPq o = orbits(read_pq_file(pq_file));
    std::cout << o.classes.size() << " orbits\n";
    for (const auto& c : o.classes) print_map(c);
  });

  auto* p_morph = pq->add_subcommand("morph-count", "Count power quandle morphisms A -> B");
  p_morph->add_option("fileA", pq_file)->required();
  p_morph->add_option("fileB", pq_file_b)->required();
  p_morph->callback([&] { std::cout << count_pq_morphisms(read_pq_file(pq_file), read_pq_file(pq_file_b)) << "\n"; });

  // homology, bgroup
  int degree = 1;
  bool dump = false;
  auto* homology = app.add_subcommand("homology", "Integral homology from the normalized bar complex");
  homology->add_option("groupfile", group_file)->required();
  homology->add_option("--degree", degree)->check(CLI::IsMember({1, 2}))->required();
  homology->add_flag("--dump", dump, "Print the differential matrices");
  homology->callback([&] {
    const FiniteGroup g = read_group_file(group_file);
    if (dump) {
      for (int d = 2; d <= degree + 1; ++d) std::cout << "# d" << d << "\n" << to_text(bar_differential(g, d));
    }
    std::cout << "H" << degree << " = " << bar_homology(g, degree).to_string() << "\n";
  });

  auto* bgroup = app.add_subcommand("bgroup", "B(G) = Z Cl(G) / (n[a] - [a^n])");
  bgroup->add_option("groupfile", group_file)->required();
  bgroup->add_flag("--dump", dump, "Print the relation matrix");
  bgroup->callback([&] {
    const FiniteGroup g = read_group_file(group_file);
    if (dump) std::cout << to_text(b_group_relations(g));
    std::cout << "B = " << b_group(g).to_string() << "\n";
  });

  // gr, grpq
  std::size_t limit = kDefaultCosetLimit;
  auto* gr = app.add_subcommand("gr", "Enumerate Gr(P) for a power quandle file");
  gr->add_option("pqfile", pq_file)->required();
  gr->add_option("--limit", limit, "Maximum number of live cosets");
  gr->add_flag("--dump", dump, "Print the presentation");
  gr->callback([&] {
    const Presentation pres = presentation_of_pq(read_pq_file(pq_file));
    if (dump) std::cout << to_text(pres);
    const EnumeratedGroup e = todd_coxeter(pres, limit);
    std::cout << "|Gr(P)| = " << e.group.order() << "\n";
    std::cout << "cosets defined " << e.stats.cosets_defined << ", max live " << e.stats.max_live << "\n";
  });

  auto* grpq = app.add_subcommand("grpq", "Build Gr Pq(G) -> G and its kernel A(G)");
  grpq->add_option("groupfile", group_file)->required();
  grpq->add_option("--limit", limit, "Maximum number of live cosets");
  grpq->callback([&] {
    const FiniteGroup g = read_group_file(group_file);
    try {
      const CentralExtension ext = gr_pq(g, limit);
      std::cout << "|E| = " << ext.total.order() << "\n";
      std::cout << "|A(G)| = " << ext.kernel.order() << "\n";
      std::cout << "A(G) central: yes\n";
    } catch (const CentralityFailure& e) {
      std::cout << "A(G) central: no (" << e.what() << ")\n";
      code = kCheckFailure;
    }
  });

  // verify five-term
  auto* verify = app.add_subcommand("verify", "Theorem checks for a single group");
  verify->require_subcommand(1);
  auto* five = verify->add_subcommand("five-term", "H2 -> A(G) -> B(G) -> H1 -> 0");
  five->add_option("groupfile", group_file)->required();
  five->add_option("--limit", limit, "Maximum number of live cosets");
  five->callback([&] {
    const FiniteGroup g = read_group_file(group_file);
    const FiveTermReport r = verify_five_term(g, gr_pq(g, limit));
    std::cout << "|E| = " << r.e_order << ", |A| = " << r.a_order << ", |A n [E,E]| = " << r.a_cap_commutator << "\n";
    std::cout << "B = " << r.b.to_string() << ", H1 = " << r.h1.to_string()
              << ", H2 = " << (r.h2 ? r.h2->to_string() : "-") << "\n";
    for (const auto& c : r.checks) {
      std::cout << (c.skipped ? "skip " : c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    if (!r.all_passed()) code = kCheckFailure;
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Catalog sweeps");
  sweep->require_subcommand(1);
  std::size_t max_order = 8;
  auto run_sweep = [&](const VerificationReport& r) {
    if (!out_path.empty()) write_text_file(out_path, emit_report(r, "json"));
    std::cout << emit_report(r, "text");
    code = r.exit_code();
  };
  auto* s_forget = sweep->add_subcommand("forgetful", "Compare pq_iso with group_iso on same-order catalog pairs");
  s_forget->add_option("--max-order", max_order)->required();
  s_forget->add_option("-o,--output", out_path, "Write the JSON report here");
  s_forget->callback([&] { run_sweep(sweep_forgetful(max_order)); });
  auto* s_adj = sweep->add_subcommand("adjoint", "Gr Pq(G), five-term and split checks per catalog group");
  s_adj->add_option("--max-order", max_order)->required();
  s_adj->add_option("--limit", limit, "Maximum number of live cosets");
  s_adj->add_option("-o,--output", out_path, "Write the JSON report here");
  s_adj->callback([&] { run_sweep(sweep_adjoint(max_order, limit)); });

  // report
  std::string report_file, format = "text";
  auto* report = app.add_subcommand("report", "Render a saved JSON report");
  report->add_option("file", report_file)->required();
  report->add_option("--format", format);
  report->callback([&] {
    const VerificationReport r = report_from_json(read_json_file(report_file));
    std::cout << emit_report(r, format);
    code = r.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const powq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}
