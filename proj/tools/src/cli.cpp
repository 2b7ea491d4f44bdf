#include "cli.hpp"

#include "superpres/en_realization.hpp"
#include "superpres/parallel.hpp"
#include "superpres/properties.hpp"
#include "superpres/propositions.hpp"
#include "superpres/roots.hpp"
#include "superpres/tables.hpp"
#include "superpres/theorem.hpp"
#include "superpres/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace superpres::cli {

namespace {

struct Suite {
  std::string name;
  int lo, hi;
  std::function<Report(int)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"relations", 3, 6, verify_relations},
      {"psi", 2, 6, verify_psi},
      {"weyl", 3, 5, verify_weyl_invariance},
      {"ideal", 3, 5, verify_ideal},
      {"prolongation", 3, 6, verify_prolongation},
      {"props", 3, 6, verify_propositions},
      {"enmap", 4, 8, verify_en_relations},
  };
  return all;
}

// Module checks that run only as part of --suite all.
const std::vector<Suite>& extra_suites() {
  static const std::vector<Suite> all{
      {"oracle", 1, 6, verify_operator_oracle},
      {"jacobi", 1, 4, verify_super_jacobi},
      {"grading", 2, 12, verify_grading_tables},
      {"atlas", 3, 6, verify_root_atlas},
      {"ktilde", 3, 8, verify_ktilde},
      {"multiplicities", 5, 8, verify_multiplicity_tables},
  };
  return all;
}

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_report(const std::string& suite, const Report& r, TableFormat format, std::ostream& out) {
  switch (format) {
    case TableFormat::records: {
      nlohmann::ordered_json j;
      j["suite"] = suite;
      j["title"] = r.title;
      j["passed"] = r.passed();
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out << j.dump() << "\n";
      break;
    }
    case TableFormat::tsv:
      for (const auto& c : r.checks) out << suite << "\t" << c.name << "\t" << status(c.passed) << "\t" << c.detail << "\n";
      break;
    case TableFormat::text:
      out << r.title << "\n";
      for (const auto& c : r.checks) {
        out << "  " << status(c.passed) << "  " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
      }
      break;
  }
}

int verify(const std::string& suite, int n, TableFormat format, std::ostream& out, std::ostream& err) {
  std::vector<const Suite*> selected;
  if (suite == "all") {
    for (const auto* list : {&suites(), &extra_suites()})
      for (const auto& s : *list)
        if (n >= s.lo && n <= s.hi) selected.push_back(&s);
  } else {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == suite; });
    if (it == suites().end()) {
      err << "unknown suite: " << suite << "\n";
      return 2;
    }
    if (n < it->lo || n > it->hi) {
      err << "suite " << suite << " needs " << it->lo << " <= n <= " << it->hi << "\n";
      return 2;
    }
    selected.push_back(&*it);
  }
  bool ok = true;
  for (const auto* s : selected) {
    const Report r = s->run(n);
    print_report(s->name, r, format, out);
    for (const auto& c : r.checks)
      if (!c.passed) {
        ok = false;
        err << s->name << ": " << c.name << " failed: " << c.detail << "\n";
      }
  }
  return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for W(n), S(n), sl(1|n) and their presentations", "superpres"};
  app.require_subcommand(1);
  int n = 3;
  unsigned threads = 1;
  std::string algebra = "w", format_name = "text", suite = "all", which;
  app.add_option("--threads", threads, "Worker threads for data-parallel checks")->check(CLI::Range(1u, 256u));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Number of odd generators")->check(CLI::Range(1, 12));
    sub->add_option("--format", format_name, "tsv, records or text")
        ->check(CLI::IsMember({"tsv", "records", "text"}));
  };
  auto* dims = app.add_subcommand("dims", "Level dimensions");
  add_common(dims);
  dims->add_option("--algebra", algebra, "w, s or sl1n")->check(CLI::IsMember({"w", "s", "sl1n"}));
  auto* roots = app.add_subcommand("roots", "Root decomposition");
  add_common(roots);
  roots->add_option("--algebra", algebra, "w or s")->check(CLI::IsMember({"w", "s"}));
  auto* table = app.add_subcommand("table", "Named table");
  add_common(table);
  table->add_option("--which", which, "Table id")->required()->check(CLI::IsMember(table_ids()));
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  add_common(ver);
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : suites()) suite_names.push_back(s.name);
  ver->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  set_thread_count(threads);
  const TableFormat format = parse_format(format_name);
  try {
    if (*dims) {
      out << render(dims_table(algebra, n), format);
      return 0;
    }
    if (*roots) {
      out << render(roots_table(algebra == "w" ? AlgebraKind::W : AlgebraKind::S, n), format);
      return 0;
    }
    if (*table) {
      out << emit_table(which, n, format);
      return 0;
    }
    return verify(suite, n, format, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
}

} // namespace superpres::cli
