#include "superpres/tables.hpp"

#include "superpres/cartan.hpp"
#include "superpres/roots.hpp"
#include "superpres/wn.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace superpres {

TableFormat parse_format(const std::string& name) {
  if (name == "tsv") return TableFormat::tsv;
  if (name == "records") return TableFormat::records;
  if (name == "text") return TableFormat::text;
  throw std::invalid_argument("unknown format: " + name);
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids{"grading-w", "grading-s", "roots", "mult-20", "mult-010"};
  return ids;
}

std::string labels_string(const std::vector<int>& labels) {
  const bool compact = std::all_of(labels.begin(), labels.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!compact && i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s + ")";
}

namespace {

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Lambda_i as n-1 labels; i = 0 and i = n give the trivial weight.
std::vector<int> fundamental(int n, std::initializer_list<int> nodes) {
  std::vector<int> v(n - 1, 0);
  for (int i : nodes)
    if (i >= 1 && i <= n - 1) v[i - 1] += 1;
  return v;
}

// gl(n) modules of Lambda^p V (x) V* restricted to sl(n); S(n) drops the trace part.
std::vector<std::vector<int>> level_modules(bool traceless, int n, int p) {
  if (p == 0) return {fundamental(n, {n - 1})};
  if (p == n) return traceless ? std::vector<std::vector<int>>{} : std::vector<std::vector<int>>{fundamental(n, {n - 1})};
  std::vector<std::vector<int>> out{fundamental(n, {p, n - 1})};
  if (!traceless) out.push_back(fundamental(n, {p - 1}));
  return out;
}

std::string basis_pattern(bool hat, int p) {
  std::string s = hat ? "hatK" : "K";
  if (p == 0) return s + "_b";
  s += "^{";
  for (int i = 1; i <= p; ++i) s += "a" + std::to_string(i);
  return s + "}_b";
}

void require_n(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw std::invalid_argument(what + ": n must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
}

Table grading_table(bool traceless, int n) {
  require_n(n, 2, 12, traceless ? "grading-s" : "grading-w");
  Table t;
  t.id = traceless ? "grading-s" : "grading-w";
  t.columns = {"level", "basis", "representation", "dimension"};
  for (int p = 0; p <= n; ++p) {
    const int level = 1 - p;
    const long dim = traceless ? static_cast<long>(s_basis(n, level).size())
                               : static_cast<long>(w_basis(n, level).size());
    if (dim == 0) continue;
    std::string rep;
    const auto mods = level_modules(traceless, n, p);
    for (std::size_t i = 0; i < mods.size(); ++i) rep += (i ? "+" : "") + labels_string(mods[i]);
    t.rows.push_back({static_cast<long>(level), basis_pattern(traceless && p > 0, p), rep, dim});
  }
  return t;
}

} // namespace

Table roots_table(AlgebraKind algebra, int n) {
  Table t;
  t.id = algebra == AlgebraKind::W ? "roots" : "roots-s";
  t.columns = {"level", "root", "mult", "length_sq"};
  for (const auto& e : root_decomposition(algebra, n))
    t.rows.push_back({static_cast<long>(e.level), e.root.coeffs, static_cast<long>(e.multiplicity),
                      e.length_sq.get_str()});
  return t;
}

namespace {

Table multiplicity_table(const std::string& which, int n) {
  require_n(n, 5, 8, which);
  const auto A = cartan_A(n - 1);
  const std::vector<int> target = which == "mult-20" ? fundamental(n, {1, 1}) : fundamental(n, {2});
  Table t;
  t.id = which;
  t.columns = {"representation", "multiplicity"};
  for (const auto& h : multiplicity_modules(which, n))
    t.rows.push_back({labels_string(h), static_cast<long>(freudenthal_multiplicity(A, h, target))});
  return t;
}

std::string cell_text(const TableCell& c) {
  if (const auto* i = std::get_if<long>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const auto& v = std::get<std::vector<int>>(c);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

} // namespace

std::vector<std::vector<int>> multiplicity_modules(const std::string& which, int n) {
  if (which == "mult-20")
    return {fundamental(n, {4, n - 1, n - 1}), fundamental(n, {3, n - 1}),
            fundamental(n, {2, 2, n - 1, n - 1}), fundamental(n, {1, 3, n - 2}),
            fundamental(n, {1, 2, n - 1}), fundamental(n, {1, 1})};
  if (which == "mult-010")
    return {fundamental(n, {4, n - 1, n - 1}), fundamental(n, {3, n - 1}), fundamental(n, {2})};
  throw std::invalid_argument("unknown multiplicity table: " + which);
}

Table build_table(const std::string& which, int n) {
  if (which == "grading-w") return grading_table(false, n);
  if (which == "grading-s") return grading_table(true, n);
  if (which == "roots") return roots_table(AlgebraKind::W, n);
  if (which == "mult-20" || which == "mult-010") return multiplicity_table(which, n);
  throw std::invalid_argument("unknown table: " + which);
}

Table dims_table(const std::string& algebra, int n) {
  Table t;
  t.id = "dims-" + algebra;
  t.columns = {"level", "dimension"};
  if (algebra == "w" || algebra == "s") {
    require_n(n, 2, 12, "dims");
    for (int level = 1; level >= 1 - n; --level) {
      const long d = algebra == "w" ? static_cast<long>(w_basis(n, level).size())
                                    : static_cast<long>(s_basis(n, level).size());
      if (d) t.rows.push_back({static_cast<long>(level), d});
    }
    return t;
  }
  if (algebra == "sl1n") {
    require_n(n, 1, 12, "dims");
    long count[3] = {0, 0, 0};
    for (const auto& b : sl1n_basis(n)) ++count[1 - b.level()];
    for (int i = 0; i < 3; ++i) t.rows.push_back({static_cast<long>(1 - i), count[i]});
    return t;
  }
  throw std::invalid_argument("unknown algebra: " + algebra);
}

std::string render(const Table& table, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::tsv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "\t" : "") << table.columns[i];
      os << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << cell_text(row[i]);
        os << "\n";
      }
      break;
    }
    case TableFormat::records: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
          std::visit([&](const auto& v) { rec[table.columns[i]] = v; }, row[i]);
        rows.push_back(std::move(rec));
      }
      nlohmann::ordered_json doc = nlohmann::ordered_json::object();
      doc["table"] = table.id;
      doc["rows"] = std::move(rows);
      os << doc.dump(2) << "\n";
      break;
    }
    case TableFormat::text: {
      std::vector<std::size_t> width;
      for (const auto& c : table.columns) width.push_back(c.size());
      for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::ostringstream cell;
          cell << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
          s += (i ? "  " : "") + cell.str();
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << "\n";
      };
      line(table.columns);
      std::vector<std::string> rule;
      for (auto w : width) rule.push_back(std::string(w, '-'));
      line(rule);
      for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(cell_text(c));
        line(cells);
      }
      break;
    }
  }
  return os.str();
}

std::string emit_table(const std::string& which, int n, TableFormat format) {
  return render(build_table(which, n), format);
}

Report verify_grading_tables(int n) {
  require_n(n, 2, 12, "verify_grading_tables");
  Report report;
  report.title = "grading n=" + std::to_string(n);
  const auto A = cartan_A(n - 1);
  for (bool traceless : {false, true}) {
    const std::string name = traceless ? "S" : "W";
    long total = 0;
    for (int p = 0; p <= n; ++p) {
      const int level = 1 - p;
      const long dim = traceless ? static_cast<long>(s_basis(n, level).size())
                                 : static_cast<long>(w_basis(n, level).size());
      const long expected = traceless ? n * binom(n, p) - binom(n, p - 1) : n * binom(n, p);
      total += dim;
      long weyl = 0;
      for (const auto& m : level_modules(traceless, n, p)) weyl += weyl_dimension(A, m).get_si();
      std::ostringstream os;
      os << dim << " vs " << expected << ", modules " << weyl;
      report.add(name + " level " + std::to_string(level), dim == expected && weyl == expected, os.str());
    }
    const long expected_total = traceless ? (n - 1) * (1L << n) + 1 : n * (1L << n);
    report.add(name + " total", total == expected_total,
               std::to_string(total) + " vs " + std::to_string(expected_total));
  }
  return report;
}

Report verify_multiplicity_tables(int n) {
  require_n(n, 5, 8, "verify_multiplicity_tables");
  Report report;
  report.title = "multiplicities n=" + std::to_string(n);
  const std::vector<long> m20{0, 0, (n - 2) * (n - 1) / 2, (n - 3) * (n - 2) / 2 - 1, n - 2, 1};
  const std::vector<long> m010{(n - 4) * (n - 3) / 2, n - 3, 1};
  for (const auto& [which, expected] : {std::pair{std::string("mult-20"), m20}, std::pair{std::string("mult-010"), m010}}) {
    const Table t = build_table(which, n);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const long got = std::get<long>(t.rows[i][1]);
      report.add(which + " " + std::get<std::string>(t.rows[i][0]), got == expected[i],
                 std::to_string(got) + " vs " + std::to_string(expected[i]));
    }
  }
  return report;
}

} // namespace superpres
