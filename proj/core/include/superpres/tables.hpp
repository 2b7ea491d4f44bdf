#pragma once

#include "superpres/report.hpp"
#include "superpres/roots.hpp"

#include <string>
#include <variant>
#include <vector>

namespace superpres {

enum class TableFormat { tsv, records, text };

TableFormat parse_format(const std::string& name);

/// Integers, integer lists (roots) and text (labels, rationals as "p/q").
using TableCell = std::variant<long, std::vector<int>, std::string>;

struct Table {
  std::string id;
  std::vector<std::string> columns;
  std::vector<std::vector<TableCell>> rows;
};

/// Ids accepted by build_table.
const std::vector<std::string>& table_ids();

/// grading-w, grading-s, roots, mult-20, mult-010. Throws
/// std::invalid_argument on an unknown id or unsupported n.
Table build_table(const std::string& which, int n);

/// Roots with level, multiplicity and squared length, 3 <= n <= 6.
Table roots_table(AlgebraKind algebra, int n);

/// Level dimensions of "w", "s" or "sl1n".
Table dims_table(const std::string& algebra, int n);

/// Byte-stable rendering.
std::string render(const Table& table, TableFormat format);

std::string emit_table(const std::string& which, int n, TableFormat format);

/// Dynkin labels in compact form, e.g. (0202); comma separated when a label
/// exceeds 9.
std::string labels_string(const std::vector<int>& labels);

/// Highest weights listed in the mult-20 / mult-010 tables, as n-1 labels.
std::vector<std::vector<int>> multiplicity_modules(const std::string& which, int n);

/// Grading dims against n C(n,p) and n C(n,p) - C(n,p-1), the module
/// decomposition of each level against its Weyl dimensions, and the totals.
Report verify_grading_tables(int n);

/// Freudenthal multiplicities in the mult-20 and mult-010 tables against
/// their closed forms. 5 <= n <= 8.
Report verify_multiplicity_tables(int n);

} // namespace superpres
