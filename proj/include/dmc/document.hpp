#pragma once

#include <string>
#include <variant>

#include "dmc/enumerate.hpp"

namespace dmc {

// Anything the tool reads or writes as a standalone file: a labeling, a
// reduced table, a pair of partial tables, or generating sequences.
enum class DocKind { labeling, square_table, table_pair, pair, quadruple };

const char* to_string(DocKind k);

// A document header always names the target graph C_m x C_n; the payload
// dimensions follow from the kind (an m x m table for square-table, two
// (m/2)-square tables for table-pair, length-m sequences for pair,
// length-(m/2) sequences for quadruple).
struct TableDocument {
  DocKind kind = DocKind::labeling;
  int m = 0;
  int n = 0;
  std::string note;  // optional free-form comment lines
  std::variant<Labeling, SquareTable, TablePair, AdmissiblePair,
               AdmissibleQuadruple>
      payload{Labeling(GridParams(3, 3))};

  friend bool operator==(const TableDocument&, const TableDocument&) =
      default;
};

TableDocument make_document(Labeling l, std::string note = "");
TableDocument make_document(SquareTable t, std::string note = "");
TableDocument make_document(TablePair p, std::string note = "");
TableDocument make_document(AdmissiblePair p, std::string note = "");
TableDocument make_document(AdmissibleQuadruple q, std::string note = "");

// Line-oriented canonical form:
//   dmcycles v1 <kind> m=<m> n=<n>
//   # <note line>            (zero or more)
//   <payload lines>
// Payload lines are space-separated integers: grid rows for labeling and
// square-table, the two blocks separated by a "--" line for table-pair,
// and "a: ..."-style sequence lines for pair and quadruple.
std::string to_text(const TableDocument& doc);

// The same data as a JSON object.
std::string to_json(const TableDocument& doc);

// Reads either serialization (JSON when the input starts with '{').
// Errors carry a line number for the text form.
TableDocument parse_document(const std::string& input);

// Census listings:
//   dmcycles v1 census m=<m> count=<count> [partial]
// followed by one canonical pair line per member unless the listing was
// produced in count-only mode.
std::string census_to_text(const CensusResult& res);
std::string census_to_json(const CensusResult& res);

struct CensusListing {
  int m = 0;
  std::uint64_t count = 0;
  bool truncated = false;
  std::vector<SetPair> pairs;  // empty for a count-only listing
};

CensusListing parse_census(const std::string& input);

}  // namespace dmc
