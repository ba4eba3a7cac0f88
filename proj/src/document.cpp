#include "dmc/document.hpp"

#include <sstream>

#include <json.hpp>

namespace dmc {
namespace {

using nlohmann::json;

std::invalid_argument at_line(std::size_t lineno, const std::string& what) {
  std::ostringstream os;
  os << "line " << lineno << ": " << what;
  return std::invalid_argument(os.str());
}

Int parse_int(const std::string& word, std::size_t lineno) {
  std::size_t pos = 0;
  Int v = 0;
  try {
    v = std::stoll(word, &pos);
  } catch (const std::exception&) {
    throw at_line(lineno, "bad integer: " + word);
  }
  if (pos != word.size()) throw at_line(lineno, "bad integer: " + word);
  return v;
}

IntSeq parse_ints(const std::string& line, std::size_t lineno) {
  IntSeq out;
  std::istringstream is(line);
  std::string word;
  while (is >> word) out.push_back(parse_int(word, lineno));
  return out;
}

// "x: v v v" with the given tag
IntSeq parse_tagged_seq(const std::string& line, const std::string& tag,
                        std::size_t lineno) {
  std::istringstream is(line);
  std::string head;
  if (!(is >> head) || head != tag + ":") {
    throw at_line(lineno, "expected a \"" + tag + ":\" line");
  }
  IntSeq out;
  std::string word;
  while (is >> word) out.push_back(parse_int(word, lineno));
  if (out.empty()) throw at_line(lineno, tag + ": line has no values");
  return out;
}

void emit_seq(std::ostream& os, const char* tag, const IntSeq& v) {
  os << tag << ":";
  for (Int x : v) os << " " << x;
  os << "\n";
}

void emit_rows(std::ostream& os, const std::vector<Int>& entries, int cols) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    os << entries[k] << (k % cols == static_cast<std::size_t>(cols) - 1
                             ? "\n"
                             : " ");
  }
}

json rows_json(const std::vector<Int>& entries, int cols) {
  json rows = json::array();
  for (std::size_t k = 0; k < entries.size(); k += cols) {
    rows.push_back(std::vector<Int>(entries.begin() + k,
                                    entries.begin() + k + cols));
  }
  return rows;
}

std::vector<Int> rows_from_json(const json& rows, int want_rows,
                                int want_cols, const char* what) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(want_rows)) {
    throw std::invalid_argument(std::string("json: ") + what + " must have " +
                                std::to_string(want_rows) + " rows");
  }
  std::vector<Int> out;
  for (const json& row : rows) {
    if (!row.is_array() ||
        row.size() != static_cast<std::size_t>(want_cols)) {
      throw std::invalid_argument(std::string("json: ") + what +
                                  " rows must have " +
                                  std::to_string(want_cols) + " entries");
    }
    for (const json& v : row) out.push_back(v.get<Int>());
  }
  return out;
}

IntSeq seq_from_json(const json& j, const char* tag, int want) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(want)) {
    throw std::invalid_argument(std::string("json: ") + tag + " must have " +
                                std::to_string(want) + " entries");
  }
  IntSeq out;
  for (const json& v : j) out.push_back(v.get<Int>());
  return out;
}

struct HeaderInfo {
  DocKind kind;
  int m = 0;
  int n = 0;
};

int parse_header_dim(const std::string& token, const char* key,
                     std::size_t lineno) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw at_line(lineno, "expected " + prefix + "<int>, got " + token);
  }
  return static_cast<int>(parse_int(token.substr(prefix.size()), lineno));
}

DocKind kind_from_string(const std::string& s) {
  if (s == "labeling") return DocKind::labeling;
  if (s == "square-table") return DocKind::square_table;
  if (s == "table-pair") return DocKind::table_pair;
  if (s == "pair") return DocKind::pair;
  if (s == "quadruple") return DocKind::quadruple;
  throw std::invalid_argument("unknown document kind: " + s);
}

}  // namespace

const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::labeling: return "labeling";
    case DocKind::square_table: return "square-table";
    case DocKind::table_pair: return "table-pair";
    case DocKind::pair: return "pair";
    case DocKind::quadruple: return "quadruple";
  }
  return "?";
}

TableDocument make_document(Labeling l, std::string note) {
  TableDocument d;
  d.kind = DocKind::labeling;
  d.m = l.rows();
  d.n = l.cols();
  d.note = std::move(note);
  d.payload = std::move(l);
  return d;
}

TableDocument make_document(SquareTable t, std::string note) {
  TableDocument d;
  d.kind = DocKind::square_table;
  d.m = t.size();
  d.n = 2 * t.size();
  d.note = std::move(note);
  d.payload = std::move(t);
  return d;
}

TableDocument make_document(TablePair p, std::string note) {
  TableDocument d;
  d.kind = DocKind::table_pair;
  d.m = 2 * p.first.size();
  d.n = d.m;
  d.note = std::move(note);
  d.payload = std::move(p);
  return d;
}

TableDocument make_document(AdmissiblePair p, std::string note) {
  TableDocument d;
  d.kind = DocKind::pair;
  d.m = p.m();
  d.n = 2 * p.m();
  d.note = std::move(note);
  d.payload = std::move(p);
  return d;
}

TableDocument make_document(AdmissibleQuadruple q, std::string note) {
  TableDocument d;
  d.kind = DocKind::quadruple;
  d.m = 2 * q.m();
  d.n = d.m;
  d.note = std::move(note);
  d.payload = std::move(q);
  return d;
}

std::string to_text(const TableDocument& doc) {
  std::ostringstream os;
  os << "dmcycles v1 " << to_string(doc.kind) << " m=" << doc.m
     << " n=" << doc.n << "\n";
  if (!doc.note.empty()) {
    std::istringstream note(doc.note);
    std::string line;
    while (std::getline(note, line)) os << "# " << line << "\n";
  }
  switch (doc.kind) {
    case DocKind::labeling: {
      const auto& l = std::get<Labeling>(doc.payload);
      emit_rows(os, l.entries(), l.cols());
      break;
    }
    case DocKind::square_table: {
      const auto& t = std::get<SquareTable>(doc.payload);
      emit_rows(os, t.entries(), t.size());
      break;
    }
    case DocKind::table_pair: {
      const auto& p = std::get<TablePair>(doc.payload);
      emit_rows(os, p.first.entries(), p.first.size());
      os << "--\n";
      emit_rows(os, p.second.entries(), p.second.size());
      break;
    }
    case DocKind::pair: {
      const auto& p = std::get<AdmissiblePair>(doc.payload);
      emit_seq(os, "a", p.a);
      emit_seq(os, "b", p.b);
      break;
    }
    case DocKind::quadruple: {
      const auto& q = std::get<AdmissibleQuadruple>(doc.payload);
      emit_seq(os, "a", q.a);
      emit_seq(os, "b", q.b);
      emit_seq(os, "c", q.c);
      emit_seq(os, "d", q.d);
      break;
    }
  }
  return os.str();
}

std::string to_json(const TableDocument& doc) {
  json j;
  j["format"] = "dmcycles";
  j["version"] = 1;
  j["kind"] = to_string(doc.kind);
  j["m"] = doc.m;
  j["n"] = doc.n;
  if (!doc.note.empty()) j["note"] = doc.note;
  switch (doc.kind) {
    case DocKind::labeling: {
      const auto& l = std::get<Labeling>(doc.payload);
      j["rows"] = rows_json(l.entries(), l.cols());
      break;
    }
    case DocKind::square_table: {
      const auto& t = std::get<SquareTable>(doc.payload);
      j["rows"] = rows_json(t.entries(), t.size());
      break;
    }
    case DocKind::table_pair: {
      const auto& p = std::get<TablePair>(doc.payload);
      j["first"] = rows_json(p.first.entries(), p.first.size());
      j["second"] = rows_json(p.second.entries(), p.second.size());
      break;
    }
    case DocKind::pair: {
      const auto& p = std::get<AdmissiblePair>(doc.payload);
      j["a"] = p.a;
      j["b"] = p.b;
      break;
    }
    case DocKind::quadruple: {
      const auto& q = std::get<AdmissibleQuadruple>(doc.payload);
      j["a"] = q.a;
      j["b"] = q.b;
      j["c"] = q.c;
      j["d"] = q.d;
      break;
    }
  }
  return j.dump(2) + "\n";
}

namespace {

TableDocument parse_document_json(const std::string& input) {
  json j;
  try {
    j = json::parse(input);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
  try {
    if (j.at("format") != "dmcycles" || j.at("version") != 1) {
      throw std::invalid_argument("json: not a dmcycles v1 document");
    }
    TableDocument d;
    d.kind = kind_from_string(j.at("kind").get<std::string>());
    d.m = j.at("m").get<int>();
    d.n = j.at("n").get<int>();
    if (j.contains("note")) d.note = j.at("note").get<std::string>();
    switch (d.kind) {
      case DocKind::labeling:
        d.payload = Labeling(GridParams(d.m, d.n),
                             rows_from_json(j.at("rows"), d.m, d.n, "rows"));
        break;
      case DocKind::square_table:
        if (d.n != 2 * d.m) {
          throw std::invalid_argument("json: square-table needs n = 2m");
        }
        d.payload = SquareTable(
            d.m, rows_from_json(j.at("rows"), d.m, d.m, "rows"));
        break;
      case DocKind::table_pair: {
        if (d.n != d.m || d.m % 2 != 0) {
          throw std::invalid_argument("json: table-pair needs n = m even");
        }
        const int h = d.m / 2;
        d.payload = TablePair(
            SquareTable(h, rows_from_json(j.at("first"), h, h, "first")),
            SquareTable(h, rows_from_json(j.at("second"), h, h, "second")));
        break;
      }
      case DocKind::pair: {
        if (d.n != 2 * d.m) {
          throw std::invalid_argument("json: pair needs n = 2m");
        }
        AdmissiblePair p;
        p.a = seq_from_json(j.at("a"), "a", d.m);
        p.b = seq_from_json(j.at("b"), "b", d.m);
        d.payload = std::move(p);
        break;
      }
      case DocKind::quadruple: {
        if (d.n != d.m || d.m % 2 != 0) {
          throw std::invalid_argument("json: quadruple needs n = m even");
        }
        const int h = d.m / 2;
        AdmissibleQuadruple q;
        q.a = seq_from_json(j.at("a"), "a", h);
        q.b = seq_from_json(j.at("b"), "b", h);
        q.c = seq_from_json(j.at("c"), "c", h);
        q.d = seq_from_json(j.at("d"), "d", h);
        d.payload = std::move(q);
        break;
      }
    }
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

}  // namespace

TableDocument parse_document(const std::string& input) {
  const std::size_t first = input.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::invalid_argument("empty document");
  }
  if (input[first] == '{') return parse_document_json(input);

  std::istringstream in(input);
  std::string line;
  std::size_t lineno = 0;

  auto next_payload_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    if (required) throw at_line(lineno, "unexpected end of document");
    return false;
  };

  // header
  if (!next_payload_line(false)) throw std::invalid_argument("empty document");
  std::istringstream head(line);
  std::string magic, version, kind_word, m_word, n_word;
  if (!(head >> magic >> version >> kind_word >> m_word >> n_word) ||
      magic != "dmcycles" || version != "v1") {
    throw at_line(lineno, "expected header \"dmcycles v1 <kind> m=.. n=..\"");
  }
  TableDocument d;
  d.kind = kind_from_string(kind_word);
  d.m = parse_header_dim(m_word, "m", lineno);
  d.n = parse_header_dim(n_word, "n", lineno);

  // note lines
  bool have_line = next_payload_line(true);
  while (have_line && !line.empty() && line[0] == '#') {
    std::string text = line.substr(1);
    if (!text.empty() && text[0] == ' ') text = text.substr(1);
    d.note += d.note.empty() ? text : "\n" + text;
    have_line = next_payload_line(true);
  }

  auto read_rows = [&](int want_rows, int want_cols) {
    std::vector<Int> entries;
    for (int r = 0; r < want_rows; ++r) {
      if (r > 0) next_payload_line(true);
      const IntSeq row = parse_ints(line, lineno);
      if (row.size() != static_cast<std::size_t>(want_cols)) {
        throw at_line(lineno, "expected " + std::to_string(want_cols) +
                                  " entries in this row");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return entries;
  };

  try {
    switch (d.kind) {
      case DocKind::labeling:
        d.payload =
            Labeling(GridParams(d.m, d.n), read_rows(d.m, d.n));
        break;
      case DocKind::square_table:
        if (d.n != 2 * d.m) {
          throw at_line(lineno, "square-table needs n = 2m");
        }
        d.payload = SquareTable(d.m, read_rows(d.m, d.m));
        break;
      case DocKind::table_pair: {
        if (d.n != d.m || d.m % 2 != 0) {
          throw at_line(lineno, "table-pair needs n = m even");
        }
        const int h = d.m / 2;
        SquareTable first(h, read_rows(h, h));
        next_payload_line(true);
        if (line != "--") throw at_line(lineno, "expected \"--\" separator");
        next_payload_line(true);
        d.payload = TablePair(std::move(first), SquareTable(h, read_rows(h, h)));
        break;
      }
      case DocKind::pair: {
        if (d.n != 2 * d.m) throw at_line(lineno, "pair needs n = 2m");
        AdmissiblePair p;
        p.a = parse_tagged_seq(line, "a", lineno);
        next_payload_line(true);
        p.b = parse_tagged_seq(line, "b", lineno);
        if (p.a.size() != static_cast<std::size_t>(d.m) ||
            p.b.size() != p.a.size()) {
          throw at_line(lineno, "pair sequences must have length m");
        }
        d.payload = std::move(p);
        break;
      }
      case DocKind::quadruple: {
        if (d.n != d.m || d.m % 2 != 0) {
          throw at_line(lineno, "quadruple needs n = m even");
        }
        const std::size_t h = static_cast<std::size_t>(d.m) / 2;
        AdmissibleQuadruple q;
        q.a = parse_tagged_seq(line, "a", lineno);
        next_payload_line(true);
        q.b = parse_tagged_seq(line, "b", lineno);
        next_payload_line(true);
        q.c = parse_tagged_seq(line, "c", lineno);
        next_payload_line(true);
        q.d = parse_tagged_seq(line, "d", lineno);
        if (q.a.size() != h || q.b.size() != h || q.c.size() != h ||
            q.d.size() != h) {
          throw at_line(lineno, "quadruple sequences must have length m/2");
        }
        d.payload = std::move(q);
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    throw at_line(lineno, msg);
  }

  if (next_payload_line(false)) {
    throw at_line(lineno, "unexpected trailing content");
  }
  return d;
}

std::string census_to_text(const CensusResult& res) {
  std::ostringstream os;
  os << "dmcycles v1 census m=" << res.m << " count=" << res.count
     << (res.truncated ? " partial" : "") << "\n";
  for (const SetPair& p : res.pairs) os << to_line(p) << "\n";
  return os.str();
}

std::string census_to_json(const CensusResult& res) {
  json j;
  j["format"] = "dmcycles";
  j["version"] = 1;
  j["kind"] = "census";
  j["m"] = res.m;
  j["count"] = res.count;
  j["truncated"] = res.truncated;
  json pairs = json::array();
  for (const SetPair& p : res.pairs) {
    pairs.push_back(json{{"a", p.a}, {"b", p.b}});
  }
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

CensusListing parse_census(const std::string& input) {
  std::istringstream in(input);
  std::string line;
  std::size_t lineno = 0;
  CensusListing out;

  if (!std::getline(in, line)) throw std::invalid_argument("empty listing");
  ++lineno;
  std::istringstream head(line);
  std::string magic, version, kind_word, m_word, count_word, partial_word;
  if (!(head >> magic >> version >> kind_word >> m_word >> count_word) ||
      magic != "dmcycles" || version != "v1" || kind_word != "census") {
    throw at_line(lineno,
                  "expected header \"dmcycles v1 census m=.. count=..\"");
  }
  out.m = parse_header_dim(m_word, "m", lineno);
  out.count =
      static_cast<std::uint64_t>(parse_header_dim(count_word, "count", lineno));
  if (head >> partial_word) {
    if (partial_word != "partial") {
      throw at_line(lineno, "unexpected header token: " + partial_word);
    }
    out.truncated = true;
  }

  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.pairs.push_back(set_pair_from_line(line));
    } catch (const std::invalid_argument& e) {
      throw at_line(lineno, e.what());
    }
  }
  if (!out.pairs.empty() && out.pairs.size() != out.count) {
    throw std::invalid_argument("listing count does not match its pairs");
  }
  return out;
}

}  // namespace dmc
