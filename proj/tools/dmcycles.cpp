// Command line front end: classify torus grids, build and verify distance
// magic labelings, extract generating sequences, enumerate the census of
// admissible pairs, and report labeling counts.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmc/assembler.hpp"
#include "dmc/characters.hpp"
#include "dmc/document.hpp"

namespace {

using nlohmann::json;
using namespace dmc;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

const char* violation_kind(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::foreign_label: return "foreign-label";
    case Violation::Kind::duplicate_label: return "duplicate-label";
    case Violation::Kind::nonzero_weight: return "nonzero-weight";
  }
  return "?";
}

json char_list(const std::vector<CharIndex>& cs) {
  json out = json::array();
  for (const CharIndex& c : cs) out.push_back({c.a, c.b});
  return out;
}

// ---- classify ---------------------------------------------------------

struct ClassifyOpts {
  int m = 0;
  int n = 0;
  bool show_admissible = false;
  bool as_json = false;
};

int run_classify(const ClassifyOpts& o) {
  const GridParams g(o.m, o.n);
  const bool magic = classify(o.m, o.n);
  const FeasibilityVerdict verdict = spectral_feasible(g);

  if (o.as_json) {
    json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["distance_magic"] = magic;
    j["feasible"] = verdict.feasible;
    j["admissible_count"] = verdict.admissible.size();
    if (o.show_admissible) j["admissible"] = char_list(verdict.admissible);
    if (verdict.witness) {
      j["witness"] = {{verdict.witness->first.i, verdict.witness->first.j},
                      {verdict.witness->second.i, verdict.witness->second.j}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "distance-magic: " << yn(magic) << "\n";
    if (verdict.feasible) {
      std::cout << "spectral-feasibility: feasible ("
                << verdict.admissible.size() << " admissible characters)\n";
    } else if (verdict.admissible.empty()) {
      std::cout << "spectral-feasibility: infeasible (no admissible "
                   "characters)\n";
    } else {
      const auto& [e1, e2] = *verdict.witness;
      std::cout << "spectral-feasibility: infeasible (all admissible "
                << "characters agree on (" << e1.i << "," << e1.j << ") and ("
                << e2.i << "," << e2.j << "))\n";
    }
    if (o.show_admissible) {
      for (const CharIndex& c : verdict.admissible) {
        std::cout << "(" << c.a << "," << c.b << ")\n";
      }
    }
  }
  return magic ? 0 : 1;
}

// ---- admissible-set ----------------------------------------------------

struct AdmissibleOpts {
  int m = 0;
  int n = 0;
  bool as_json = false;
};

int run_admissible(const AdmissibleOpts& o) {
  const GridParams g(o.m, o.n);
  const std::vector<CharIndex> cs = admissible_set(g);
  if (o.as_json) {
    json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["count"] = cs.size();
    j["admissible"] = char_list(cs);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "count: " << cs.size() << "\n";
    for (const CharIndex& c : cs) {
      std::cout << "(" << c.a << "," << c.b << ")\n";
    }
  }
  return 0;
}

// ---- construct ----------------------------------------------------------

struct ConstructOpts {
  bool quadruple = false;
  int m = 0;
  std::string builtin;
  bool apply_tilde = false;
  std::vector<int> flip_a;
  std::vector<int> flip_b;
  std::string from;
  std::string emit = "labeling";
  std::string out;
  bool as_json = false;
};

TableDocument construct_pair_doc(const ConstructOpts& o) {
  AdmissiblePair p;
  std::string note;
  if (!o.from.empty()) {
    TableDocument d = parse_document(read_input(o.from));
    if (d.kind != DocKind::pair) {
      throw std::invalid_argument("construct pair --from needs a pair "
                                  "document");
    }
    p = std::get<AdmissiblePair>(d.payload);
    note = "from pair document";
  } else {
    DerivationSpec spec;
    spec.base = o.builtin == "type2" ? PairKind::type2 : PairKind::type1;
    spec.apply_tilde = o.apply_tilde;
    std::ostringstream n;
    n << "pair " << o.builtin << " m=" << o.m;
    if (!o.flip_a.empty()) {
      spec.side = DerivationSpec::Side::a;
      spec.flip_indices = o.flip_a;
      n << ", a-flips";
    } else if (!o.flip_b.empty()) {
      spec.side = DerivationSpec::Side::b;
      spec.flip_indices = o.flip_b;
      n << ", b-flips";
    }
    if (o.apply_tilde) n << ", tilde";
    p = derive(spec, o.m);
    note = n.str();
  }

  if (o.emit == "sequences") return make_document(p, note);
  if (o.emit == "table") {
    const int m = p.m();
    const SeqCheck chk = validate_pair(p);
    if (!chk) {
      throw std::invalid_argument(std::string("inadmissible pair (") +
                                  to_string(chk.fault) + "): " + chk.detail);
    }
    return make_document(table_sum(cyclic_table(p.a, (m - 1) / 2),
                                   cyclic_table(p.b, (m + 1) / 2)),
                         note);
  }
  return make_document(build_from_pair(p), note);
}

TableDocument construct_quadruple_doc(const ConstructOpts& o) {
  AdmissibleQuadruple q;
  std::string note;
  if (!o.from.empty()) {
    TableDocument d = parse_document(read_input(o.from));
    if (d.kind != DocKind::quadruple) {
      throw std::invalid_argument("construct quadruple --from needs a "
                                  "quadruple document");
    }
    q = std::get<AdmissibleQuadruple>(d.payload);
    note = "from quadruple document";
  } else {
    q = example_quadruple(o.m);
    std::ostringstream n;
    n << "quadruple example m=" << o.m;
    note = n.str();
  }

  if (o.emit == "sequences") return make_document(q, note);
  if (o.emit == "table") {
    const int m = q.m();
    const SeqCheck chk = validate_quadruple(q);
    if (!chk) {
      throw std::invalid_argument(std::string("inadmissible quadruple (") +
                                  to_string(chk.fault) + "): " + chk.detail);
    }
    return make_document(
        TablePair(table_sum(cyclic_table(q.a, 1), cyclic_table(q.b, m - 1)),
                  table_sum(cyclic_table(q.c, 1), cyclic_table(q.d, m - 1))),
        note);
  }
  return make_document(build_from_quadruple(q), note);
}

int run_construct(const ConstructOpts& o) {
  const TableDocument doc =
      o.quadruple ? construct_quadruple_doc(o) : construct_pair_doc(o);
  write_output(o.out, o.as_json ? to_json(doc) : to_text(doc));
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyOpts {
  std::string file;
  bool all_violations = false;
  bool as_json = false;
};

int verify_labeling_doc(const Labeling& input, const VerifyOpts& o) {
  const CanonicalLabeling canon = canonical_orientation(input);
  const Labeling& l = canon.labeling;
  const int m = l.rows();
  const int n = l.cols();
  const VerificationReport rep = verify_distance_magic(l, o.all_violations);

  const bool col_shape = n == 2 * m && m % 2 == 1;
  const bool diag_shape = n == m && m % 2 == 0;
  bool col_antipodal = false, shift_ok = false;
  bool diag_antipodal = false, diag_ok = false;
  if (rep.magic() && col_shape) {
    col_antipodal = antipodal_check(l, Antipodal::column_half);
    shift_ok = true;
    const SquareTable t = reduce(l);
    for (int s = 0; s < m; ++s) shift_ok = shift_ok && check_shift_identity(t, s);
  }
  if (rep.magic() && diag_shape) {
    diag_antipodal = antipodal_check(l, Antipodal::diagonal_half);
    diag_ok = true;
    for (int s = 0; s < n; ++s) diag_ok = diag_ok && check_diag_identity(l, s);
  }

  if (o.as_json) {
    json j;
    j["kind"] = "labeling";
    j["m"] = m;
    j["n"] = n;
    j["transposed"] = canon.transposed;
    j["bijection"] = rep.is_bijection;
    j["zero_weight"] = rep.zero_weight;
    j["magic"] = rep.magic();
    if (rep.magic() && col_shape) {
      j["column_antipodal"] = col_antipodal;
      j["shift_identity"] = shift_ok;
    }
    if (rep.magic() && diag_shape) {
      j["diagonal_antipodal"] = diag_antipodal;
      j["diagonal_identity"] = diag_ok;
    }
    json vs = json::array();
    for (const Violation& v : rep.violations) {
      vs.push_back({{"kind", violation_kind(v.kind)},
                    {"i", v.pos.i},
                    {"j", v.pos.j},
                    {"value", v.value}});
    }
    if (!o.all_violations && rep.first_violation) {
      const Violation& v = *rep.first_violation;
      vs.push_back({{"kind", violation_kind(v.kind)},
                    {"i", v.pos.i},
                    {"j", v.pos.j},
                    {"value", v.value}});
    }
    j["violations"] = std::move(vs);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: labeling\ngraph: C_" << m << " x C_" << n << "\n";
    if (canon.transposed) std::cout << "transposed: yes\n";
    std::cout << "bijection: " << yn(rep.is_bijection) << "\n"
              << "zero-weight: " << yn(rep.zero_weight) << "\n"
              << "magic: " << yn(rep.magic()) << "\n";
    if (rep.magic() && col_shape) {
      std::cout << "column-antipodal: " << yn(col_antipodal) << "\n"
                << "shift-identity: " << yn(shift_ok) << "\n";
    }
    if (rep.magic() && diag_shape) {
      std::cout << "diagonal-antipodal: " << yn(diag_antipodal) << "\n"
                << "diagonal-identity: " << yn(diag_ok) << "\n";
    }
    if (o.all_violations && !rep.violations.empty()) {
      std::cout << "violations:\n";
      for (const Violation& v : rep.violations) {
        std::cout << "  " << v.describe() << "\n";
      }
    } else if (rep.first_violation) {
      std::cout << "first-violation: " << rep.first_violation->describe()
                << "\n";
    }
  }
  return rep.magic() ? 0 : 1;
}

int verify_check(const char* what, const SeqCheck& chk, bool as_json) {
  if (as_json) {
    json j;
    j["kind"] = what;
    j["admissible"] = chk.ok;
    if (!chk.ok) {
      j["fault"] = to_string(chk.fault);
      j["detail"] = chk.detail;
      j["coverage_holds"] = chk.coverage_holds;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: " << what << "\n"
              << "admissible: " << yn(chk.ok) << "\n";
    if (!chk.ok) {
      std::cout << "fault: " << to_string(chk.fault) << "\n"
                << "detail: " << chk.detail << "\n";
      if (chk.fault == SeqFault::range && chk.coverage_holds) {
        std::cout << "note: the sums cover the full label range; only the "
                     "stated element ranges fail\n";
      }
    }
  }
  return chk.ok ? 0 : 1;
}

int verify_bool(const char* what, bool ok, bool as_json) {
  if (as_json) {
    json j;
    j["kind"] = what;
    j["distance_magic"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: " << what << "\n"
              << "distance-magic: " << yn(ok) << "\n";
  }
  return ok ? 0 : 1;
}

int run_verify(const VerifyOpts& o) {
  const TableDocument doc = parse_document(read_input(o.file));
  switch (doc.kind) {
    case DocKind::labeling:
      return verify_labeling_doc(std::get<Labeling>(doc.payload), o);
    case DocKind::square_table:
      return verify_bool("square-table",
                         is_dm_table(std::get<SquareTable>(doc.payload)),
                         o.as_json);
    case DocKind::table_pair:
      return verify_bool("table-pair",
                         is_dm_pair(std::get<TablePair>(doc.payload)),
                         o.as_json);
    case DocKind::pair:
      return verify_check("pair",
                          validate_pair(std::get<AdmissiblePair>(doc.payload)),
                          o.as_json);
    case DocKind::quadruple:
      return verify_check(
          "quadruple",
          validate_quadruple(std::get<AdmissibleQuadruple>(doc.payload)),
          o.as_json);
  }
  throw InternalError("unhandled document kind");
}

// ---- extract ---------------------------------------------------------------

struct ExtractOpts {
  std::string file;
  std::string out;
  bool as_json = false;
};

int run_extract(const ExtractOpts& o) {
  const TableDocument doc = parse_document(read_input(o.file));
  if (doc.kind != DocKind::labeling) {
    throw std::invalid_argument("extract needs a labeling document");
  }
  const CanonicalLabeling canon =
      canonical_orientation(std::get<Labeling>(doc.payload));
  if (!verify_distance_magic(canon.labeling).magic()) {
    std::cerr << "error: labeling is not distance magic\n";
    return 1;
  }
  auto [l, shift] = normalize_origin(canon.labeling);

  std::ostringstream note;
  note << "extracted from labeling";
  if (canon.transposed) note << ", transposed";
  note << ", origin shift (" << shift.di << "," << shift.dj << ")";
  std::cerr << "origin shift: (" << shift.di << "," << shift.dj << ")"
            << (canon.transposed ? ", transposed" : "") << "\n";

  const int m = l.rows();
  const int n = l.cols();
  TableDocument out_doc;
  if (n == 2 * m && m % 2 == 1) {
    out_doc = make_document(extract_pair(l), note.str());
  } else if (n == m && m % 2 == 0 && (m / 2) % 2 == 1) {
    out_doc = make_document(extract_quadruple(l), note.str());
  } else {
    throw std::invalid_argument("no sequence extraction for this shape");
  }
  write_output(o.out, o.as_json ? to_json(out_doc) : to_text(out_doc));
  return 0;
}

// ---- enumerate -----------------------------------------------------------

struct EnumeratePairsOpts {
  int m = 0;
  bool count_only = false;
  std::uint64_t limit = 0;
  int jobs = 1;
  std::string checkpoint;
  std::string out;
  bool as_json = false;
  bool progress = false;
};

int run_enumerate_pairs(const EnumeratePairsOpts& o) {
  CensusOptions opts;
  opts.count_only = o.count_only;
  opts.limit = o.limit;
  opts.jobs = o.jobs;
  opts.checkpoint_path = o.checkpoint;
  if (o.progress) {
    opts.on_progress = [](int done, int total, std::uint64_t count) {
      std::cerr << "unit " << done << "/" << total << ", " << count
                << " pairs so far\n";
    };
  }
  const CensusResult res = enumerate_pair_sets(o.m, opts);
  write_output(o.out, o.as_json ? census_to_json(res) : census_to_text(res));
  std::cerr << "census m=" << res.m << ": " << res.count << " pairs"
            << (res.truncated ? " (partial)" : "") << ", "
            << res.nodes_explored << " nodes, " << res.elapsed.count()
            << " ms\n";
  return 0;
}

struct EnumerateLabelingsOpts {
  int m = 0;
  int n = 0;
  std::string order = "forward";
  bool as_json = false;
};

int run_enumerate_labelings(const EnumerateLabelingsOpts& o) {
  const FillOrder order =
      o.order == "reverse" ? FillOrder::reverse : FillOrder::forward;
  const std::uint64_t count = enumerate_labelings_bruteforce(o.m, o.n, order);
  if (o.as_json) {
    json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["count"] = count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "count: " << count << "\n";
  }
  return 0;
}

// ---- bound ------------------------------------------------------------------

struct BoundOpts {
  int m = 0;
  std::string census_file;
  bool exact = false;
  int jobs = 1;
  bool as_json = false;
};

int run_bound(const BoundOpts& o) {
  const LabelingBound lo = lower_bound(o.m);

  bool have_sets = false;
  std::uint64_t sets = 0;
  if (!o.census_file.empty()) {
    const CensusListing listing = parse_census(read_input(o.census_file));
    if (listing.m != o.m) {
      throw std::invalid_argument("census listing is for a different m");
    }
    if (listing.truncated) {
      throw std::invalid_argument("census listing is partial; the exact "
                                  "count needs a complete enumeration");
    }
    sets = listing.count;
    have_sets = true;
  } else if (o.exact) {
    CensusOptions opts;
    opts.count_only = true;
    opts.jobs = o.jobs;
    sets = enumerate_pair_sets(o.m, opts).count;
    have_sets = true;
  }

  if (o.as_json) {
    json j;
    j["m"] = o.m;
    j["lower_bound"] = lo.decimal;
    j["lower_bound_fits_int64"] = lo.fits_int64;
    if (have_sets) {
      j["pair_sets"] = sets;
      j["exact_count"] = exact_count(o.m, static_cast<Int>(sets)).decimal;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m: " << o.m << "\n"
              << "lower-bound: " << lo.decimal << "\n";
    if (have_sets) {
      std::cout << "pair-sets: " << sets << "\n"
                << "exact-count: "
                << exact_count(o.m, static_cast<Int>(sets)).decimal << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance magic labelings of torus grids C_m x C_n"};
  app.require_subcommand(1);

  const CLI::Validator odd_side(
      [](std::string& input) -> std::string {
        try {
          const long v = std::stol(input);
          if (v >= 3 && v % 2 == 1) return {};
        } catch (const std::exception&) {
        }
        return "must be odd and at least 3";
      },
      "ODD");
  const CLI::Validator side_range = CLI::Range(3, 1 << 20);

  ClassifyOpts classify_opts;
  auto* cmd_classify =
      app.add_subcommand("classify", "is C_m x C_n distance magic?");
  cmd_classify->add_option("m", classify_opts.m, "first cycle length")
      ->required()
      ->check(side_range);
  cmd_classify->add_option("n", classify_opts.n, "second cycle length")
      ->required()
      ->check(side_range);
  cmd_classify->add_flag("--show-admissible", classify_opts.show_admissible,
                         "list the admissible characters");
  cmd_classify->add_flag("--json", classify_opts.as_json, "JSON output");

  AdmissibleOpts adm_opts;
  auto* cmd_adm = app.add_subcommand(
      "admissible-set", "characters whose connection-set sum vanishes");
  cmd_adm->add_option("m", adm_opts.m, "first cycle length")
      ->required()
      ->check(side_range);
  cmd_adm->add_option("n", adm_opts.n, "second cycle length")
      ->required()
      ->check(side_range);
  cmd_adm->add_flag("--json", adm_opts.as_json, "JSON output");

  ConstructOpts con_opts;
  auto* cmd_construct =
      app.add_subcommand("construct", "build a distance magic labeling");
  auto* con_pair = cmd_construct->add_subcommand(
      "pair", "from sequences for C_m x C_2m, m odd");
  auto* con_quad = cmd_construct->add_subcommand(
      "quadruple", "from sequences for C_2m x C_2m, m odd");
  for (CLI::App* sub : {con_pair, con_quad}) {
    auto* m_opt = sub->add_option("--m", con_opts.m, "sequence length")
                      ->check(odd_side);
    auto* from = sub->add_option("--from", con_opts.from,
                                 "read the sequences from a document "
                                 "(\"-\" for stdin)");
    from->excludes(m_opt);
    m_opt->excludes(from);
    sub->add_option("--emit", con_opts.emit,
                    "what to write: labeling, sequences or table")
        ->check(CLI::IsMember({"labeling", "sequences", "table"}));
    sub->add_option("--out", con_opts.out, "output file (default stdout)");
    sub->add_flag("--json", con_opts.as_json, "JSON output");
  }
  con_pair
      ->add_option("--builtin", con_opts.builtin,
                   "seed family: type1 or type2")
      ->check(CLI::IsMember({"type1", "type2"}))
      ->default_str("type1");
  con_pair->add_flag("--tilde", con_opts.apply_tilde,
                     "apply the (a,b) -> (b+1, a-1) involution");
  auto* fa = con_pair->add_option("--flip-a", con_opts.flip_a,
                                  "indices in 1..m-1 to flip in a")
                 ->delimiter(',');
  auto* fb = con_pair->add_option("--flip-b", con_opts.flip_b,
                                  "indices in 1..m-1 to flip in b")
                 ->delimiter(',');
  fa->excludes(fb);
  fb->excludes(fa);

  VerifyOpts ver_opts;
  auto* cmd_verify = app.add_subcommand(
      "verify", "check a document (labeling, table(s) or sequences)");
  cmd_verify->add_option("file", ver_opts.file, "document (\"-\" for stdin)")
      ->required();
  cmd_verify->add_flag("--all-violations", ver_opts.all_violations,
                       "report every violation, not just the first");
  cmd_verify->add_flag("--json", ver_opts.as_json, "JSON output");

  ExtractOpts ext_opts;
  auto* cmd_extract = app.add_subcommand(
      "extract", "recover generating sequences from a magic labeling");
  cmd_extract->add_option("file", ext_opts.file, "labeling document")
      ->required();
  cmd_extract->add_option("--out", ext_opts.out, "output file");
  cmd_extract->add_flag("--json", ext_opts.as_json, "JSON output");

  EnumeratePairsOpts enum_opts;
  EnumerateLabelingsOpts lab_opts;
  auto* cmd_enum = app.add_subcommand("enumerate", "exhaustive searches");
  auto* enum_pairs =
      cmd_enum->add_subcommand("pairs", "census of admissible pairs of sets");
  enum_pairs->add_option("--m", enum_opts.m, "sequence length")
      ->required()
      ->check(odd_side);
  enum_pairs->add_flag("--count-only", enum_opts.count_only,
                       "print the count, not the members");
  enum_pairs->add_option("--limit", enum_opts.limit,
                         "stop after this many pairs (partial result)");
  enum_pairs->add_option("--jobs", enum_opts.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  enum_pairs->add_option("--checkpoint", enum_opts.checkpoint,
                         "resumable progress file");
  enum_pairs->add_option("--out", enum_opts.out, "output file");
  enum_pairs->add_flag("--json", enum_opts.as_json, "JSON output");
  enum_pairs->add_flag("--progress", enum_opts.progress,
                       "per-unit progress on stderr");
  auto* enum_labelings = cmd_enum->add_subcommand(
      "labelings", "count all labelings of a small grid directly");
  enum_labelings->add_option("--m", lab_opts.m, "first cycle length")
      ->required()
      ->check(side_range);
  enum_labelings->add_option("--n", lab_opts.n, "second cycle length")
      ->required()
      ->check(side_range);
  enum_labelings
      ->add_option("--order", lab_opts.order, "free-cell fill order")
      ->check(CLI::IsMember({"forward", "reverse"}));
  enum_labelings->add_flag("--json", lab_opts.as_json, "JSON output");

  BoundOpts bound_opts;
  auto* cmd_bound = app.add_subcommand(
      "bound", "how many labelings of C_m x C_2m are known / exist");
  cmd_bound->add_option("--m", bound_opts.m, "sequence length")
      ->required()
      ->check(odd_side);
  auto* census_opt = cmd_bound->add_option(
      "--census", bound_opts.census_file, "census listing for the exact count");
  cmd_bound->add_flag("--exact", bound_opts.exact,
                      "run the census now for the exact count")
      ->excludes(census_opt);
  cmd_bound->add_option("--jobs", bound_opts.jobs, "worker threads for --exact")
      ->check(CLI::Range(1, 256));
  cmd_bound->add_flag("--json", bound_opts.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_classify->parsed()) return run_classify(classify_opts);
    if (cmd_adm->parsed()) return run_admissible(adm_opts);
    if (cmd_construct->parsed()) {
      if (!con_pair->parsed() && !con_quad->parsed()) {
        std::cerr << "error: construct needs a pair or quadruple "
                     "subcommand\n";
        return 2;
      }
      if (con_opts.from.empty() && con_opts.m == 0) {
        std::cerr << "error: construct needs --m or --from\n";
        return 2;
      }
      if (con_opts.builtin.empty()) con_opts.builtin = "type1";
      con_opts.quadruple = con_quad->parsed();
      return run_construct(con_opts);
    }
    if (cmd_verify->parsed()) return run_verify(ver_opts);
    if (cmd_extract->parsed()) return run_extract(ext_opts);
    if (cmd_enum->parsed()) {
      if (enum_pairs->parsed()) return run_enumerate_pairs(enum_opts);
      if (enum_labelings->parsed()) return run_enumerate_labelings(lab_opts);
      std::cerr << "error: enumerate needs a pairs or labelings "
                   "subcommand\n";
      return 2;
    }
    if (cmd_bound->parsed()) return run_bound(bound_opts);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
