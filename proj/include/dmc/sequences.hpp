#pragma once

#include <string>
#include <vector>

#include "dmc/tables.hpp"

namespace dmc {

// Length-m sequences (m odd) generating an m x 2m distance magic labeling.
// Admissibility: a odd with a_0 = 1, b even with b_0 = 0, elements within
// N_{2m^2} resp. {-2m^2..2m^2-2}, and the sums a_i + b_j realizing each
// magnitude 1, 3, ..., 2m^2-1 exactly once.
struct AdmissiblePair {
  IntSeq a;
  IntSeq b;

  int m() const { return static_cast<int>(a.size()); }

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) =
      default;
};

// Length-m sequences generating a 2m x 2m distance magic labeling.
// Admissibility: a, c odd with a_0 = c_0 = 1, b, d even with b_0 = 0,
// elements within N_{4m^2}, {-4m^2..4m^2-2}, {1..8m^2-1}, {-4m^2..4m^2-2m}
// respectively, and the sums a_i + b_j together with c_i + d_j realizing
// each magnitude 1, 3, ..., 4m^2-1 exactly once.
struct AdmissibleQuadruple {
  IntSeq a;
  IntSeq b;
  IntSeq c;
  IntSeq d;

  int m() const { return static_cast<int>(a.size()); }

  friend bool operator==(const AdmissibleQuadruple&,
                         const AdmissibleQuadruple&) = default;
};

enum class SeqFault { none, length, parity, anchor, coverage, range };

const char* to_string(SeqFault f);

struct SeqCheck {
  bool ok = false;
  SeqFault fault = SeqFault::none;
  std::string detail;
  // Coverage status is reported even when a later range check fails, so
  // callers can flag inputs that are sum-complete but out of range.
  bool coverage_holds = false;

  explicit operator bool() const { return ok; }
};

// Checks run in the order length, parity, anchor, coverage, range; the
// first failing check is reported.
SeqCheck validate_pair(const AdmissiblePair& p);
SeqCheck validate_quadruple(const AdmissibleQuadruple& q);

// The two seed families, admissible for every odd m >= 3:
//   type1: a_i = 1 + 2i,          b_i = 2im
//   type2: a_i = (-1)^i (1 + 2i), b_i = (-1)^i (1 + 2i) m - m
enum class PairKind { type1, type2 };

AdmissiblePair basic_pair(int m, PairKind kind);

// The involution (a, b) -> (b + 1, a - 1) (elementwise). Preserves
// admissibility.
AdmissiblePair tilde(const AdmissiblePair& p);

// A derived pair: start from a seed family, negate-and-shift the entries
// of one side at the chosen indices (1..m-1), optionally apply tilde.
// The flip of entry v is:
//   type1:  b: v -> -v - 2m      a: v -> -v - 2(m-1)m
//   type2:  b: v -> -v - 2       a: v -> -v
struct DerivationSpec {
  PairKind base = PairKind::type1;
  enum class Side { none, a, b } side = Side::none;
  std::vector<int> flip_indices;
  bool apply_tilde = false;
};

AdmissiblePair derive(const DerivationSpec& spec, int m);

// A pair in set form: both sequences sorted ascending. Reordering
// a_1..a_{m-1} and b_1..b_{m-1} preserves admissibility, so the set form
// is the natural unit of counting.
struct SetPair {
  IntSeq a;
  IntSeq b;

  friend bool operator==(const SetPair&, const SetPair&) = default;
  friend auto operator<=>(const SetPair&, const SetPair&) = default;
};

SetPair canonical_sets(const AdmissiblePair& p);

// One-line form "a: <values> b: <values>", the unit of census listings
// and checkpoint files.
std::string to_line(const SetPair& s);
SetPair set_pair_from_line(const std::string& line);

// Back to sequence form: 1 first then the rest of a ascending, 0 first
// then the rest of b ascending.
AdmissiblePair anchored(const SetPair& s);

// Every pair reachable from the seed families by flips and tilde,
// deduplicated in set form, each returned anchored, sorted by set form.
// The 4(2^m - 1) derivations collapse to 2(2^{m+1} - 3) distinct set
// forms: exactly two of them arise from both families.
std::vector<AdmissiblePair> all_derived_pairs(int m);

// How many distance magic labelings of C_m x C_2m the derived pairs
// account for: 4m^2 (2^{m+1} - 3) ((m-1)!)^2. Overflows 64 bits from
// m = 11 on, hence the decimal string.
struct LabelingBound {
  bool fits_int64 = false;
  Int value = 0;          // meaningful only when fits_int64
  std::string decimal;
};

LabelingBound lower_bound(int m);

// Exact count given the number of admissible pairs of sets:
// 2m^2 * pair_sets * ((m-1)!)^2.
LabelingBound exact_count(int m, Int pair_sets);

// The seed quadruple a_i = c_i = 1 + 2i, b_i = 2im, d_i = 2im + 2m^2.
AdmissibleQuadruple example_quadruple(int m);

}  // namespace dmc
