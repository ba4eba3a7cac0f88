#include "dmc/sequences.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace dmc {
namespace {

using boost::multiprecision::cpp_int;

std::string seq_name(int which) { return std::string(1, "abcd"[which]); }

bool parity_ok(const IntSeq& v, int which, Int want_odd, SeqCheck& chk) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (modl(v[i], 2) != want_odd) {
      std::ostringstream os;
      os << seq_name(which) << "[" << i << "] = " << v[i] << " has the wrong "
         << "parity";
      chk.fault = SeqFault::parity;
      chk.detail = os.str();
      return false;
    }
  }
  return true;
}

bool anchor_ok(const IntSeq& v, int which, Int want, SeqCheck& chk) {
  if (v[0] != want) {
    std::ostringstream os;
    os << seq_name(which) << "[0] = " << v[0] << ", want " << want;
    chk.fault = SeqFault::anchor;
    chk.detail = os.str();
    return false;
  }
  return true;
}

bool range_ok(const IntSeq& v, int which, Int lo, Int hi, SeqCheck& chk) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi) {
      std::ostringstream os;
      os << seq_name(which) << "[" << i << "] = " << v[i] << " outside ["
         << lo << ", " << hi << "]";
      chk.fault = SeqFault::range;
      chk.detail = os.str();
      return false;
    }
  }
  return true;
}

// The sums x + y over all listed (left, right) families must realize each
// magnitude 1, 3, ..., bound exactly once.
bool sums_cover(
    const std::vector<std::pair<const IntSeq*, const IntSeq*>>& families,
    Int bound, std::string& why) {
  std::unordered_set<Int> mags;
  for (const auto& [left, right] : families) {
    for (Int x : *left) {
      for (Int y : *right) {
        const Int k = std::abs(x + y);
        if (k > bound || k % 2 == 0 || !mags.insert(k).second) {
          std::ostringstream os;
          os << "sum " << x << " + " << y << " breaks the cover";
          why = os.str();
          return false;
        }
      }
    }
  }
  return true;  // count is forced: families contribute (bound+1)/2 sums
}

LabelingBound bound_from(const cpp_int& v) {
  LabelingBound out;
  out.decimal = v.str();
  if (v <= std::numeric_limits<Int>::max()) {
    out.fits_int64 = true;
    out.value = v.convert_to<Int>();
  }
  return out;
}

cpp_int factorial(int k) {
  cpp_int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void require_odd_m(int m) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("m must be odd and at least 3");
  }
}

}  // namespace

const char* to_string(SeqFault f) {
  switch (f) {
    case SeqFault::none: return "none";
    case SeqFault::length: return "length";
    case SeqFault::parity: return "parity";
    case SeqFault::anchor: return "anchor";
    case SeqFault::coverage: return "coverage";
    case SeqFault::range: return "range";
  }
  return "?";
}

SeqCheck validate_pair(const AdmissiblePair& p) {
  SeqCheck chk;
  const int m = p.m();
  if (m < 3 || m % 2 == 0 || p.b.size() != p.a.size()) {
    chk.fault = SeqFault::length;
    chk.detail = "need two sequences of equal odd length >= 3";
    return chk;
  }
  const Int nn = 2 * static_cast<Int>(m) * m;

  std::string why;
  chk.coverage_holds = sums_cover({{&p.a, &p.b}}, nn - 1, why);

  if (!parity_ok(p.a, 0, 1, chk)) return chk;
  if (!parity_ok(p.b, 1, 0, chk)) return chk;
  if (!anchor_ok(p.a, 0, 1, chk)) return chk;
  if (!anchor_ok(p.b, 1, 0, chk)) return chk;
  if (!chk.coverage_holds) {
    chk.fault = SeqFault::coverage;
    chk.detail = why;
    return chk;
  }
  if (!range_ok(p.a, 0, 1 - nn, nn - 1, chk)) return chk;
  if (!range_ok(p.b, 1, -nn, nn - 2, chk)) return chk;

  chk.ok = true;
  return chk;
}

SeqCheck validate_quadruple(const AdmissibleQuadruple& q) {
  SeqCheck chk;
  const int m = q.m();
  if (m < 3 || m % 2 == 0 || q.b.size() != q.a.size() ||
      q.c.size() != q.a.size() || q.d.size() != q.a.size()) {
    chk.fault = SeqFault::length;
    chk.detail = "need four sequences of equal odd length >= 3";
    return chk;
  }
  const Int nn = 4 * static_cast<Int>(m) * m;

  std::string why;
  chk.coverage_holds =
      sums_cover({{&q.a, &q.b}, {&q.c, &q.d}}, nn - 1, why);

  if (!parity_ok(q.a, 0, 1, chk)) return chk;
  if (!parity_ok(q.b, 1, 0, chk)) return chk;
  if (!parity_ok(q.c, 2, 1, chk)) return chk;
  if (!parity_ok(q.d, 3, 0, chk)) return chk;
  if (!anchor_ok(q.a, 0, 1, chk)) return chk;
  if (!anchor_ok(q.b, 1, 0, chk)) return chk;
  if (!anchor_ok(q.c, 2, 1, chk)) return chk;
  if (!chk.coverage_holds) {
    chk.fault = SeqFault::coverage;
    chk.detail = why;
    return chk;
  }
  if (!range_ok(q.a, 0, 1 - nn, nn - 1, chk)) return chk;
  if (!range_ok(q.b, 1, -nn, nn - 2, chk)) return chk;
  if (!range_ok(q.c, 2, 1, 2 * nn - 1, chk)) return chk;
  if (!range_ok(q.d, 3, -nn, nn - 2 * m, chk)) return chk;

  chk.ok = true;
  return chk;
}

AdmissiblePair basic_pair(int m, PairKind kind) {
  require_odd_m(m);
  AdmissiblePair p;
  p.a.reserve(m);
  p.b.reserve(m);
  for (Int i = 0; i < m; ++i) {
    if (kind == PairKind::type1) {
      p.a.push_back(1 + 2 * i);
      p.b.push_back(2 * i * m);
    } else {
      const Int sign = i % 2 == 0 ? 1 : -1;
      p.a.push_back(sign * (1 + 2 * i));
      p.b.push_back(sign * (1 + 2 * i) * m - m);
    }
  }
  return p;
}

AdmissiblePair tilde(const AdmissiblePair& p) {
  AdmissiblePair t;
  t.a.reserve(p.b.size());
  t.b.reserve(p.a.size());
  for (Int y : p.b) t.a.push_back(y + 1);
  for (Int x : p.a) t.b.push_back(x - 1);
  return t;
}

AdmissiblePair derive(const DerivationSpec& spec, int m) {
  AdmissiblePair p = basic_pair(m, spec.base);
  for (int i : spec.flip_indices) {
    if (i < 1 || i >= m) {
      throw std::invalid_argument("flip indices must lie in 1..m-1");
    }
    if (spec.side == DerivationSpec::Side::b) {
      p.b[i] = -p.b[i] - (spec.base == PairKind::type1 ? 2 * m : 2);
    } else if (spec.side == DerivationSpec::Side::a) {
      p.a[i] = spec.base == PairKind::type1
                   ? -p.a[i] - 2 * static_cast<Int>(m - 1) * m
                   : -p.a[i];
    } else {
      throw std::invalid_argument("flip indices given without a side");
    }
  }
  return spec.apply_tilde ? tilde(p) : p;
}

SetPair canonical_sets(const AdmissiblePair& p) {
  SetPair s{p.a, p.b};
  std::sort(s.a.begin(), s.a.end());
  std::sort(s.b.begin(), s.b.end());
  return s;
}

std::string to_line(const SetPair& s) {
  std::ostringstream os;
  os << "a:";
  for (Int x : s.a) os << " " << x;
  os << " b:";
  for (Int y : s.b) os << " " << y;
  return os.str();
}

SetPair set_pair_from_line(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  if (!(is >> tag) || tag != "a:") {
    throw std::invalid_argument("pair line must start with \"a:\"");
  }
  SetPair s;
  std::string word;
  bool in_b = false;
  while (is >> word) {
    if (word == "b:") {
      if (in_b) throw std::invalid_argument("two b: markers in pair line");
      in_b = true;
      continue;
    }
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(word, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in pair line: " + word);
    }
    if (pos != word.size()) {
      throw std::invalid_argument("bad integer in pair line: " + word);
    }
    (in_b ? s.b : s.a).push_back(v);
  }
  if (!in_b || s.a.empty() || s.b.empty()) {
    throw std::invalid_argument("pair line needs values in both a: and b:");
  }
  return s;
}

AdmissiblePair anchored(const SetPair& s) {
  AdmissiblePair p;
  p.a.push_back(1);
  p.b.push_back(0);
  bool saw1 = false, saw0 = false;
  for (Int x : s.a) {
    if (x == 1 && !saw1) {
      saw1 = true;
    } else {
      p.a.push_back(x);
    }
  }
  for (Int y : s.b) {
    if (y == 0 && !saw0) {
      saw0 = true;
    } else {
      p.b.push_back(y);
    }
  }
  if (!saw1 || !saw0) {
    throw std::invalid_argument("set form must contain 1 in a and 0 in b");
  }
  return p;
}

std::vector<AdmissiblePair> all_derived_pairs(int m) {
  require_odd_m(m);
  std::set<SetPair> seen;
  for (PairKind base : {PairKind::type1, PairKind::type2}) {
    for (bool use_tilde : {false, true}) {
      DerivationSpec spec{base, DerivationSpec::Side::none, {}, use_tilde};
      seen.insert(canonical_sets(derive(spec, m)));
      for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> flips;
        for (int k = 0; k < m - 1; ++k) {
          if (mask & (1u << k)) flips.push_back(k + 1);
        }
        for (auto side :
             {DerivationSpec::Side::a, DerivationSpec::Side::b}) {
          spec.side = side;
          spec.flip_indices = flips;
          seen.insert(canonical_sets(derive(spec, m)));
        }
      }
    }
  }
  std::vector<AdmissiblePair> out;
  out.reserve(seen.size());
  for (const SetPair& s : seen) out.push_back(anchored(s));
  return out;
}

LabelingBound lower_bound(int m) {
  require_odd_m(m);
  const cpp_int families = (cpp_int(1) << (m + 1)) - 3;
  const cpp_int fact = factorial(m - 1);
  return bound_from(4 * cpp_int(m) * m * families * fact * fact);
}

LabelingBound exact_count(int m, Int pair_sets) {
  require_odd_m(m);
  const cpp_int fact = factorial(m - 1);
  return bound_from(2 * cpp_int(m) * m * pair_sets * fact * fact);
}

AdmissibleQuadruple example_quadruple(int m) {
  require_odd_m(m);
  AdmissibleQuadruple q;
  for (Int i = 0; i < m; ++i) {
    q.a.push_back(1 + 2 * i);
    q.b.push_back(2 * i * m);
    q.c.push_back(1 + 2 * i);
    q.d.push_back(2 * i * m + 2 * static_cast<Int>(m) * m);
  }
  return q;
}

}  // namespace dmc
