#pragma once

#include <utility>

#include "dmc/sequences.hpp"

namespace dmc {

// Pair -> labeling of C_m x C_2m: extend(T(a,(m-1)/2) + T(b,(m+1)/2)).
// Rejects inadmissible input with the validation detail; the result is
// re-verified before being returned.
Labeling build_from_pair(const AdmissiblePair& p);

// Quadruple -> labeling of C_2m x C_2m:
// merge(T(a,1) + T(b,m-1), T(c,1) + T(d,m-1)).
Labeling build_from_quadruple(const AdmissibleQuadruple& q);

// Inverse of build_from_pair on distance magic labelings with l(0,0) = 1:
//   a_i = t_{i, i(m+1)/2},  b_i = t_{m-i, i(m+1)/2} - 1
// over the reduced table t. The result is checked to rebuild l exactly.
AdmissiblePair extract_pair(const Labeling& l);

// Inverse of build_from_quadruple on distance magic labelings of
// C_2m x C_2m with l(0,0) = 1:
//   a_i = l_{i(m-1), i(m+1)}       b_i = l_{i(m+1), i(m+1)} - 1
//   c_i = l_{i(m-1)+1, i(m+1)} - l_{1,0} + 1
//   d_i = l_{i(m+1)+1, i(m+1)} - 1
AdmissibleQuadruple extract_quadruple(const Labeling& l);

struct OriginShift {
  int di = 0;
  int dj = 0;

  friend bool operator==(const OriginShift&, const OriginShift&) = default;
};

// Translate a distance magic labeling so the label 1 sits at the origin
// (weights are translation invariant, so the result is again magic).
// Reports the applied shift.
std::pair<Labeling, OriginShift> normalize_origin(const Labeling& l);

}  // namespace dmc
