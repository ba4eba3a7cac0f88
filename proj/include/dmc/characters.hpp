#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dmc/grid.hpp"

namespace dmc {

// Index (a, b) of a character of Z_m x Z_n:
//   chi_{a,b}(x, y) = e^{2 pi i (ax/m + by/n)}.
struct CharIndex {
  int a = 0;
  int b = 0;

  friend constexpr bool operator==(const CharIndex&, const CharIndex&) =
      default;
  friend constexpr auto operator<=>(const CharIndex&, const CharIndex&) =
      default;
};

// A root of unity e^{2 pi i num/den}, kept as an exact reduced fraction
// with 0 <= num < den. No floating point anywhere.
struct UnityExponent {
  Int num = 0;
  Int den = 1;

  static UnityExponent of(Int num, Int den);

  UnityExponent operator+(const UnityExponent& o) const {
    return of(num * o.den + o.num * den, den * o.den);
  }

  bool is_one() const { return num == 0; }
  bool is_minus_one() const { return 2 * num == den; }

  friend bool operator==(const UnityExponent&, const UnityExponent&) = default;
};

UnityExponent chi_eval(CharIndex c, Pos e, const GridParams& g);

// Whether chi_{a,b} sums to zero over {(+-1, 0), (0, +-1)}, i.e. whether
// cos(2 pi a/m) + cos(2 pi b/n) = 0. Exact form: for some sign,
// 2bm +- 2an = mn (mod 2mn).
bool chi_sum_is_zero(CharIndex c, const GridParams& g);

// Character indices with zero connection-set sum, sorted by (a, b),
// residues in [0, m) x [0, n).
std::vector<CharIndex> admissible_set(const GridParams& g);

// Whether chi_{a,b} takes the same value on e1 and e2, i.e.
// n a (x1 - x2) + m b (y1 - y2) = 0 (mod mn).
bool chars_agree(CharIndex c, Pos e1, Pos e2, const GridParams& g);

// A symmetric, identity-free subset of Z_m x Z_n, the generator set of a
// circulant-style graph on the torus. Construction validates S = -S and
// (0,0) not in S; elements are stored reduced and sorted.
class ConnectionSet {
 public:
  ConnectionSet(const GridParams& g, std::vector<Pos> elements);

  static ConnectionSet torus(const GridParams& g);

  const std::vector<Pos>& elements() const { return elements_; }

  // The negation orbits {s, -s}. Present only when every orbit has size 2,
  // i.e. no element is its own inverse.
  const std::optional<std::vector<std::pair<Pos, Pos>>>& orbits() const {
    return orbits_;
  }

 private:
  std::vector<Pos> elements_;
  std::optional<std::vector<std::pair<Pos, Pos>>> orbits_;
};

// Zero test for the character sum over a general connection set. Only
// sets splitting into two size-2 negation orbits are handled: their sums
// have the shape 2 cos(2 pi q) + 2 cos(2 pi r), which vanishes exactly
// when q + r or q - r is 1/2 mod 1. Other shapes are rejected.
bool chi_sum_is_zero(CharIndex c, const ConnectionSet& s, const GridParams& g);
std::vector<CharIndex> admissible_set(const ConnectionSet& s,
                                      const GridParams& g);

// Closed forms of the admissible set for the two magic shapes, used to
// cross-check the brute-force scan:
//   n = 2m, m odd:     b = (m -+ 2a) mod 2m
//   n = m = 2h, h odd: b = (h -+ a) mod m   (written with m = 2h)
std::vector<CharIndex> admissible_closed_form_m_2m(int m);
std::vector<CharIndex> admissible_closed_form_2h_2h(int h);

struct FeasibilityVerdict {
  std::vector<CharIndex> admissible;
  bool feasible = false;
  // Two distinct group elements every admissible character fails to
  // separate; present exactly when admissibles exist but feasible is false.
  std::optional<std::pair<Pos, Pos>> witness;
};

// Necessary condition for a distance magic labeling: some admissible
// character exists and the admissible characters jointly separate the
// group elements.
FeasibilityVerdict spectral_feasible(const GridParams& g);

// Whether C_m x C_n is distance magic: n = 2m with m odd, or n = m with
// m = 2 (mod 4). Accepts either argument order.
bool classify(int m, int n);

}  // namespace dmc
