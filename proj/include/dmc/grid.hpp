#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmc {

using Int = std::int64_t;

// Signals that a computed result contradicts an invariant the library
// guarantees; callers should treat it as a bug, not as bad input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduce x into [0, m), also for negative x.
constexpr int mod(Int x, int m) {
  Int r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Same, for 64-bit moduli.
constexpr Int modl(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

struct Pos {
  int i = 0;
  int j = 0;
  friend constexpr bool operator==(const Pos&, const Pos&) = default;
  friend constexpr auto operator<=>(const Pos&, const Pos&) = default;
};

// The pair (m, n) defining the torus grid C_m x C_n: vertex (i,j) is
// adjacent to (i+-1, j) and (i, j+-1), indices modulo m resp. n.
struct GridParams {
  int m;
  int n;

  GridParams(int rows, int cols) : m(rows), n(cols) {
    if (m < 3 || n < 3) {
      throw std::invalid_argument("cycle lengths must be at least 3");
    }
  }

  Int order() const { return static_cast<Int>(m) * n; }

  friend bool operator==(const GridParams&, const GridParams&) = default;
};

// The label set N_k = {1-k, 3-k, ..., k-1}: k integers of equal parity,
// symmetric about 0. For k even these are the odd values with |v| <= k-1.
constexpr bool in_label_set(Int v, Int k) {
  return v >= 1 - k && v <= k - 1 && ((v - (1 - k)) % 2 == 0);
}

// An m x n integer table addressed torus-style: both indices are reduced
// modulo the corresponding side inside the accessor, so formulas may pass
// any integers.
class Labeling {
 public:
  explicit Labeling(GridParams params)
      : params_(params), e_(static_cast<std::size_t>(params.order()), 0) {}

  Labeling(GridParams params, std::vector<Int> row_major)
      : params_(params), e_(std::move(row_major)) {
    if (e_.size() != static_cast<std::size_t>(params_.order())) {
      throw std::invalid_argument("entry count does not match grid dimensions");
    }
  }

  const GridParams& params() const { return params_; }
  int rows() const { return params_.m; }
  int cols() const { return params_.n; }

  Int at(Int i, Int j) const { return e_[idx(i, j)]; }
  void set(Int i, Int j, Int v) { e_[idx(i, j)] = v; }

  const std::vector<Int>& entries() const { return e_; }

  Labeling transposed() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::size_t idx(Int i, Int j) const {
    return static_cast<std::size_t>(mod(i, params_.m)) * params_.n +
           mod(j, params_.n);
  }

  GridParams params_;
  std::vector<Int> e_;
};

// The four neighbors of p, in the fixed order
// (i+1, j), (i-1, j), (i, j+1), (i, j-1).
std::array<Pos, 4> neighbors(Pos p, const GridParams& g);

// Sum of the four neighbor labels of p.
Int weight(const Labeling& l, Pos p);

struct Violation {
  enum class Kind { foreign_label, duplicate_label, nonzero_weight };
  Kind kind;
  Pos pos;
  Int value;  // the offending label, or the nonzero weight

  std::string describe() const;
};

struct VerificationReport {
  bool is_bijection = false;
  bool zero_weight = false;
  std::optional<Violation> first_violation;
  std::vector<Violation> violations;  // populated only in all-violations mode

  bool magic() const { return is_bijection && zero_weight; }
};

// Full distance-magic check: entries must be exactly N_{mn} (each value
// once) and every vertex weight must be 0. Scans are row-major, label
// checks before weight checks, so first_violation is deterministic.
VerificationReport verify_distance_magic(const Labeling& l,
                                         bool all_violations = false);

// A labeling over {1..mn} with the classical constant weight 2(mn+1).
struct StandardForm {
  GridParams params;
  std::vector<Int> entries;  // row-major
  Int magic_constant;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

// Conversion between the symmetric label set and the classical one:
// x -> (x + mn + 1) / 2. Refuses labelings that do not verify magic.
StandardForm to_standard(const Labeling& l);
Labeling from_standard(const StandardForm& s);

enum class Antipodal {
  column_half,    // l(i,j) = -l(i, j+m), requires n = 2m
  diagonal_half,  // l(i,j) = -l(i+n/2, j+n/2), requires n = m even
};

bool antipodal_check(const Labeling& l, Antipodal kind);

// Cyclic translate: entry (i, j) of the result is l(i + di, j + dj).
Labeling translated(const Labeling& l, Int di, Int dj);

// C_m x C_n and C_n x C_m are isomorphic; the canonical orientation has
// n >= m. Transposes when needed and says so.
struct CanonicalLabeling {
  Labeling labeling;
  bool transposed;
};
CanonicalLabeling canonical_orientation(const Labeling& l);

}  // namespace dmc
