#pragma once

#include <vector>

#include "dmc/grid.hpp"

namespace dmc {

using IntSeq = std::vector<Int>;

// An m x m integer table with m odd, torus-addressed like Labeling.
class SquareTable {
 public:
  explicit SquareTable(int m)
      : m_(checked(m)), e_(static_cast<std::size_t>(m) * m, 0) {}

  SquareTable(int m, std::vector<Int> row_major)
      : m_(checked(m)), e_(std::move(row_major)) {
    if (e_.size() != static_cast<std::size_t>(m_) * m_) {
      throw std::invalid_argument("entry count does not match table size");
    }
  }

  int size() const { return m_; }

  Int at(Int i, Int j) const { return e_[idx(i, j)]; }
  void set(Int i, Int j, Int v) { e_[idx(i, j)] = v; }

  const std::vector<Int>& entries() const { return e_; }

  friend bool operator==(const SquareTable&, const SquareTable&) = default;

 private:
  static int checked(int m) {
    if (m < 3 || m % 2 == 0) {
      throw std::invalid_argument("table side must be odd and at least 3");
    }
    return m;
  }

  std::size_t idx(Int i, Int j) const {
    return static_cast<std::size_t>(mod(i, m_)) * m_ + mod(j, m_);
  }

  int m_;
  std::vector<Int> e_;
};

struct TablePair {
  SquareTable first;
  SquareTable second;

  TablePair(SquareTable t, SquareTable u)
      : first(std::move(t)), second(std::move(u)) {
    if (first.size() != second.size()) {
      throw std::invalid_argument("partial tables must have equal size");
    }
  }

  friend bool operator==(const TablePair&, const TablePair&) = default;
};

// The cyclic shift table T(r, s): row i is r shifted right by s*i, i.e.
// entry (i, j) is r_{(j - s*i) mod m}.
SquareTable cyclic_table(const IntSeq& r, Int shift);

// Entrywise sum; sizes must match.
SquareTable table_sum(const SquareTable& t, const SquareTable& u);

// Even columns of an m x 2m labeling: t_{i,j} = l_{i,2j}.
SquareTable reduce(const Labeling& l);

// Inverse of reduce under column-half antipodality: the m x 2m table with
//   l_{i,j} = t_{i,j/2}       for j even,
//   l_{i,j} = -t_{i,(j+m)/2}  for j odd,
// which forces l_{i,j} = -l_{i,j+m}.
Labeling extend(const SquareTable& t);

// A table is distance magic when exactly one of k, -k appears for every
// k in N_{2m^2} and all row-pair sums balance:
//   t_{i-1,j} + t_{i+1,j} = t_{i,j+(m-1)/2} + t_{i,j-(m-1)/2}.
// ex of such a table is a distance magic labeling of C_m x C_2m and
// re recovers the table, so the two predicates match up.
bool is_dm_table(const SquareTable& t);

// Even-row / odd-row halves of a 2m x 2m labeling (m odd):
//   t_{i,j} = l_{2i,2j},  t'_{i,j} = l_{2i+1,2j}.
TablePair partial(const Labeling& l);

// Inverse of partial under diagonal-half antipodality: the 2m x 2m table
//   l_{i,j} = t_{i/2,j/2}            i, j even
//   l_{i,j} = -t_{(i+m)/2,(j+m)/2}   i, j odd
//   l_{i,j} = t'_{(i-1)/2,j/2}       i odd, j even
//   l_{i,j} = -t'_{(i+m-1)/2,(j+m)/2} i even, j odd
// which forces l_{i,j} = -l_{i+m,j+m}.
Labeling merge(const SquareTable& t, const SquareTable& u);

// A pair of m x m tables is distance magic when exactly one of k, -k
// appears across the two tables for every k in N_{4m^2} and both tables
// satisfy t_{i-1,j} + t_{i,j} = t_{i+(m-1)/2,j+(m-1)/2} + t_{i+(m-1)/2,j+(m+1)/2}.
bool is_dm_pair(const TablePair& p);

// Shift identity every distance magic table satisfies, for all s:
//   t_{i+1,j} - t_{i,j+(m-1)/2} =
//   t_{i+1-s,j+s(m+1)/2} - t_{i-s,j+(m-1)/2+s(m+1)/2}.
bool check_shift_identity(const SquareTable& t, Int s);

// Diagonal identity every distance magic labeling of an even square grid
// satisfies, for all s:
//   l_{i,j} + l_{i-1,j+1} = (-1)^s (l_{i+s,j+s} + l_{i+s-1,j+s+1}).
bool check_diag_identity(const Labeling& l, Int s);

}  // namespace dmc
