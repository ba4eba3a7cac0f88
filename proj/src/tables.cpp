#include "dmc/tables.hpp"

#include <cstdlib>
#include <unordered_set>

namespace dmc {
namespace {

// Exactly one of k, -k present for each k in N_{2*bound_half}: all values
// odd, |v| <= bound, magnitudes pairwise distinct, count (bound+1)/2.
bool signed_cover(const std::vector<Int>& values, Int bound) {
  if (values.size() != static_cast<std::size_t>((bound + 1) / 2)) return false;
  std::unordered_set<Int> mags;
  mags.reserve(values.size());
  for (Int v : values) {
    const Int k = std::abs(v);
    if (k > bound || k % 2 == 0) return false;
    if (!mags.insert(k).second) return false;
  }
  return true;
}

}  // namespace

SquareTable cyclic_table(const IntSeq& r, Int shift) {
  const int m = static_cast<int>(r.size());
  SquareTable t(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t.set(i, j, r[mod(j - shift * i, m)]);
    }
  }
  return t;
}

SquareTable table_sum(const SquareTable& t, const SquareTable& u) {
  if (t.size() != u.size()) {
    throw std::invalid_argument("table sizes differ");
  }
  SquareTable s(t.size());
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      s.set(i, j, t.at(i, j) + u.at(i, j));
    }
  }
  return s;
}

SquareTable reduce(const Labeling& l) {
  const int m = l.rows();
  if (l.cols() != 2 * m) {
    throw std::invalid_argument("reduce needs an m x 2m labeling");
  }
  SquareTable t(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t.set(i, j, l.at(i, 2 * j));
    }
  }
  return t;
}

Labeling extend(const SquareTable& t) {
  const int m = t.size();
  Labeling l(GridParams(m, 2 * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < 2 * m; ++j) {
      l.set(i, j, j % 2 == 0 ? t.at(i, j / 2) : -t.at(i, (j + m) / 2));
    }
  }
  return l;
}

bool is_dm_table(const SquareTable& t) {
  const int m = t.size();
  if (!signed_cover(t.entries(), 2 * static_cast<Int>(m) * m - 1)) {
    return false;
  }
  const int h = (m - 1) / 2;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (t.at(i - 1, j) + t.at(i + 1, j) != t.at(i, j + h) + t.at(i, j - h)) {
        return false;
      }
    }
  }
  return true;
}

TablePair partial(const Labeling& l) {
  if (l.rows() != l.cols() || l.rows() % 2 != 0 || (l.rows() / 2) % 2 != 1) {
    throw std::invalid_argument("partial needs a 2m x 2m labeling, m odd");
  }
  const int m = l.rows() / 2;
  SquareTable t(m), u(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t.set(i, j, l.at(2 * i, 2 * j));
      u.set(i, j, l.at(2 * i + 1, 2 * j));
    }
  }
  return {std::move(t), std::move(u)};
}

Labeling merge(const SquareTable& t, const SquareTable& u) {
  if (t.size() != u.size()) {
    throw std::invalid_argument("table sizes differ");
  }
  const int m = t.size();
  Labeling l(GridParams(2 * m, 2 * m));
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = 0; j < 2 * m; ++j) {
      Int v;
      if (i % 2 == 0 && j % 2 == 0) {
        v = t.at(i / 2, j / 2);
      } else if (i % 2 == 1 && j % 2 == 1) {
        v = -t.at((i + m) / 2, (j + m) / 2);
      } else if (i % 2 == 1) {
        v = u.at((i - 1) / 2, j / 2);
      } else {
        v = -u.at((i + m - 1) / 2, (j + m) / 2);
      }
      l.set(i, j, v);
    }
  }
  return l;
}

bool is_dm_pair(const TablePair& p) {
  const int m = p.first.size();
  std::vector<Int> all = p.first.entries();
  all.insert(all.end(), p.second.entries().begin(), p.second.entries().end());
  if (!signed_cover(all, 4 * static_cast<Int>(m) * m - 1)) return false;

  const int h = (m - 1) / 2;
  for (const SquareTable* t : {&p.first, &p.second}) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (t->at(i - 1, j) + t->at(i, j) !=
            t->at(i + h, j + h) + t->at(i + h, j + h + 1)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_shift_identity(const SquareTable& t, Int s) {
  const int m = t.size();
  const int h1 = (m - 1) / 2;
  const int h2 = (m + 1) / 2;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (t.at(i + 1, j) - t.at(i, j + h1) !=
          t.at(i + 1 - s, j + h2 * s) - t.at(i - s, j + h1 + h2 * s)) {
        return false;
      }
    }
  }
  return true;
}

bool check_diag_identity(const Labeling& l, Int s) {
  if (l.rows() != l.cols() || l.rows() % 2 != 0) {
    throw std::invalid_argument("diagonal identity needs an even square grid");
  }
  const int n = l.rows();
  const Int sign = (modl(s, 2) == 0) ? 1 : -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (l.at(i, j) + l.at(i - 1, j + 1) !=
          sign * (l.at(i + s, j + s) + l.at(i + s - 1, j + s + 1))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace dmc
