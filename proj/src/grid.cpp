#include "dmc/grid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dmc {

Labeling Labeling::transposed() const {
  Labeling t(GridParams(params_.n, params_.m));
  for (int i = 0; i < params_.m; ++i) {
    for (int j = 0; j < params_.n; ++j) {
      t.set(j, i, at(i, j));
    }
  }
  return t;
}

std::array<Pos, 4> neighbors(Pos p, const GridParams& g) {
  return {Pos{mod(p.i + 1, g.m), p.j}, Pos{mod(p.i - 1, g.m), p.j},
          Pos{p.i, mod(p.j + 1, g.n)}, Pos{p.i, mod(p.j - 1, g.n)}};
}

Int weight(const Labeling& l, Pos p) {
  Int w = 0;
  for (const Pos& q : neighbors(p, l.params())) {
    w += l.at(q.i, q.j);
  }
  return w;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << "(" << pos.i << "," << pos.j << "): ";
  switch (kind) {
    case Kind::foreign_label:
      os << "label " << value << " outside the label set";
      break;
    case Kind::duplicate_label:
      os << "label " << value << " already used";
      break;
    case Kind::nonzero_weight:
      os << "weight " << value;
      break;
  }
  return os.str();
}

VerificationReport verify_distance_magic(const Labeling& l,
                                         bool all_violations) {
  const GridParams& g = l.params();
  const Int k = g.order();
  VerificationReport rep;

  auto record = [&](Violation v) {
    if (!rep.first_violation) rep.first_violation = v;
    if (all_violations) rep.violations.push_back(v);
  };

  // Labels: every entry in N_k, no repeats. Since |N_k| = k = mn, that
  // makes the assignment a bijection onto N_k.
  bool labels_ok = true;
  std::unordered_set<Int> seen;
  seen.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < g.m; ++i) {
    for (int j = 0; j < g.n; ++j) {
      const Int v = l.at(i, j);
      if (!in_label_set(v, k)) {
        labels_ok = false;
        record({Violation::Kind::foreign_label, {i, j}, v});
        if (!all_violations) goto labels_done;
      } else if (!seen.insert(v).second) {
        labels_ok = false;
        record({Violation::Kind::duplicate_label, {i, j}, v});
        if (!all_violations) goto labels_done;
      }
    }
  }
labels_done:
  rep.is_bijection = labels_ok;

  bool weights_ok = true;
  for (int i = 0; i < g.m; ++i) {
    for (int j = 0; j < g.n; ++j) {
      const Int w = weight(l, {i, j});
      if (w != 0) {
        weights_ok = false;
        record({Violation::Kind::nonzero_weight, {i, j}, w});
        if (!all_violations) goto weights_done;
      }
    }
  }
weights_done:
  rep.zero_weight = weights_ok;
  return rep;
}

StandardForm to_standard(const Labeling& l) {
  if (!verify_distance_magic(l).magic()) {
    throw std::invalid_argument("labeling is not distance magic");
  }
  const Int k = l.params().order();
  StandardForm s{l.params(), {}, 2 * (k + 1)};
  s.entries.reserve(l.entries().size());
  for (Int v : l.entries()) {
    s.entries.push_back((v + k + 1) / 2);
  }
  return s;
}

Labeling from_standard(const StandardForm& s) {
  const Int k = s.params.order();
  if (s.magic_constant != 2 * (k + 1)) {
    throw std::invalid_argument("magic constant does not match dimensions");
  }
  std::vector<Int> e;
  e.reserve(s.entries.size());
  for (Int v : s.entries) {
    if (v < 1 || v > k) {
      throw std::invalid_argument("entry outside 1..mn");
    }
    e.push_back(2 * v - k - 1);
  }
  Labeling l(s.params, std::move(e));
  if (!verify_distance_magic(l).magic()) {
    throw std::invalid_argument("labeling is not distance magic");
  }
  return l;
}

bool antipodal_check(const Labeling& l, Antipodal kind) {
  const GridParams& g = l.params();
  switch (kind) {
    case Antipodal::column_half: {
      if (g.n != 2 * g.m) {
        throw std::invalid_argument("column-half antipodality needs n = 2m");
      }
      for (int i = 0; i < g.m; ++i) {
        for (int j = 0; j < g.m; ++j) {
          if (l.at(i, j) != -l.at(i, j + g.m)) return false;
        }
      }
      return true;
    }
    case Antipodal::diagonal_half: {
      if (g.n != g.m || g.m % 2 != 0) {
        throw std::invalid_argument(
            "diagonal-half antipodality needs n = m even");
      }
      const int h = g.m / 2;
      for (int i = 0; i < g.m; ++i) {
        for (int j = 0; j < g.n; ++j) {
          if (l.at(i, j) != -l.at(i + h, j + h)) return false;
        }
      }
      return true;
    }
  }
  throw std::invalid_argument("unknown antipodality kind");
}

Labeling translated(const Labeling& l, Int di, Int dj) {
  Labeling t(l.params());
  for (int i = 0; i < l.rows(); ++i) {
    for (int j = 0; j < l.cols(); ++j) {
      t.set(i, j, l.at(i + di, j + dj));
    }
  }
  return t;
}

CanonicalLabeling canonical_orientation(const Labeling& l) {
  if (l.rows() > l.cols()) {
    return {l.transposed(), true};
  }
  return {l, false};
}

}  // namespace dmc
