#include "dmc/assembler.hpp"

namespace dmc {
namespace {

std::invalid_argument inadmissible(const char* what, const SeqCheck& chk) {
  std::string msg = what;
  msg += " (";
  msg += to_string(chk.fault);
  msg += "): ";
  msg += chk.detail;
  return std::invalid_argument(msg);
}

void require_magic(const Labeling& l) {
  if (!verify_distance_magic(l).magic()) {
    throw std::invalid_argument("labeling is not distance magic");
  }
}

}  // namespace

Labeling build_from_pair(const AdmissiblePair& p) {
  const SeqCheck chk = validate_pair(p);
  if (!chk) throw inadmissible("inadmissible pair", chk);
  const int m = p.m();
  const SquareTable c =
      table_sum(cyclic_table(p.a, (m - 1) / 2), cyclic_table(p.b, (m + 1) / 2));
  Labeling l = extend(c);
  if (!verify_distance_magic(l).magic()) {
    throw InternalError("labeling built from an admissible pair failed "
                        "verification");
  }
  return l;
}

Labeling build_from_quadruple(const AdmissibleQuadruple& q) {
  const SeqCheck chk = validate_quadruple(q);
  if (!chk) throw inadmissible("inadmissible quadruple", chk);
  const int m = q.m();
  const SquareTable t =
      table_sum(cyclic_table(q.a, 1), cyclic_table(q.b, m - 1));
  const SquareTable u =
      table_sum(cyclic_table(q.c, 1), cyclic_table(q.d, m - 1));
  Labeling l = merge(t, u);
  if (!verify_distance_magic(l).magic()) {
    throw InternalError("labeling built from an admissible quadruple failed "
                        "verification");
  }
  return l;
}

AdmissiblePair extract_pair(const Labeling& l) {
  const int m = l.rows();
  if (l.cols() != 2 * m || m % 2 == 0) {
    throw std::invalid_argument("extraction needs an m x 2m labeling, m odd");
  }
  require_magic(l);
  if (l.at(0, 0) != 1) {
    throw std::invalid_argument("origin label must be 1 (normalize first)");
  }

  const SquareTable t = reduce(l);
  const Int h = (m + 1) / 2;
  AdmissiblePair p;
  for (Int i = 0; i < m; ++i) {
    p.a.push_back(t.at(i, h * i));
    p.b.push_back(t.at(m - i, h * i) - 1);
  }

  if (!validate_pair(p) || build_from_pair(p) != l) {
    throw InternalError("extracted pair does not rebuild the labeling");
  }
  return p;
}

AdmissibleQuadruple extract_quadruple(const Labeling& l) {
  const int n = l.rows();
  if (l.cols() != n || n % 2 != 0 || (n / 2) % 2 != 1) {
    throw std::invalid_argument(
        "extraction needs a 2m x 2m labeling, m odd");
  }
  require_magic(l);
  if (l.at(0, 0) != 1) {
    throw std::invalid_argument("origin label must be 1 (normalize first)");
  }

  const int m = n / 2;
  AdmissibleQuadruple q;
  for (Int i = 0; i < m; ++i) {
    const Int lo = i * (m - 1);
    const Int hi = i * (m + 1);
    q.a.push_back(l.at(lo, hi));
    q.b.push_back(l.at(hi, hi) - 1);
    q.c.push_back(l.at(lo + 1, hi) - l.at(1, 0) + 1);
    q.d.push_back(l.at(hi + 1, hi) - 1);
  }

  if (!validate_quadruple(q) || build_from_quadruple(q) != l) {
    throw InternalError("extracted quadruple does not rebuild the labeling");
  }
  return q;
}

std::pair<Labeling, OriginShift> normalize_origin(const Labeling& l) {
  require_magic(l);
  for (int i = 0; i < l.rows(); ++i) {
    for (int j = 0; j < l.cols(); ++j) {
      if (l.at(i, j) == 1) {
        return {translated(l, i, j), OriginShift{i, j}};
      }
    }
  }
  throw InternalError("distance magic labeling without the label 1");
}

}  // namespace dmc
