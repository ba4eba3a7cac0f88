#include <doctest.h>

#include "dmc/assembler.hpp"

using namespace dmc;

TEST_SUITE("assembler") {
  TEST_CASE("pair construction matches the known labeling") {
    const Labeling l = build_from_pair(basic_pair(3, PairKind::type1));
    CHECK(l.rows() == 3);
    CHECK(l.cols() == 6);
    const std::vector<Int> row0 = {1, -17, 9, -1, 17, -9};
    for (int j = 0; j < 6; ++j) CHECK(l.at(0, j) == row0[j]);
    CHECK(verify_distance_magic(l).magic());
  }

  TEST_CASE("pair construction is magic for larger sides") {
    for (int m : {5, 7, 9}) {
      for (PairKind k : {PairKind::type1, PairKind::type2}) {
        const Labeling l = build_from_pair(basic_pair(m, k));
        CHECK(l.rows() == m);
        CHECK(l.cols() == 2 * m);
        CHECK(verify_distance_magic(l).magic());
      }
    }
  }

  TEST_CASE("construction rejects inadmissible pairs") {
    CHECK_THROWS_AS(build_from_pair({{1, 3, 7}, {0, 6, 12}}),
                    std::invalid_argument);
  }

  TEST_CASE("quadruple construction is magic on the double grid") {
    for (int m : {3, 5, 7}) {
      const Labeling l = build_from_quadruple(example_quadruple(m));
      CHECK(l.rows() == 2 * m);
      CHECK(l.cols() == 2 * m);
      CHECK(verify_distance_magic(l).magic());
      CHECK(antipodal_check(l, Antipodal::diagonal_half));
    }
  }

  TEST_CASE("extraction inverts pair construction") {
    for (int m : {3, 5}) {
      for (const AdmissiblePair& p : all_derived_pairs(m)) {
        CHECK(extract_pair(build_from_pair(p)) == p);
      }
    }
    const AdmissiblePair p7 = basic_pair(7, PairKind::type2);
    CHECK(extract_pair(build_from_pair(p7)) == p7);
  }

  TEST_CASE("extraction inverts quadruple construction") {
    for (int m : {3, 5}) {
      const AdmissibleQuadruple q = example_quadruple(m);
      CHECK(extract_quadruple(build_from_quadruple(q)) == q);
    }
  }

  TEST_CASE("extraction insists on the origin label") {
    const Labeling l = build_from_pair(basic_pair(3, PairKind::type1));
    const Labeling moved = translated(l, 1, 3);
    CHECK(moved.at(0, 0) != 1);
    CHECK_THROWS_AS(extract_pair(moved), std::invalid_argument);
    const auto [back, shift] = normalize_origin(moved);
    CHECK(back.at(0, 0) == 1);
    CHECK(extract_pair(back) == extract_pair(l));
    CHECK(shift == OriginShift{2, 3});
  }

  TEST_CASE("origin normalization requires a magic labeling") {
    Labeling l = build_from_pair(basic_pair(3, PairKind::type1));
    const Int x = l.at(0, 2);
    l.set(0, 2, l.at(2, 4));
    l.set(2, 4, x);
    CHECK_THROWS_AS(normalize_origin(l), std::invalid_argument);
    CHECK_THROWS_AS(extract_pair(l), std::invalid_argument);
  }

  TEST_CASE("extraction rejects other shapes") {
    CHECK_THROWS_AS(extract_quadruple(build_from_pair(basic_pair(3, PairKind::type1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(extract_pair(build_from_quadruple(example_quadruple(3))),
                    std::invalid_argument);
  }
}
