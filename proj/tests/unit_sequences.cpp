#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dmc/sequences.hpp"

using namespace dmc;

TEST_SUITE("sequences") {
  TEST_CASE("basic pairs of both kinds") {
    const AdmissiblePair p1 = basic_pair(3, PairKind::type1);
    CHECK(p1.a == IntSeq{1, 3, 5});
    CHECK(p1.b == IntSeq{0, 6, 12});
    const AdmissiblePair p2 = basic_pair(3, PairKind::type2);
    CHECK(p2.a == IntSeq{1, -3, 5});
    CHECK(p2.b == IntSeq{0, -12, 12});
    CHECK(validate_pair(p1).ok);
    CHECK(validate_pair(p2).ok);
    for (int m : {5, 7, 9, 11}) {
      CHECK(validate_pair(basic_pair(m, PairKind::type1)).ok);
      CHECK(validate_pair(basic_pair(m, PairKind::type2)).ok);
    }
    CHECK_THROWS_AS(basic_pair(4, PairKind::type1), std::invalid_argument);
  }

  TEST_CASE("validation reports the first failing condition") {
    SUBCASE("length") {
      const SeqCheck c = validate_pair({{1, 3}, {0, 6, 12}});
      CHECK_FALSE(c.ok);
      CHECK(c.fault == SeqFault::length);
    }
    SUBCASE("parity") {
      const SeqCheck c = validate_pair({{1, 2, 5}, {0, 6, 12}});
      CHECK_FALSE(c.ok);
      CHECK(c.fault == SeqFault::parity);
    }
    SUBCASE("anchor") {
      const SeqCheck c = validate_pair({{3, 1, 5}, {0, 6, 12}});
      CHECK_FALSE(c.ok);
      CHECK(c.fault == SeqFault::anchor);
      const SeqCheck d = validate_pair({{1, 3, 5}, {6, 0, 12}});
      CHECK(d.fault == SeqFault::anchor);
    }
    SUBCASE("coverage") {
      const SeqCheck c = validate_pair({{1, 3, 7}, {0, 6, 12}});
      CHECK_FALSE(c.ok);
      CHECK(c.fault == SeqFault::coverage);
      CHECK_FALSE(c.coverage_holds);
    }
  }

  TEST_CASE("quadruple validation") {
    const AdmissibleQuadruple q = example_quadruple(3);
    CHECK(q.a == IntSeq{1, 3, 5});
    CHECK(q.b == IntSeq{0, 6, 12});
    CHECK(q.c == IntSeq{1, 3, 5});
    CHECK(q.d == IntSeq{18, 24, 30});
    CHECK(validate_quadruple(q).ok);
    for (int m : {5, 7, 9}) CHECK(validate_quadruple(example_quadruple(m)).ok);

    AdmissibleQuadruple bad = q;
    bad.c = {1, 3, 7};
    CHECK(validate_quadruple(bad).fault == SeqFault::coverage);
    bad = q;
    bad.d = {18, 24, 31};
    CHECK(validate_quadruple(bad).fault == SeqFault::parity);
    bad = q;
    bad.c = {3, 1, 5};
    CHECK(validate_quadruple(bad).fault == SeqFault::anchor);
  }

  TEST_CASE("the example quadruple attains the top of the last range") {
    for (int m : {3, 5, 7}) {
      const AdmissibleQuadruple q = example_quadruple(m);
      CHECK(q.d.back() == static_cast<Int>(4) * m * m - 2 * m);
    }
  }

  TEST_CASE("tilde swaps the roles and is an involution") {
    const AdmissiblePair p = basic_pair(3, PairKind::type1);
    const AdmissiblePair t = tilde(p);
    CHECK(t.a == IntSeq{1, 7, 13});
    CHECK(t.b == IntSeq{0, 2, 4});
    CHECK(validate_pair(t).ok);
    CHECK(tilde(t) == p);
  }

  TEST_CASE("sign flip derivations") {
    DerivationSpec spec;
    spec.base = PairKind::type1;
    spec.side = DerivationSpec::Side::b;
    spec.flip_indices = {1};
    const AdmissiblePair f1 = derive(spec, 3);
    CHECK(f1.a == IntSeq{1, 3, 5});
    CHECK(f1.b == IntSeq{0, -12, 12});
    CHECK(validate_pair(f1).ok);

    spec.base = PairKind::type2;
    const AdmissiblePair f2 = derive(spec, 3);
    CHECK(f2.a == IntSeq{1, -3, 5});
    CHECK(f2.b == IntSeq{0, 10, 12});
    CHECK(validate_pair(f2).ok);

    spec.base = PairKind::type1;
    spec.side = DerivationSpec::Side::a;
    spec.flip_indices = {2};
    const AdmissiblePair f3 = derive(spec, 3);
    CHECK(f3.a == IntSeq{1, 3, -17});
    CHECK(f3.b == IntSeq{0, 6, 12});
    CHECK(validate_pair(f3).ok);
  }

  TEST_CASE("derivations reject bad flip indices") {
    DerivationSpec spec;
    spec.side = DerivationSpec::Side::a;
    spec.flip_indices = {0};
    CHECK_THROWS_AS(derive(spec, 3), std::invalid_argument);
    spec.flip_indices = {3};
    CHECK_THROWS_AS(derive(spec, 3), std::invalid_argument);
    spec.side = DerivationSpec::Side::none;
    spec.flip_indices = {1};
    CHECK_THROWS_AS(derive(spec, 3), std::invalid_argument);
  }

  TEST_CASE("set forms, anchoring and line format round trip") {
    const AdmissiblePair p = basic_pair(3, PairKind::type2);
    const SetPair s = canonical_sets(p);
    CHECK(s.a == IntSeq{-3, 1, 5});
    CHECK(s.b == IntSeq{-12, 0, 12});
    const AdmissiblePair back = anchored(s);
    CHECK(back.a == IntSeq{1, -3, 5});
    CHECK(back.b == IntSeq{0, -12, 12});
    CHECK(set_pair_from_line(to_line(s)) == s);
    CHECK(to_line(s) == "a: -3 1 5 b: -12 0 12");
  }

  TEST_CASE("every derivation is admissible and the census of forms is exact") {
    for (int m : {3, 5, 7}) {
      const std::vector<AdmissiblePair> all = all_derived_pairs(m);
      const std::size_t expect = 2 * ((std::size_t{1} << (m + 1)) - 3);
      CHECK(all.size() == expect);
      std::set<SetPair> forms;
      for (const AdmissiblePair& p : all) {
        CHECK(validate_pair(p).ok);
        forms.insert(canonical_sets(p));
      }
      CHECK(forms.size() == expect);
    }
    CHECK(all_derived_pairs(3).size() == 26);
    CHECK(all_derived_pairs(5).size() == 122);
    CHECK(all_derived_pairs(7).size() == 506);
  }

  TEST_CASE("validity only depends on the sets, not the element order") {
    std::mt19937_64 rng(20260816);
    for (int m : {5, 7}) {
      const AdmissiblePair base = basic_pair(m, PairKind::type1);
      const SetPair form = canonical_sets(base);
      AdmissiblePair p = base;
      for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(p.a.begin() + 1, p.a.end(), rng);
        std::shuffle(p.b.begin() + 1, p.b.end(), rng);
        CHECK(validate_pair(p).ok);
        CHECK(canonical_sets(p) == form);
      }
    }
  }

  TEST_CASE("labeling count bounds") {
    CHECK(lower_bound(3).value == 1872);
    CHECK(lower_bound(5).value == 3513600);
    CHECK(lower_bound(7).value == 25706419200);
    CHECK(lower_bound(9).value == 537788856729600);
    CHECK(lower_bound(3).fits_int64);
    CHECK(lower_bound(3).decimal == "1872");
    const LabelingBound big = lower_bound(11);
    CHECK_FALSE(big.fits_int64);
    CHECK(big.decimal == "26086341298913280000");
    const LabelingBound exact = exact_count(3, 34);
    CHECK(exact.fits_int64);
    CHECK(exact.value == 2448);
    CHECK(exact_count(7, 538).decimal == "27332121600");
  }
}
