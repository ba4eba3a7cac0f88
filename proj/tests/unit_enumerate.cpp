#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "dmc/assembler.hpp"
#include "dmc/enumerate.hpp"

using namespace dmc;

namespace {

std::filesystem::path temp_file(const char* stem) {
  return std::filesystem::temp_directory_path() /
         (std::string("dmcycles-test-") + stem);
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("the census of pairs for the smallest side") {
    const CensusResult res = enumerate_pair_sets(3);
    CHECK(res.m == 3);
    CHECK(res.count == 34);
    CHECK(res.pairs.size() == 34);
    CHECK_FALSE(res.truncated);
    CHECK(res.nodes_explored > 0);
    CHECK(to_line(res.pairs.front()) == "a: -17 -15 1 b: 0 6 12");

    // every member is admissible and builds a magic labeling
    for (const SetPair& s : res.pairs) {
      const AdmissiblePair p = anchored(s);
      CHECK(validate_pair(p).ok);
      CHECK(verify_distance_magic(build_from_pair(p)).magic());
    }
  }

  TEST_CASE("derived pairs are a strict subset of the census") {
    const CensusResult res = enumerate_pair_sets(3);
    std::set<SetPair> census(res.pairs.begin(), res.pairs.end());
    std::set<SetPair> derived;
    for (const AdmissiblePair& p : all_derived_pairs(3)) {
      derived.insert(canonical_sets(p));
    }
    CHECK(derived.size() == 26);
    for (const SetPair& s : derived) CHECK(census.count(s) == 1);
    CHECK(census.size() - derived.size() == 8);
  }

  TEST_CASE("count-only mode skips the listing") {
    CensusOptions opts;
    opts.count_only = true;
    const CensusResult res = enumerate_pair_sets(5, opts);
    CHECK(res.count == 148);
    CHECK(res.pairs.empty());
  }

  TEST_CASE("a limit truncates the search") {
    CensusOptions opts;
    opts.limit = 10;
    const CensusResult res = enumerate_pair_sets(5, opts);
    CHECK(res.truncated);
    CHECK(res.pairs.size() == 10);
  }

  TEST_CASE("worker count does not change the result") {
    CensusOptions one;
    one.jobs = 1;
    CensusOptions eight;
    eight.jobs = 8;
    const CensusResult a = enumerate_pair_sets(5, one);
    const CensusResult b = enumerate_pair_sets(5, eight);
    CHECK(a.count == 148);
    CHECK(a.count == b.count);
    CHECK(a.pairs == b.pairs);
    CHECK(a.nodes_explored == b.nodes_explored);
  }

  TEST_CASE("a checkpoint resumes to the identical result") {
    const auto path = temp_file("ckpt");
    std::filesystem::remove(path);
    CensusOptions opts;
    opts.jobs = 2;
    opts.checkpoint_path = path.string();
    const CensusResult fresh = enumerate_pair_sets(5, opts);
    REQUIRE(std::filesystem::exists(path));
    const CensusResult resumed = enumerate_pair_sets(5, opts);
    CHECK(resumed.count == fresh.count);
    CHECK(resumed.pairs == fresh.pairs);
    // everything was loaded, nothing searched again
    CHECK(resumed.nodes_explored == fresh.nodes_explored);
    std::filesystem::remove(path);
  }

  TEST_CASE("a checkpoint for one side is rejected for another") {
    const auto path = temp_file("ckpt-mismatch");
    std::filesystem::remove(path);
    CensusOptions opts;
    opts.checkpoint_path = path.string();
    enumerate_pair_sets(3, opts);
    CHECK_THROWS_AS(enumerate_pair_sets(5, opts), std::invalid_argument);
    std::filesystem::remove(path);
  }

  TEST_CASE("progress reporting counts units") {
    int calls = 0;
    int last_total = 0;
    CensusOptions opts;
    opts.on_progress = [&](int done, int total, std::uint64_t) {
      ++calls;
      CHECK(done <= total);
      last_total = total;
    };
    enumerate_pair_sets(3, opts);
    CHECK(calls == last_total);
    CHECK(calls > 0);
  }

  TEST_CASE("census options validate the side") {
    CHECK_THROWS_AS(enumerate_pair_sets(4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pair_sets(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pair_sets(33), std::invalid_argument);
  }

  TEST_CASE("direct labeling counts for tiny grids") {
    CHECK(enumerate_labelings_bruteforce(3, 3) == 0);
    CHECK(enumerate_labelings_bruteforce(3, 4) == 0);
    CHECK(enumerate_labelings_bruteforce(3, 6) == 2448);
    CHECK(enumerate_labelings_bruteforce(3, 6, FillOrder::reverse) == 2448);
    CHECK_THROWS_AS(enumerate_labelings_bruteforce(7, 7),
                    std::invalid_argument);
  }

  TEST_CASE("formula count agrees with the direct count") {
    CHECK(census_cross_check(3));
  }
}
