// End-to-end checks of the dmcycles binary: exit codes, output formats,
// pipelines between the subcommands.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run a shell command, capture stdout, decode the exit status
RunResult run(const std::string& cmd) {
  RunResult res;
  FILE* p = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = ::fread(buf.data(), 1, buf.size(), p)) > 0) {
    res.out.append(buf.data(), n);
  }
  const int status = ::pclose(p);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

const std::string bin = DMCYCLES_BIN;

std::filesystem::path temp_file(const char* stem) {
  return std::filesystem::temp_directory_path() /
         (std::string("dmcycles-cli-") + stem);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify reports both verdicts with matching exit codes") {
    RunResult r = run(bin + " classify 3 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("distance-magic: yes") != std::string::npos);
    CHECK(r.out.find("feasible (5 admissible characters)") !=
          std::string::npos);

    r = run(bin + " classify 4 4");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("distance-magic: no") != std::string::npos);
    CHECK(r.out.find("agree on (0,0) and (2,2)") != std::string::npos);

    r = run(bin + " classify 2 6");
    CHECK(r.exit_code == 2);
    r = run(bin + " classify");
    CHECK(r.exit_code == 2);
    r = run(bin + " --help");
    CHECK(r.exit_code == 0);
  }

  TEST_CASE("classify emits machine-readable json") {
    const RunResult r = run(bin + " classify 3 6 --json --show-admissible");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["distance_magic"] == true);
    CHECK(j["feasible"] == true);
    CHECK(j["admissible"].size() == 5);
  }

  TEST_CASE("admissible-set lists the character indices") {
    const RunResult r = run(bin + " admissible-set 3 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "count: 5\n(0,3)\n(1,1)\n(1,5)\n(2,1)\n(2,5)\n");
  }

  TEST_CASE("construct piped into verify") {
    RunResult r =
        run(bin + " construct pair --m 5 --builtin type2 | " + bin +
            " verify -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("magic: yes") != std::string::npos);
    CHECK(r.out.find("column-antipodal: yes") != std::string::npos);
    CHECK(r.out.find("shift-identity: yes") != std::string::npos);

    r = run(bin + " construct quadruple --m 3 | " + bin + " verify -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("diagonal-antipodal: yes") != std::string::npos);
  }

  TEST_CASE("construct with flips and tilde") {
    const RunResult r = run(bin +
                            " construct pair --m 5 --builtin type1 "
                            "--flip-b 1,3 --tilde --emit sequences");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("a: ") != std::string::npos);
    const RunResult both = run(bin +
                               " construct pair --m 5 --flip-a 1 --flip-b 2");
    CHECK(both.exit_code == 2);
  }

  TEST_CASE("verify rejects a broken labeling through exit code one") {
    const auto path = temp_file("broken.txt");
    std::ofstream(path) << "dmcycles v1 labeling m=3 n=6\n"
                        << "1 -17 9 -1 17 -9\n"
                        << "11 -3 13 -11 3 -13\n"
                        << "15 -7 5 -15 7 -5\n";
    RunResult r = run(bin + " verify " + path.string());
    CHECK(r.exit_code == 0);

    std::ofstream(path) << "dmcycles v1 labeling m=3 n=6\n"
                        << "-17 1 9 -1 17 -9\n"
                        << "11 -3 13 -11 3 -13\n"
                        << "15 -7 5 -15 7 -5\n";
    r = run(bin + " verify " + path.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("magic: no") != std::string::npos);
    CHECK(r.out.find("first-violation") != std::string::npos);

    r = run(bin + " verify " + path.string() + " --all-violations");
    CHECK(r.out.find("violations:") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify handles sequence documents") {
    const RunResult ok = run(bin +
                             " construct pair --m 3 --emit sequences | " +
                             bin + " verify -");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("admissible: yes") != std::string::npos);

    const auto path = temp_file("badpair.txt");
    std::ofstream(path) << "dmcycles v1 pair m=3 n=6\na: 1 3 7\nb: 0 6 12\n";
    const RunResult bad = run(bin + " verify " + path.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("admissible: no") != std::string::npos);
    CHECK(bad.out.find("fault: coverage") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("extract recovers the generating sequences") {
    const RunResult r = run(bin + " construct pair --m 5 --builtin type2 | " +
                            bin + " extract -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("a: 1 -3 5 -7 9") != std::string::npos);

    // a transposed, translated copy still extracts to the same pair
    const auto path = temp_file("moved.txt");
    run(bin + " construct pair --m 3 | " + bin + " extract - > /dev/null");
    const RunResult moved = run(
        bin + " construct pair --m 3 --emit sequences | " + bin +
        " construct pair --from - | " + bin + " extract -");
    CHECK(moved.exit_code == 0);
    CHECK(moved.out.find("a: 1 3 5") != std::string::npos);
    CHECK(moved.out.find("b: 0 6 12") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("extract refuses a non-magic labeling") {
    const auto path = temp_file("notmagic.txt");
    std::ofstream(path) << "dmcycles v1 labeling m=3 n=6\n"
                        << "-17 1 9 -1 17 -9\n"
                        << "11 -3 13 -11 3 -13\n"
                        << "15 -7 5 -15 7 -5\n";
    const RunResult r = run(bin + " extract " + path.string());
    CHECK(r.exit_code == 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("enumerate pairs prints a deterministic census") {
    const RunResult r = run(bin + " enumerate pairs --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("dmcycles v1 census m=3 count=34\n", 0) == 0);
    CHECK(r.out.find("a: -17 -15 1 b: 0 6 12\n") != std::string::npos);
    const RunResult again = run(bin + " enumerate pairs --m 3 --jobs 4");
    CHECK(again.out == r.out);
  }

  TEST_CASE("enumerate labelings counts directly") {
    const RunResult r = run(bin + " enumerate labelings --m 3 --n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "count: 2448\n");
    const RunResult zero = run(bin + " enumerate labelings --m 3 --n 3");
    CHECK(zero.out == "count: 0\n");
  }

  TEST_CASE("bound combines the formula with a census listing") {
    const auto path = temp_file("census3.txt");
    run(bin + " enumerate pairs --m 3 --out " + path.string());
    const RunResult r = run(bin + " bound --m 3 --census " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("lower-bound: 1872") != std::string::npos);
    CHECK(r.out.find("pair-sets: 34") != std::string::npos);
    CHECK(r.out.find("exact-count: 2448") != std::string::npos);

    const RunResult mismatch = run(bin + " bound --m 5 --census " +
                                   path.string());
    CHECK(mismatch.exit_code == 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("bound rejects partial census listings") {
    const auto path = temp_file("partial.txt");
    run(bin + " enumerate pairs --m 3 --limit 5 --out " + path.string());
    const RunResult r = run(bin + " bound --m 3 --census " + path.string());
    CHECK(r.exit_code == 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("malformed documents fail with exit code one") {
    const auto path = temp_file("garbage.txt");
    std::ofstream(path) << "not a document\n";
    const RunResult r = run(bin + " verify " + path.string());
    CHECK(r.exit_code == 1);
    std::filesystem::remove(path);
  }
}
