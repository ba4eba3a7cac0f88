#include "dmc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace dmc {
namespace {

void require_odd_m(int m) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("m must be odd and at least 3");
  }
}

// Bitset over the odd magnitudes 1, 3, ..., 2m^2-1; magnitude k sits at
// bit (k-1)/2. Passed by value down the recursion, so backtracking is a
// copy, not an undo.
template <int W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  bool test(int bit) const { return (w[bit >> 6] >> (bit & 63)) & 1; }
  void set(int bit) { w[bit >> 6] |= std::uint64_t(1) << (bit & 63); }
};

// Candidates in canonical growth order: by magnitude, positive first.
// Side 0 (for a) holds the odd values of N_{2m^2}; side 1 (for b) holds
// 0 and the even values of {-2m^2..2m^2-2}. Both anchors have rank 0.
std::vector<Int> candidates(int m, int side) {
  const Int nn = 2 * static_cast<Int>(m) * m;
  std::vector<Int> out;
  if (side == 0) {
    for (Int k = 1; k < nn; k += 2) {
      out.push_back(k);
      out.push_back(-k);
    }
  } else {
    out.push_back(0);
    for (Int k = 2; k <= nn; k += 2) {
      if (k <= nn - 2) out.push_back(k);
      out.push_back(-k);
    }
  }
  return out;
}

struct UnitResult {
  bool done = false;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<SetPair> pairs;
};

constexpr int kMaxSide = 31;

template <int W>
struct Searcher {
  int m;
  Int max_mag;
  const std::vector<Int>* cand;  // two arrays, indexed by side
  std::atomic<bool>* stop;
  std::uint64_t limit;
  std::atomic<std::uint64_t>* found_total;

  std::array<std::array<Int, kMaxSide>, 2> placed{};
  std::uint64_t nodes = 0;
  std::vector<SetPair> out;

  // Grow the side with fewer elements (a on ties); candidate ranks are
  // strictly increasing within a side, which makes the enumeration of
  // sets canonical. Every sum against the other side must land on a free
  // magnitude.
  void search(Mask<W> used, int na, int nb, int ra, int rb) {
    if (stop->load(std::memory_order_relaxed)) return;
    ++nodes;
    if (na == m && nb == m) {
      record();
      return;
    }
    const int side = (na <= nb && na < m) ? 0 : 1;
    const auto& cs = cand[side];
    const auto& other = placed[1 - side];
    const int n_other = side == 0 ? nb : na;
    const int cur = side == 0 ? na : nb;
    const int last = side == 0 ? ra : rb;
    const int max_rank = static_cast<int>(cs.size()) - (m - cur);
    for (int r = last + 1; r <= max_rank; ++r) {
      const Int x = cs[r];
      Mask<W> next = used;
      bool ok = true;
      for (int t = 0; t < n_other; ++t) {
        const Int s = x + other[t];
        const Int k = s < 0 ? -s : s;  // odd by parity, never 0
        if (k > max_mag) {
          ok = false;
          break;
        }
        const int bit = static_cast<int>((k - 1) >> 1);
        if (next.test(bit)) {
          ok = false;
          break;
        }
        next.set(bit);
      }
      if (!ok) continue;
      placed[side][cur] = x;
      if (side == 0) {
        search(next, na + 1, nb, r, rb);
      } else {
        search(next, na, nb + 1, ra, r);
      }
    }
  }

  void record() {
    SetPair s;
    s.a.assign(placed[0].begin(), placed[0].begin() + m);
    s.b.assign(placed[1].begin(), placed[1].begin() + m);
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.b.begin(), s.b.end());
    out.push_back(std::move(s));
    const std::uint64_t total = found_total->fetch_add(1) + 1;
    if (limit > 0 && total >= limit) {
      stop->store(true, std::memory_order_relaxed);
    }
  }

  // One work unit: a's second element is pinned to candidate rank r1.
  UnitResult run_unit(int r1) {
    nodes = 0;
    out.clear();
    placed[0][0] = 1;
    placed[1][0] = 0;
    Mask<W> used;
    used.set(0);  // |1 + 0| = 1

    const Int x = cand[0][r1];
    const Int k = x < 0 ? -x : x;
    if (k <= max_mag) {
      const int bit = static_cast<int>((k - 1) >> 1);
      if (!used.test(bit)) {
        Mask<W> next = used;
        next.set(bit);
        placed[0][1] = x;
        search(next, 2, 1, r1, 0);
      }
    }
    UnitResult res;
    res.done = !stop->load(std::memory_order_relaxed);
    res.count = out.size();
    res.nodes = nodes;
    res.pairs = std::move(out);
    return res;
  }
};

// ---- checkpoint file -------------------------------------------------
//
//   dmcycles-census-checkpoint v1 m=<m> units=<u>
//   unit <id> count <c> nodes <n>
//   <c pair lines>
//   done <id>
//
// Only blocks closed by their matching "done" line are trusted; a torn
// tail from an interrupted run is ignored and recomputed.

std::string checkpoint_header(int m, int units) {
  std::ostringstream os;
  os << "dmcycles-census-checkpoint v1 m=" << m << " units=" << units << "\n";
  return os.str();
}

void load_checkpoint(const std::string& path, int m,
                     std::vector<UnitResult>& slots) {
  std::ifstream in(path);
  if (!in) return;  // fresh run
  std::string line;
  if (!std::getline(in, line) ||
      line + "\n" != checkpoint_header(m, static_cast<int>(slots.size()))) {
    throw std::invalid_argument("checkpoint does not match this enumeration");
  }
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string tag;
    int id = -1;
    std::uint64_t count = 0, nodes = 0;
    std::string word;
    if (!(is >> tag) || tag != "unit" || !(is >> id) || !(is >> word) ||
        word != "count" || !(is >> count) || !(is >> word) ||
        word != "nodes" || !(is >> nodes)) {
      return;  // torn tail
    }
    if (id < 0 || id >= static_cast<int>(slots.size())) return;
    UnitResult res;
    res.count = count;
    res.nodes = nodes;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) return;
      try {
        res.pairs.push_back(set_pair_from_line(line));
      } catch (const std::invalid_argument&) {
        return;
      }
    }
    if (!std::getline(in, line)) return;
    std::istringstream done(line);
    int done_id = -1;
    if (!(done >> tag) || tag != "done" || !(done >> done_id) ||
        done_id != id) {
      return;
    }
    res.done = true;
    slots[id] = std::move(res);
  }
}

class CheckpointWriter {
 public:
  CheckpointWriter(const std::string& path, int m, int units) {
    const bool fresh = !std::ifstream(path).good();
    f_ = std::fopen(path.c_str(), "a");
    if (!f_) throw std::runtime_error("cannot open checkpoint file: " + path);
    if (fresh) std::fputs(checkpoint_header(m, units).c_str(), f_);
  }

  ~CheckpointWriter() {
    if (f_) std::fclose(f_);
  }

  // Appends one closed block and pushes it to disk before returning, so
  // a kill can lose at most the unit in flight.
  void append(int id, const UnitResult& res) {
    std::ostringstream os;
    os << "unit " << id << " count " << res.count << " nodes " << res.nodes
       << "\n";
    for (const SetPair& p : res.pairs) os << to_line(p) << "\n";
    os << "done " << id << "\n";
    std::fputs(os.str().c_str(), f_);
    std::fflush(f_);
    ::fsync(fileno(f_));
  }

 private:
  std::FILE* f_ = nullptr;
};

template <int W>
CensusResult run_census(int m, const CensusOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Int> cand[2] = {candidates(m, 0), candidates(m, 1)};
  const int units =
      std::max(0, static_cast<int>(cand[0].size()) - (m - 1));

  std::vector<UnitResult> slots(units);
  std::unique_ptr<CheckpointWriter> writer;
  if (!opts.checkpoint_path.empty()) {
    load_checkpoint(opts.checkpoint_path, m, slots);
    writer = std::make_unique<CheckpointWriter>(opts.checkpoint_path, m,
                                                units);
  }

  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> found_total{0};
  std::atomic<int> next_unit{0};
  std::atomic<int> done_units{0};
  for (const UnitResult& r : slots) {
    if (r.done) {
      found_total += r.count;
      ++done_units;
    }
  }
  if (opts.limit > 0 && found_total >= opts.limit) stop = true;

  std::mutex sink_mutex;
  auto worker = [&] {
    Searcher<W> searcher;
    searcher.m = m;
    searcher.max_mag = 2 * static_cast<Int>(m) * m - 1;
    searcher.cand = cand;
    searcher.stop = &stop;
    searcher.limit = opts.limit;
    searcher.found_total = &found_total;
    for (;;) {
      const int u = next_unit.fetch_add(1);
      if (u >= units) return;
      if (slots[u].done) continue;
      if (stop.load(std::memory_order_relaxed)) return;
      UnitResult res = searcher.run_unit(u + 1);  // unit u pins rank u+1
      std::lock_guard<std::mutex> lock(sink_mutex);
      if (res.done && writer) writer->append(u, res);
      const int done_now =
          res.done ? done_units.fetch_add(1) + 1 : done_units.load();
      slots[u] = std::move(res);
      if (opts.on_progress) {
        opts.on_progress(done_now, units, found_total.load());
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  CensusResult res;
  res.m = m;
  res.truncated = stop.load();
  for (UnitResult& r : slots) {
    res.nodes_explored += r.nodes;
    res.count += r.pairs.size();
    res.pairs.insert(res.pairs.end(),
                     std::make_move_iterator(r.pairs.begin()),
                     std::make_move_iterator(r.pairs.end()));
  }
  std::sort(res.pairs.begin(), res.pairs.end());
  if (opts.count_only) res.pairs.clear();
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return res;
}

}  // namespace

CensusResult enumerate_pair_sets(int m, const CensusOptions& opts) {
  require_odd_m(m);
  if (m > kMaxSide) {
    throw std::invalid_argument("enumeration supports m up to 31");
  }
  const int words = (m * m + 63) / 64;
  switch (words) {
    case 1: return run_census<1>(m, opts);
    case 2: return run_census<2>(m, opts);
    case 3: return run_census<3>(m, opts);
    case 4: return run_census<4>(m, opts);
    default: return run_census<16>(m, opts);
  }
}

namespace {

// Depth-first count of distance magic labelings. Free choices live in
// columns 0 and 1 only; the rest of the grid is forced by the weight
// equations column by column, with the two equations per row that no
// forced column consumes checked at the end.
struct BruteForce {
  int m, n;
  Int mn;
  FillOrder order;
  std::array<std::array<Int, 16>, 16> cell{};
  std::uint64_t used = 0;
  std::uint64_t count = 0;

  int label_bit(Int v) const {
    // valid labels satisfy v = mn+1 (mod 2), |v| <= mn-1
    if (v < 1 - mn || v > mn - 1 || (v + mn - 1) % 2 != 0) return -1;
    return static_cast<int>((v + mn - 1) / 2);
  }

  void fill(int k) {
    if (k == 2 * m) {
      complete();
      return;
    }
    const int j = k / m;
    const int row = k % m;
    const int i = order == FillOrder::forward ? row : m - 1 - row;
    for (int bit = 0; bit < mn; ++bit) {
      if (used >> bit & 1) continue;
      used |= std::uint64_t(1) << bit;
      cell[i][j] = 2 * bit + 1 - mn;
      fill(k + 1);
      used &= ~(std::uint64_t(1) << bit);
    }
  }

  bool force(int i, int j, Int v, std::uint64_t& u) {
    const int bit = label_bit(v);
    if (bit < 0 || (u >> bit & 1)) return false;
    u |= std::uint64_t(1) << bit;
    cell[i][j] = v;
    return true;
  }

  void complete() {
    std::uint64_t u = used;
    // zero weight at (i, 0) forces column n-1
    for (int i = 0; i < m; ++i) {
      const Int v = -(cell[mod(i - 1, m)][0] + cell[mod(i + 1, m)][0] +
                      cell[i][1]);
      if (!force(i, n - 1, v, u)) return;
    }
    // zero weight at (i, j-1) forces column j
    for (int j = 2; j <= n - 2; ++j) {
      for (int i = 0; i < m; ++i) {
        const Int v = -(cell[mod(i - 1, m)][j - 1] +
                        cell[mod(i + 1, m)][j - 1] + cell[i][j - 2]);
        if (!force(i, j, v, u)) return;
      }
    }
    // only the weights in the last two columns remain unchecked
    for (int j = n - 2; j < n; ++j) {
      for (int i = 0; i < m; ++i) {
        const Int w = cell[mod(i - 1, m)][j] + cell[mod(i + 1, m)][j] +
                      cell[i][mod(j - 1, n)] + cell[i][mod(j + 1, n)];
        if (w != 0) return;
      }
    }
    ++count;
  }
};

}  // namespace

std::uint64_t enumerate_labelings_bruteforce(int m, int n, FillOrder order) {
  const GridParams g(m, n);
  if (g.order() > 40) {
    throw std::invalid_argument(
        "exhaustive labeling search is limited to mn <= 40");
  }
  BruteForce bf;
  bf.m = m;
  bf.n = n;
  bf.mn = g.order();
  bf.order = order;
  bf.fill(0);
  return bf.count;
}

bool census_cross_check(int m) {
  if (m != 3) {
    throw std::invalid_argument(
        "labeling cross-check is only tractable for m = 3");
  }
  CensusOptions opts;
  opts.count_only = true;
  const CensusResult census = enumerate_pair_sets(m, opts);
  const std::uint64_t direct = enumerate_labelings_bruteforce(m, 2 * m);
  const LabelingBound exact =
      exact_count(m, static_cast<Int>(census.count));
  return exact.fits_int64 &&
         exact.value == static_cast<Int>(direct);
}

}  // namespace dmc
