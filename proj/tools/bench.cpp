// Compares the serial and OpenMP batch drivers on two workloads: exhaustive
// conjugacy queries over a finite wreath product and constructed conjugate
// pairs in a free solvable group.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "solvcore/batch.hpp"
#include "solvcore/oracle.hpp"

using namespace solvcore;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word random_reduced(std::mt19937_64& rng, int rank, int len) {
  std::vector<int> raw;
  int last = 0;
  for (int i = 0; i < len; ++i) {
    for (;;) {
      int g = static_cast<int>(rng() % static_cast<unsigned long long>(rank)) + 1;
      int code = (rng() & 1) ? g : -g;
      if (code != -last) {
        raw.push_back(code);
        last = code;
        break;
      }
    }
  }
  return Word::normalize(rank, raw);
}

void run_case(const char* name, const Group& g, const std::vector<CpQuery>& queries) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = cp_batch_serial(g, queries);
  double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto parallel = cp_batch_parallel(g, queries);
  double tp = seconds_since(t0);

  bool match = serial == parallel;
  std::printf("%-28s %7zu queries  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
              queries.size(), ts, tp, tp > 0 ? ts / tp : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, parallel path runs serially\n");
#endif
  std::mt19937_64 rng(7);

  {
    Group a = Group::finite_cyclic(3), b = Group::finite_cyclic(4);
    Group g = Group::wreath(a, b);
    FiniteGroupTable t = enumerate_finite_wreath(a, b);
    std::vector<CpQuery> queries;
    for (int i = 0; i < static_cast<int>(t.size()); i += 3) {
      for (int j = 0; j < static_cast<int>(t.size()); j += 3) {
        queries.push_back({pair_to_word(table_elem_to_wreath(t, i), a, b),
                           pair_to_word(table_elem_to_wreath(t, j), a, b)});
      }
    }
    run_case("Z/3 wr Z/4 pairs", g, queries);
  }

  {
    Group g = Group::free_solvable(2, 2);
    std::vector<CpQuery> queries;
    for (int i = 0; i < 128; ++i) {
      Word x = random_reduced(rng, 2, 8);
      Word s = random_reduced(rng, 2, 4);
      queries.push_back({x, conj_by(s, x)});
    }
    run_case("S(2,2) conjugate pairs", g, queries);
  }

  return 0;
}
