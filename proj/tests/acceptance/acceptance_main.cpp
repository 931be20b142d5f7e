// Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
// Ground truth comes from exhaustive finite tables, verified witnesses, and
// algebraic identities; the last check is a loose empirical scaling guard.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvcore/batch.hpp"
#include "solvcore/magnus.hpp"
#include "solvcore/oracle.hpp"
#include "solvcore/solvable.hpp"

using namespace solvcore;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word random_reduced(std::mt19937_64& rng, int rank, int len) {
  std::vector<int> raw;
  raw.reserve(std::size_t(len));
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

Word nested_commutator(std::mt19937_64& rng, int rank, int depth) {
  if (depth == 0) return random_reduced(rng, rank, 1 + int(rng() % 3));
  Word u = nested_commutator(rng, rank, depth - 1);
  Word v = nested_commutator(rng, rank, depth - 1);
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

struct ParallelTally {
  std::exception_ptr error;
};

// criterion 1: exhaustive agreement with the brute-force tables, plus exact
// witnesses for every conjugate pair.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    long long na, nb;
  };
  const Case cases[] = {{2, 3}, {2, 4}, {3, 2}};
  long long pairs = 0, mismatches = 0, bad_witness = 0;
  std::string err_note;
  for (const Case& c : cases) {
    Group a = Group::finite_cyclic(c.na);
    Group b = Group::finite_cyclic(c.nb);
    FiniteGroupTable t = enumerate_finite_wreath(a, b);
    const int n = static_cast<int>(t.size());
    std::vector<WreathElement> elems;
    elems.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) elems.push_back(table_elem_to_wreath(t, i));

    ParallelTally tally;
#pragma omp parallel for schedule(dynamic) reduction(+ : mismatches, bad_witness)
    for (int i = 0; i < n; ++i) {
      try {
        for (int j = 0; j < n; ++j) {
          bool brute = brute_conjugacy(t, i, j).has_value();
          auto z = csp_wreath(elems[std::size_t(i)], elems[std::size_t(j)], a, b);
          if (z.has_value() != brute) ++mismatches;
          if (z) {
            int zi = wreath_to_table_index(t, *z, a, b);
            int conj = t.mul[std::size_t(t.mul[std::size_t(zi)][std::size_t(i)])]
                            [std::size_t(t.inv[std::size_t(zi)])];
            if (conj != j) ++bad_witness;
          }
        }
      } catch (...) {
#pragma omp critical(acc_c1)
        if (!tally.error) tally.error = std::current_exception();
      }
    }
    if (tally.error) {
      try {
        std::rethrow_exception(tally.error);
      } catch (const std::exception& e) {
        err_note = std::string(" exception: ") + e.what();
        ++mismatches;
      }
    }
    pairs += static_cast<long long>(n) * n;
  }
  double dt = seconds_since(t0);
  bool ok = mismatches == 0 && bad_witness == 0 && dt < 300.0;
  report(1, ok,
         "finite wreath exhaustive equivalence: " + std::to_string(pairs) + " ordered pairs, " +
             std::to_string(mismatches) + " verdict mismatches, " + std::to_string(bad_witness) +
             " bad witnesses, " + std::to_string(dt) + "s (budget 300s)" + err_note);
}

// criterion 2: multiplicativity, the membership identity, and the wreath
// round trip on 1000 random pairs per group.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  long long bad = 0;
  for (int degree : {1, 2}) {  // bases of S(2,2) and S(3,2)
    Group base = Group::free_solvable(degree, 2);
    Group a = Group::free_abelian(2);
    std::mt19937_64 rng(1000 + degree);
    std::vector<std::pair<Word, Word>> inputs;
    inputs.reserve(1000);
    for (int i = 0; i < 1000; ++i) {
      inputs.emplace_back(random_reduced(rng, 2, 1 + int(rng() % 12)),
                          random_reduced(rng, 2, 1 + int(rng() % 12)));
    }
    ParallelTally tally;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
    for (long long i = 0; i < 1000; ++i) {
      try {
        const auto& [u, v] = inputs[std::size_t(i)];
        MagnusImage mu = magnus_image(u, base);
        MagnusImage mv = magnus_image(v, base);
        if (!magnus_equal(base, magnus_image(concat(u, v), base), magnus_mul(base, mu, mv))) ++bad;
        if (!image_membership(base, mu) || !image_membership(base, mv)) ++bad;
        if (!magnus_equal(base, wreath_to_magnus(magnus_to_wreath(mu, base), a, base), mu)) ++bad;
      } catch (...) {
#pragma omp critical(acc_c2)
        if (!tally.error) tally.error = std::current_exception();
      }
    }
    if (tally.error) ++bad;
  }
  double dt = seconds_since(t0);
  bool ok = bad == 0 && dt < 120.0;
  report(2, ok,
         "embedding homomorphism/identity/round-trip suite: 2000 pairs, " + std::to_string(bad) +
             " failures, " + std::to_string(dt) + "s (budget 120s)");
}

// criterion 3: word problem fixtures and random batteries.
void criterion3() {
  long long bad = 0;

  Word comm = parse_word_text("x1 x2 X1 X2", 2, 2);
  if (!wp_solvable(1, 2, comm)) ++bad;
  if (wp_solvable(2, 2, comm)) ++bad;
  {
    // the commutator's module coordinates are (1 - x2, x1 - 1)
    Group base = Group::free_solvable(1, 2);
    MagnusImage m = magnus_image(comm, base);
    GroupRing u1 = ring_collect(
        base, {{1, Word::identity(2)}, {-1, Word::normalize(2, std::vector<int>{2})}});
    GroupRing u2 = ring_collect(
        base, {{1, Word::normalize(2, std::vector<int>{1})}, {-1, Word::identity(2)}});
    if (!wp(base, m.mu) || !ring_equal(base, m.u[0], u1) || !ring_equal(base, m.u[1], u2)) ++bad;
  }

  std::mt19937_64 rng(3000);
  int done = 0;
  while (done < 50) {
    int d = 1 + int(rng() % 3);
    int r = 2 + int(rng() % 2);
    Word w = nested_commutator(rng, r, d);
    if (!wp_solvable(d, r, w)) ++bad;
    ++done;
  }

  int nonzero_done = 0;
  while (nonzero_done < 200) {
    int d = 1 + int(rng() % 3);
    int r = 2 + int(rng() % 2);
    Word w = random_reduced(rng, r, 1 + int(rng() % 12));
    auto e = abelianization(w, r);
    if (std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; })) continue;
    if (wp_solvable(d, r, w)) ++bad;
    ++nonzero_done;
  }

  report(3, bad == 0,
         "word problem: commutator fixtures, 50 nested commutators, 200 nonzero-abelianization "
         "words, " +
             std::to_string(bad) + " failures");
}

// criterion 4: pp(y^n, y) = n on random data, a quarter of it deep in the
// commutator subgroup.
void criterion4() {
  long long bad = 0, commutator_cases = 0;
  struct Item {
    int d;
    Word y;
    long long n;
  };
  std::vector<Item> items;
  std::mt19937_64 rng(4000);
  // plain random y
  while (items.size() < 140) {
    int d = 2 + int(items.size() % 2);
    Word y = random_reduced(rng, 2, 1 + int(rng() % 6));
    if (wp_solvable(d, 2, y)) continue;
    items.push_back({d, y, static_cast<long long>(rng() % 11) - 5});
  }
  // commutator-subgroup y: [u,v] reduced to length <= 6
  while (items.size() < 200) {
    int d = 2 + int(items.size() % 2);
    Word u = random_reduced(rng, 2, 1 + int(rng() % 2));
    Word v = random_reduced(rng, 2, 1 + int(rng() % 2));
    Word y = concat(concat(u, v), concat(invert(u), invert(v)));
    if (y.size() > 6 || wp_solvable(d, 2, y)) continue;
    items.push_back({d, y, static_cast<long long>(rng() % 11) - 5});
    ++commutator_cases;
  }
  ParallelTally tally;
  const long long total = static_cast<long long>(items.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
  for (long long i = 0; i < total; ++i) {
    try {
      const Item& it = items[std::size_t(i)];
      auto got = pp_solvable(it.d, 2, word_pow(it.y, it.n), it.y);
      if (!got || *got != it.n) ++bad;
    } catch (...) {
#pragma omp critical(acc_c4)
      if (!tally.error) tally.error = std::current_exception();
    }
  }
  if (tally.error) ++bad;
  bool ok = bad == 0 && commutator_cases >= 50;
  report(4, ok,
         "power problem round trips: 200 cases in S(2,2)/S(3,2), " +
             std::to_string(commutator_cases) + " commutator-subgroup cases, " +
             std::to_string(bad) + " failures");
}

// criterion 5: constructed positives with verified search plus
// distinct-abelianization negatives; both decision paths must agree.
void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  Options opts;
  opts.cross_check = true;  // runs general and fast paths on every decision
  long long bad = 0;
  struct Pair {
    int d;
    Word x, y;
    bool positive;
  };
  std::vector<Pair> pairs;
  std::mt19937_64 rng(5000);
  for (int d : {2, 3}) {
    int made = 0;
    while (made < 100) {
      Word x = random_reduced(rng, 2, 1 + int(rng() % 8));
      Word s = random_reduced(rng, 2, 1 + int(rng() % 4));
      pairs.push_back({d, x, conj_by(s, x), true});
      ++made;
    }
    made = 0;
    while (made < 100) {
      Word x = random_reduced(rng, 2, 1 + int(rng() % 8));
      Word y = random_reduced(rng, 2, 1 + int(rng() % 8));
      if (abelianization(x, 2) == abelianization(y, 2)) continue;
      pairs.push_back({d, x, y, false});
      ++made;
    }
  }
  ParallelTally tally;
  const long long total = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
  for (long long i = 0; i < total; ++i) {
    try {
      const Pair& p = pairs[std::size_t(i)];
      // cross_check inside cp/csp enforces fast == general on every call
      if (p.positive) {
        auto z = csp_solvable(p.d, 2, p.x, p.y, opts);
        if (!z || !wp_solvable(p.d, 2, concat(conj_by(*z, p.x), invert(p.y)))) ++bad;
      } else {
        if (cp_solvable(p.d, 2, p.x, p.y, opts)) ++bad;
      }
    } catch (...) {
#pragma omp critical(acc_c5)
      if (!tally.error) tally.error = std::current_exception();
    }
  }
  std::string err_note;
  if (tally.error) {
    try {
      std::rethrow_exception(tally.error);
    } catch (const std::exception& e) {
      err_note = std::string(" exception: ") + e.what();
      ++bad;
    }
  }
  double dt = seconds_since(t0);
  bool ok = bad == 0 && dt < 600.0;
  report(5, ok,
         "free solvable conjugacy: 200 verified positives + 200 negatives across S(2,2)/S(3,2) "
         "with path agreement, " +
             std::to_string(bad) + " failures, " + std::to_string(dt) + "s (budget 600s)" +
             err_note);
}

// criterion 6: on all short elements of S(2,2), a bounded witness search can
// never contradict the decision procedure.
void criterion6() {
  Group s22 = Group::free_solvable(2, 2);
  Options opts;
  opts.cross_check = true;

  // all reduced words of length <= 4 over two generators, deduplicated
  std::vector<Word> reps;
  std::vector<std::string> rep_keys;
  {
    std::vector<Word> layer{Word::identity(2)};
    std::vector<Word> all{Word::identity(2)};
    for (int len = 1; len <= 4; ++len) {
      std::vector<Word> next;
      for (const Word& s : layer) {
        int last = s.empty() ? 0 : s.letter(s.size() - 1);
        for (int g = 1; g <= 2; ++g) {
          for (int code : {g, -g}) {
            if (code == -last) continue;
            std::vector<int> raw = s.letters();
            raw.push_back(code);
            next.push_back(Word::normalize(2, raw));
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    std::unordered_map<std::string, bool> seen;
    for (const Word& w : all) {
      std::string key = canonical_key(s22, w);
      if (seen.emplace(key, true).second) {
        reps.push_back(w);
        rep_keys.push_back(std::move(key));
      }
    }
  }

  long long violations = 0, found_pairs = 0, checked_pairs = 0;
  ParallelTally tally;
  const long long n = static_cast<long long>(reps.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : violations, found_pairs, checked_pairs)
  for (long long i = 0; i < n; ++i) {
    try {
      // first conjugator per reachable target, same enumeration order as
      // bounded_conjugator_search with max length 6
      auto conj_map = bounded_conjugate_map(s22, reps[std::size_t(i)], 6);
      std::unordered_map<std::string, Word> reachable(conj_map.begin(), conj_map.end());
      for (long long j = 0; j < n; ++j) {
        bool found = reachable.count(rep_keys[std::size_t(j)]) > 0;
        bool decided = cp_solvable(2, 2, reps[std::size_t(i)], reps[std::size_t(j)], opts);
        if (found && !decided) ++violations;  // witness exists but cp says no
        found_pairs += found ? 1 : 0;
        ++checked_pairs;
      }
    } catch (...) {
#pragma omp critical(acc_c6)
      if (!tally.error) tally.error = std::current_exception();
    }
  }
  if (tally.error) ++violations;
  report(6, violations == 0,
         "small-instance oracle cross-check: " + std::to_string(reps.size()) + " elements, " +
             std::to_string(checked_pairs) + " ordered pairs (" + std::to_string(found_pairs) +
             " with short witnesses), " + std::to_string(violations) + " violations");
}

// criterion 7: log-log slope of the median decision time at L=16/32/64.
void criterion7() {
  Options opts;  // production configuration: no cross-check
  std::mt19937_64 rng(7000);
  std::vector<double> logl, logt;
  std::string detail = "scaling guard medians:";
  for (int big_l : {16, 32, 64}) {
    int xlen = (big_l - 4) / 2;
    std::vector<std::pair<Word, Word>> sample;
    while (sample.size() < 21) {
      Word x = random_reduced(rng, 2, xlen);
      Word s = random_reduced(rng, 2, 2);
      Word y = conj_by(s, x);
      if (x.size() + y.size() != big_l) continue;  // insist on exact total length
      sample.emplace_back(std::move(x), std::move(y));
    }
    std::vector<double> times;
    for (const auto& [x, y] : sample) {
      auto t0 = std::chrono::steady_clock::now();
      bool verdict = cp_solvable(2, 2, x, y, opts);
      double dt = seconds_since(t0);
      if (!verdict) continue;  // constructed positives must decide true
      times.push_back(dt);
    }
    std::sort(times.begin(), times.end());
    double median = times[times.size() / 2];
    logl.push_back(std::log(static_cast<double>(big_l)));
    logt.push_back(std::log(std::max(median, 1e-7)));
    detail += " L=" + std::to_string(big_l) + ":" + std::to_string(median * 1e3) + "ms";
  }
  // least-squares slope through the three points
  double mx = (logl[0] + logl[1] + logl[2]) / 3.0;
  double my = (logt[0] + logt[1] + logt[2]) / 3.0;
  double num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += (logl[std::size_t(i)] - mx) * (logt[std::size_t(i)] - my);
    den += (logl[std::size_t(i)] - mx) * (logl[std::size_t(i)] - mx);
  }
  double slope = num / den;
  detail += " fitted exponent " + std::to_string(slope) + " (limit 9)";
  report(7, slope <= 9.0, detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%s: %d criterion(s) failed, total %.1fs\n", g_failures == 0 ? "OK" : "FAILED",
              g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
