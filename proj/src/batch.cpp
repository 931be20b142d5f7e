#include "solvcore/batch.hpp"

#include <exception>

namespace solvcore {

namespace {

// Exceptions cannot leave an OpenMP region; stash the first one and rethrow
// after the loop.
struct ErrorLatch {
  std::exception_ptr first;
  void capture() {
#pragma omp critical(solvcore_batch_error)
    {
      if (!first) first = std::current_exception();
    }
  }
  void rethrow() const {
    if (first) std::rethrow_exception(first);
  }
};

}  // namespace

std::vector<char> cp_batch_serial(const Group& g, const std::vector<CpQuery>& queries,
                                  const Options& opts) {
  std::vector<char> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    out[i] = cp(g, queries[i].x, queries[i].y, opts) ? 1 : 0;
  }
  return out;
}

std::vector<char> cp_batch_parallel(const Group& g, const std::vector<CpQuery>& queries,
                                    const Options& opts) {
  std::vector<char> out(queries.size());
  const long long n = static_cast<long long>(queries.size());
  ErrorLatch latch;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      out[std::size_t(i)] =
          cp(g, queries[std::size_t(i)].x, queries[std::size_t(i)].y, opts) ? 1 : 0;
    } catch (...) {
      latch.capture();
    }
  }
  latch.rethrow();
  return out;
}

std::vector<char> wp_batch_serial(const Group& g, const std::vector<Word>& words) {
  std::vector<char> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = wp(g, words[i]) ? 1 : 0;
  return out;
}

std::vector<char> wp_batch_parallel(const Group& g, const std::vector<Word>& words) {
  std::vector<char> out(words.size());
  const long long n = static_cast<long long>(words.size());
  ErrorLatch latch;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      out[std::size_t(i)] = wp(g, words[std::size_t(i)]) ? 1 : 0;
    } catch (...) {
      latch.capture();
    }
  }
  latch.rethrow();
  return out;
}

}  // namespace solvcore
