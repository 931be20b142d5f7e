#pragma once

#include <vector>

#include "solvcore/group.hpp"

namespace solvcore {

struct CpQuery {
  Word x, y;
};

// Independent conjugacy queries over one group. The serial loop is the
// reference implementation; the parallel one runs the same body under
// OpenMP. Results are bytewise identical.
std::vector<char> cp_batch_serial(const Group& g, const std::vector<CpQuery>& queries,
                                  const Options& opts = {});
std::vector<char> cp_batch_parallel(const Group& g, const std::vector<CpQuery>& queries,
                                    const Options& opts = {});

std::vector<char> wp_batch_serial(const Group& g, const std::vector<Word>& words);
std::vector<char> wp_batch_parallel(const Group& g, const std::vector<Word>& words);

}  // namespace solvcore
