#pragma once

#include <random>
#include <vector>

#include "solvcore/group.hpp"

namespace solvcore::testing {

inline Word random_reduced_word(std::mt19937_64& rng, int rank, int len) {
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

inline Word random_nontrivial_word(std::mt19937_64& rng, const Group& g, int len) {
  for (;;) {
    Word w = random_reduced_word(rng, g.ngens(), len);
    if (!wp(g, w)) return w;
  }
}

// Nested commutator of depth `depth` over random short words; lies in the
// depth-th derived subgroup.
inline Word nested_commutator(std::mt19937_64& rng, int rank, int depth) {
  if (depth == 0) return random_reduced_word(rng, rank, 1 + int(rng() % 3));
  Word u = nested_commutator(rng, rank, depth - 1);
  Word v = nested_commutator(rng, rank, depth - 1);
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

inline Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

}  // namespace solvcore::testing
