#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "solvcore/wreath.hpp"

namespace solvcore {

// Complete multiplication table of A wr B for finite cyclic A and B.
// Elements are encoded positionally as (top residue, value tuple indexed by
// the residues of B); the identity sits at index 0.
struct FiniteGroupTable {
  long long na = 0;
  long long nb = 0;
  struct Elem {
    int top = 0;
    std::vector<int> vals;
  };
  std::vector<Elem> elements;
  std::vector<std::vector<int>> mul;  // mul[i][j] = index of elements[i]*elements[j]
  std::vector<int> inv;

  std::size_t size() const { return elements.size(); }
  int index_of(const Elem& e) const;
};

FiniteGroupTable enumerate_finite_wreath(const Group& a, const Group& b,
                                         std::size_t bound = 100000);

// Exhaustive scan for z with z x z^-1 = y; index of the first such z.
std::optional<int> brute_conjugacy(const FiniteGroupTable& t, int x, int y);

// Partition of the table into conjugacy classes. The scan over elements is
// independent per element; `parallel` switches the OpenMP kernel on, the
// serial path is the reference.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroupTable& t, bool parallel = false);
void dump_classes_csv(const FiniteGroupTable& t, std::ostream& out);

// Bridges between table indices and pair form (rank-1 words on each side).
WreathElement table_elem_to_wreath(const FiniteGroupTable& t, int idx);
int wreath_to_table_index(const FiniteGroupTable& t, const WreathElement& e, const Group& a,
                          const Group& b);

// Enumerates reduced words s with |s| <= max_len in length-lexicographic
// order and returns the first with s x s^-1 = y in G. Not finding one proves
// nothing; finding one is a certificate.
std::optional<Word> bounded_conjugator_search(const Group& g, const Word& x, const Word& y,
                                              int max_len);

// Batch variant: canonical keys of all conjugates s x s^-1 with |s| <= max_len,
// each mapped to the first s producing it (same enumeration order as above).
std::vector<std::pair<std::string, Word>> bounded_conjugate_map(const Group& g, const Word& x,
                                                                int max_len);

}  // namespace solvcore
