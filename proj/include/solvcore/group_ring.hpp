#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "solvcore/group.hpp"

namespace solvcore {

// One summand of a formal integer combination of B-elements.
struct RingTerm {
  long long coeff = 0;
  Word elt;
};

// Sparse element of the integral group ring Z[B]: collected terms with
// pairwise distinct group elements and nonzero coefficients, kept in
// first-seen order.
struct GroupRing {
  std::vector<RingTerm> terms;
  bool is_zero() const { return terms.empty(); }
};

// How term collection decides element equality.
enum class CollectMode {
  Keys,      // canonical_key hashing (default)
  Pairwise,  // pairwise word-problem comparisons with a class cache
};

// Accumulates (coeff, element) pairs and merges equal group elements.
class TermCollector {
 public:
  explicit TermCollector(const Group& b, CollectMode mode = CollectMode::Keys);
  void add(long long coeff, const Word& elt);
  void add_ring(const GroupRing& p, long long scale = 1);
  void add_ring_lmul(const Word& g, const GroupRing& p, long long scale = 1);
  GroupRing take();

 private:
  std::size_t slot_for(const Word& elt);
  const Group& b_;
  CollectMode mode_;
  std::vector<RingTerm> terms_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

GroupRing ring_collect(const Group& b, const std::vector<RingTerm>& raw,
                       CollectMode mode = CollectMode::Keys);
GroupRing ring_add(const Group& b, const GroupRing& p, const GroupRing& q);
GroupRing ring_sub(const Group& b, const GroupRing& p, const GroupRing& q);
GroupRing ring_neg(const GroupRing& p);
GroupRing ring_scale(long long n, const GroupRing& p);
// g * p and p * g: left/right translation of every term.
GroupRing ring_lmul(const Group& b, const Word& g, const GroupRing& p);
GroupRing ring_rmul(const Group& b, const GroupRing& p, const Word& g);
bool ring_equal(const Group& b, const GroupRing& p, const GroupRing& q);
std::string format_ring(const GroupRing& p, const Group& b);

}  // namespace solvcore
