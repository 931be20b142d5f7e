#include "solvcore/group_ring.hpp"

#include <sstream>

namespace solvcore {

TermCollector::TermCollector(const Group& b, CollectMode mode) : b_(b), mode_(mode) {}

std::size_t TermCollector::slot_for(const Word& elt) {
  if (mode_ == CollectMode::Keys) {
    std::string key = canonical_key(b_, elt);
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    std::size_t slot = terms_.size();
    by_key_.emplace(std::move(key), slot);
    terms_.push_back({0, shorten(b_, elt)});
    return slot;
  }
  // Pairwise mode: compare against one representative per discovered class.
  // The representative list doubles as the cache of known equalities.
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (elements_equal(b_, terms_[i].elt, elt)) return i;
  }
  terms_.push_back({0, shorten(b_, elt)});
  return terms_.size() - 1;
}

void TermCollector::add(long long coeff, const Word& elt) {
  if (coeff == 0) return;
  terms_[slot_for(elt)].coeff += coeff;
}

void TermCollector::add_ring(const GroupRing& p, long long scale) {
  for (const auto& t : p.terms) add(t.coeff * scale, t.elt);
}

void TermCollector::add_ring_lmul(const Word& g, const GroupRing& p, long long scale) {
  for (const auto& t : p.terms) add(t.coeff * scale, shorten(b_, concat(g, t.elt)));
}

GroupRing TermCollector::take() {
  GroupRing out;
  out.terms.reserve(terms_.size());
  for (auto& t : terms_) {
    if (t.coeff != 0) out.terms.push_back(std::move(t));
  }
  terms_.clear();
  by_key_.clear();
  return out;
}

GroupRing ring_collect(const Group& b, const std::vector<RingTerm>& raw, CollectMode mode) {
  TermCollector c(b, mode);
  for (const auto& t : raw) c.add(t.coeff, t.elt);
  return c.take();
}

GroupRing ring_add(const Group& b, const GroupRing& p, const GroupRing& q) {
  TermCollector c(b);
  c.add_ring(p);
  c.add_ring(q);
  return c.take();
}

GroupRing ring_sub(const Group& b, const GroupRing& p, const GroupRing& q) {
  TermCollector c(b);
  c.add_ring(p);
  c.add_ring(q, -1);
  return c.take();
}

GroupRing ring_neg(const GroupRing& p) {
  GroupRing out = p;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

GroupRing ring_scale(long long n, const GroupRing& p) {
  if (n == 0) return {};
  GroupRing out = p;
  for (auto& t : out.terms) t.coeff *= n;
  return out;
}

GroupRing ring_lmul(const Group& b, const Word& g, const GroupRing& p) {
  TermCollector c(b);
  c.add_ring_lmul(g, p);
  return c.take();
}

GroupRing ring_rmul(const Group& b, const GroupRing& p, const Word& g) {
  TermCollector c(b);
  for (const auto& t : p.terms) c.add(t.coeff, shorten(b, concat(t.elt, g)));
  return c.take();
}

bool ring_equal(const Group& b, const GroupRing& p, const GroupRing& q) {
  return ring_sub(b, p, q).is_zero();
}

std::string format_ring(const GroupRing& p, const Group& b) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms) {
    if (!first) out << " + ";
    first = false;
    out << t.coeff << '*' << format_word(t.elt, b);
  }
  return out.str();
}

}  // namespace solvcore
