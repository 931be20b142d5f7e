#include "solvcore/magnus.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <unordered_map>

namespace solvcore {

namespace {

Word gen_word(int rank, int code) { return Word::normalize(rank, std::vector<int>{code}); }

std::vector<GroupRing> zero_coords(int r) { return std::vector<GroupRing>(std::size_t(r)); }

}  // namespace

MagnusImage magnus_identity(const Group& b, int r) {
  (void)b;
  return MagnusImage{Word::identity(b.ngens()), zero_coords(r)};
}

MagnusImage magnus_image(const Word& w, const Group& b) {
  const int r = b.ngens();
  if (w.rank() != r) {
    throw AlphabetError("word rank " + std::to_string(w.rank()) + " does not match base group " +
                        b.to_string());
  }
  std::vector<TermCollector> coords;
  coords.reserve(std::size_t(r));
  for (int i = 0; i < r; ++i) coords.emplace_back(b);
  Word prefix = Word::identity(r);
  for (int code : w.letters()) {
    int g = std::abs(code);
    if (code > 0) {
      coords[std::size_t(g - 1)].add(1, prefix);
      prefix = shorten(b, concat(prefix, gen_word(r, code)));
    } else {
      prefix = shorten(b, concat(prefix, gen_word(r, code)));
      coords[std::size_t(g - 1)].add(-1, prefix);
    }
  }
  MagnusImage m;
  m.mu = std::move(prefix);
  m.u.reserve(std::size_t(r));
  for (auto& c : coords) m.u.push_back(c.take());
  assert(image_membership(b, m));
  return m;
}

MagnusImage magnus_mul(const Group& b, const MagnusImage& m1, const MagnusImage& m2) {
  if (m1.u.size() != m2.u.size()) {
    throw AlphabetError("matrix coordinate counts differ");
  }
  MagnusImage out;
  out.mu = shorten(b, concat(m1.mu, m2.mu));
  out.u.reserve(m1.u.size());
  for (std::size_t i = 0; i < m1.u.size(); ++i) {
    TermCollector c(b);
    c.add_ring_lmul(m1.mu, m2.u[i]);
    c.add_ring(m1.u[i]);
    out.u.push_back(c.take());
  }
  return out;
}

MagnusImage magnus_inv(const Group& b, const MagnusImage& m) {
  MagnusImage out;
  out.mu = shorten(b, invert(m.mu));
  out.u.reserve(m.u.size());
  for (const auto& coord : m.u) {
    TermCollector c(b);
    c.add_ring_lmul(out.mu, coord, -1);
    out.u.push_back(c.take());
  }
  return out;
}

MagnusImage magnus_pow(const Group& b, const MagnusImage& m, long long n) {
  MagnusImage base = n < 0 ? magnus_inv(b, m) : m;
  long long k = n < 0 ? -n : n;
  MagnusImage acc = magnus_identity(b, static_cast<int>(m.u.size()));
  MagnusImage sq = base;
  while (k > 0) {
    if (k & 1) acc = magnus_mul(b, acc, sq);
    if (k >>= 1) sq = magnus_mul(b, sq, sq);
  }
  return acc;
}

bool magnus_equal(const Group& b, const MagnusImage& m1, const MagnusImage& m2) {
  if (m1.u.size() != m2.u.size()) return false;
  for (std::size_t i = 0; i < m1.u.size(); ++i) {
    if (!ring_equal(b, m1.u[i], m2.u[i])) return false;
  }
  return elements_equal(b, m1.mu, m2.mu);
}

bool magnus_is_identity(const Group& b, const MagnusImage& m) {
  for (const auto& coord : m.u) {
    if (!coord.is_zero()) return false;
  }
  return wp(b, m.mu);
}

WreathElement magnus_to_wreath(const MagnusImage& m, const Group& b) {
  const int r = static_cast<int>(m.u.size());
  const Group a = Group::free_abelian(r);
  std::vector<std::pair<Word, Word>> entries;
  for (int i = 0; i < r; ++i) {
    for (const auto& term : m.u[std::size_t(i)].terms) {
      Word point = shorten(b, concat(invert(term.elt), m.mu));
      Word value = word_pow(gen_word(r, i + 1), term.coeff);
      entries.emplace_back(std::move(point), std::move(value));
    }
  }
  return w_normalize(a, b, m.mu, std::move(entries));
}

MagnusImage wreath_to_magnus(const WreathElement& e, const Group& a, const Group& b) {
  if (a.kind() != Group::Kind::FreeAbelian) {
    throw std::invalid_argument("matrix form needs a free abelian function group, got " +
                                a.to_string());
  }
  const int r = a.rank();
  MagnusImage m;
  m.mu = e.top;
  std::vector<TermCollector> coords;
  coords.reserve(std::size_t(r));
  for (int i = 0; i < r; ++i) coords.emplace_back(b);
  for (const auto& [point, value] : e.support) {
    Word beta = shorten(b, concat(e.top, invert(point)));
    auto exps = abelianization(value, r);
    for (int i = 0; i < r; ++i) {
      if (exps[std::size_t(i)] != 0) coords[std::size_t(i)].add(exps[std::size_t(i)], beta);
    }
  }
  m.u.reserve(std::size_t(r));
  for (auto& c : coords) m.u.push_back(c.take());
  return m;
}

GroupRing membership_defect(const Group& b, const MagnusImage& m) {
  const int r = static_cast<int>(m.u.size());
  TermCollector acc(b);
  for (int i = 0; i < r; ++i) {
    Word xi = gen_word(b.ngens(), i + 1);
    for (const auto& term : m.u[std::size_t(i)].terms) {
      acc.add(term.coeff, shorten(b, concat(term.elt, xi)));
      acc.add(-term.coeff, term.elt);
    }
  }
  acc.add(-1, m.mu);
  acc.add(1, Word::identity(b.ngens()));
  return acc.take();
}

bool image_membership(const Group& b, const MagnusImage& m) {
  return membership_defect(b, m).is_zero();
}

namespace {

// u read as an integer flow on the Cayley graph of B: the coefficient of
// beta in coordinate i is the net number of traversals of the edge
// beta -> beta*x_i.
struct FlowState {
  const Group& b;
  int r;
  struct Edge {
    Word tail;
    int gen;
  };
  std::vector<Edge> edges;
  std::vector<long long> flow;
  std::unordered_map<std::string, std::size_t> slots;

  std::size_t slot(const Word& tail, int gen, const std::string& tail_key) {
    std::string key = tail_key + "/" + std::to_string(gen);
    auto it = slots.find(key);
    if (it != slots.end()) return it->second;
    std::size_t s = edges.size();
    slots.emplace(std::move(key), s);
    edges.push_back({tail, gen});
    flow.push_back(0);
    return s;
  }

  // First consuming move at `pos`, smallest generator first, forward before
  // backward. Returns the letter code, or 0.
  int available_move(const Word& pos, const std::string& pos_key) {
    for (int g = 1; g <= r; ++g) {
      auto it = slots.find(pos_key + "/" + std::to_string(g));
      if (it != slots.end() && flow[it->second] > 0) return g;
      Word back_tail = shorten(b, concat(pos, gen_word(r, -g)));
      auto jt = slots.find(canonical_key(b, back_tail) + "/" + std::to_string(g));
      if (jt != slots.end() && flow[jt->second] < 0) return -g;
    }
    return 0;
  }

  void consume(const Word& pos, const std::string& pos_key, int code) {
    if (code > 0) {
      flow[slot(pos, code, pos_key)] -= 1;
    } else {
      Word tail = shorten(b, concat(pos, gen_word(r, code)));
      flow[slot(tail, -code, canonical_key(b, tail))] += 1;
    }
  }
};

}  // namespace

Word magnus_preimage(const Group& b, const MagnusImage& m) {
  if (!image_membership(b, m)) {
    throw NotInImageError("matrix violates the membership identity, no preimage exists");
  }
  const int r = static_cast<int>(m.u.size());
  FlowState fs{b, r, {}, {}, {}};
  for (int i = 0; i < r; ++i) {
    for (const auto& term : m.u[std::size_t(i)].terms) {
      fs.flow[fs.slot(term.elt, i + 1, canonical_key(b, term.elt))] += term.coeff;
    }
  }

  std::vector<int> raw;
  Word pos = Word::identity(r);
  std::string pos_key = canonical_key(b, pos);
  auto walk = [&](int code) {
    fs.consume(pos, pos_key, code);
    raw.push_back(code);
    pos = concat(pos, gen_word(r, code));
    pos_key = canonical_key(b, pos);
  };

  // Greedy phase: a consuming walk from the identity can only halt at mu,
  // after which the residual is a circulation.
  while (int code = fs.available_move(pos, pos_key)) walk(code);
  if (!elements_equal(b, pos, m.mu)) {
    throw VerificationError("flow walk halted away from the target vertex");
  }

  // Splice phase: reach each leftover circulation through a canceling
  // detour, consume it as a closed greedy walk, and come back.
  for (;;) {
    std::size_t pending = fs.edges.size();
    for (std::size_t i = 0; i < fs.edges.size(); ++i) {
      if (fs.flow[i] != 0) {
        pending = i;
        break;
      }
    }
    if (pending == fs.edges.size()) break;
    Word target = fs.flow[pending] > 0
                      ? fs.edges[pending].tail
                      : concat(fs.edges[pending].tail, gen_word(r, fs.edges[pending].gen));
    Word detour = concat(invert(pos), target);
    for (int code : detour.letters()) {
      raw.push_back(code);  // net-zero once walked back, no flow bookkeeping
    }
    Word saved_pos = pos;
    pos = target;
    pos_key = canonical_key(b, pos);
    while (int code = fs.available_move(pos, pos_key)) walk(code);
    if (!elements_equal(b, pos, target)) {
      throw VerificationError("circulation walk failed to close");
    }
    Word way_back = invert(detour);
    for (int code : way_back.letters()) raw.push_back(code);
    pos = saved_pos;
    pos_key = canonical_key(b, pos);
  }

  Word result = Word::normalize(r, raw);
  if (!magnus_equal(b, magnus_image(result, b), m)) {
    throw VerificationError("reconstructed word does not re-embed to the given matrix");
  }
  return result;
}

bool wp_solvable(int d, int r, const Word& w) {
  if (d < 1 || r < 1) throw std::invalid_argument("degree and rank must be positive");
  if (w.rank() != r) {
    throw AlphabetError("word rank " + std::to_string(w.rank()) + " does not match rank " +
                        std::to_string(r));
  }
  if (d == 1) {
    auto e = abelianization(w, r);
    return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
  }
  const Group base = Group::free_solvable(d - 1, r);
  MagnusImage m = magnus_image(w, base);
  for (const auto& coord : m.u) {
    if (!coord.is_zero()) return false;
  }
  return wp(base, m.mu);
}

std::optional<long long> pp_solvable(int d, int r, const Word& x, const Word& y) {
  if (wp_solvable(d, r, y)) {
    return wp_solvable(d, r, x) ? std::optional<long long>(0) : std::nullopt;
  }
  if (wp_solvable(d, r, x)) return 0;
  if (d == 1) return pp(Group::free_abelian(r), x, y);

  const Group base = Group::free_solvable(d - 1, r);
  auto ay = abelianization(y, r);
  bool y_ab_zero = std::all_of(ay.begin(), ay.end(), [](long long v) { return v == 0; });

  long long n = 0;
  if (!y_ab_zero) {
    // Unique candidate from the abelianization.
    auto cand = pp(Group::free_abelian(r), x, y);
    if (!cand) return std::nullopt;
    n = *cand;
  } else if (!wp(base, y)) {
    // y is a commutator-subgroup element visible one level down.
    auto cand = pp_solvable(d - 1, r, x, y);
    if (!cand) return std::nullopt;
    n = *cand;
  } else {
    // mu(y) is trivial, so powers scale the module coordinates linearly:
    // x = y^n iff mu(x) is trivial and u_x = n * u_y.
    if (!wp(base, x)) return std::nullopt;
    MagnusImage my = magnus_image(y, base);
    MagnusImage mx = magnus_image(x, base);
    std::size_t pivot = 0;
    while (pivot < my.u.size() && my.u[pivot].is_zero()) ++pivot;
    if (pivot == my.u.size()) return std::nullopt;  // y trivial, handled above
    const RingTerm& lead = my.u[pivot].terms.front();
    long long matched = 0;
    std::string lead_key = canonical_key(base, lead.elt);
    for (const auto& term : mx.u[pivot].terms) {
      if (canonical_key(base, term.elt) == lead_key) {
        matched = term.coeff;
        break;
      }
    }
    if (matched % lead.coeff != 0) return std::nullopt;
    n = matched / lead.coeff;
    for (std::size_t i = 0; i < my.u.size(); ++i) {
      if (!ring_equal(base, mx.u[i], ring_scale(n, my.u[i]))) return std::nullopt;
    }
    return n;
  }

  // Confirm x = y^n in S(d,r) through the embedding.
  MagnusImage mx = magnus_image(x, base);
  MagnusImage myn = magnus_pow(base, magnus_image(y, base), n);
  if (!magnus_equal(base, mx, myn)) return std::nullopt;
  return n;
}

std::string format_magnus(const MagnusImage& m, const Group& b) {
  std::ostringstream out;
  out << "mu = " << format_word(m.mu, b.a_gens());
  for (std::size_t i = 0; i < m.u.size(); ++i) {
    out << " ; u[" << (i + 1) << "] = " << format_ring(m.u[i], b);
  }
  return out.str();
}

}  // namespace solvcore
