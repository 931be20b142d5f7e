#include "solvcore/solvable.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace solvcore {

namespace {

void check_rank(int d, int r, const Word& w) {
  if (d < 1 || r < 1) throw std::invalid_argument("degree and rank must be positive");
  if (w.rank() != r) {
    throw AlphabetError("word rank " + std::to_string(w.rank()) + " does not match rank " +
                        std::to_string(r));
  }
}

bool abelian_equal(int r, const Word& x, const Word& y) {
  return abelianization(x, r) == abelianization(y, r);
}

// Solves (c - 1) * U = V in Z[B] for c of infinite order, coordinate V given.
// Along each orbit {c^k beta} the equation is a telescoping recurrence with
// solution w_k = -sum_{j<=k} v_j; solvable iff every orbit sums to zero.
std::optional<GroupRing> solve_shift_equation(const Group& b, const Word& c, const GroupRing& v) {
  struct Orbit {
    Word anchor;
    std::map<long long, long long> coeffs;
  };
  std::vector<Orbit> orbits;
  for (const auto& term : v.terms) {
    bool placed = false;
    for (auto& orbit : orbits) {
      auto k = pp(b, concat(term.elt, invert(orbit.anchor)), c);
      if (k) {
        orbit.coeffs[*k] += term.coeff;
        placed = true;
        break;
      }
    }
    if (!placed) {
      Orbit o;
      o.anchor = term.elt;
      o.coeffs[0] = term.coeff;
      orbits.push_back(std::move(o));
    }
  }
  TermCollector out(b);
  for (const auto& orbit : orbits) {
    long long total = 0;
    for (const auto& [k, coeff] : orbit.coeffs) total += coeff;
    if (total != 0) return std::nullopt;
    long long running = 0;
    long long last = orbit.coeffs.rbegin()->first;
    auto it = orbit.coeffs.begin();
    for (long long k = it->first; k < last; ++k) {
      if (it != orbit.coeffs.end() && it->first == k) {
        running += it->second;
        ++it;
      }
      if (running != 0) out.add(-running, shorten(b, concat(word_pow(c, k), orbit.anchor)));
    }
  }
  return out.take();
}

// Candidate tops for an image conjugator: the wreath witness itself plus a
// spiral of shifts by powers of x's projection.
std::vector<Word> candidate_tops(const Group& base, const Word& z_top, const Word& b_top,
                                 int spread) {
  std::vector<Word> out;
  out.push_back(z_top);
  for (int k = 1; k <= spread; ++k) {
    out.push_back(shorten(base, concat(z_top, word_pow(b_top, k))));
    out.push_back(shorten(base, concat(z_top, word_pow(b_top, -k))));
  }
  return out;
}

std::optional<Word> bfs_conjugator(int d, int r, const Word& x, const Word& y, int budget) {
  Word target_check = invert(y);
  std::vector<Word> layer{Word::identity(r)};
  if (wp_solvable(d, r, concat(x, target_check))) return Word::identity(r);
  for (int len = 1; len <= budget; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * std::size_t(2 * r));
    for (const Word& s : layer) {
      int last = s.empty() ? 0 : s.letter(s.size() - 1);
      for (int g = 1; g <= r; ++g) {
        for (int code : {g, -g}) {
          if (code == -last) continue;
          std::vector<int> raw = s.letters();
          raw.push_back(code);
          Word cand = Word::normalize(r, raw);
          if (wp_solvable(d, r, concat(conj_by(cand, x), target_check))) return cand;
          next.push_back(std::move(cand));
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

bool cp_solvable(int d, int r, const Word& x, const Word& y, const Options& opts) {
  check_rank(d, r, x);
  check_rank(d, r, y);
  if (d == 1) return abelian_equal(r, x, y);
  const Group base = Group::free_solvable(d - 1, r);
  const Group a = Group::free_abelian(r);
  WreathElement ex = magnus_to_wreath(magnus_image(x, base), base);
  WreathElement ey = magnus_to_wreath(magnus_image(y, base), base);
  bool fast = cp_wreath_abelian_fastpath(ex, ey, a, base, opts);
  if (opts.cross_check) {
    bool general = cp_wreath(ex, ey, a, base, opts);
    if (general != fast) {
      throw VerificationError("wreath decision paths disagree in S(" + std::to_string(d) + "," +
                              std::to_string(r) + ")");
    }
  }
  return fast;
}

std::optional<Word> csp_solvable(int d, int r, const Word& x, const Word& y,
                                 const Options& opts) {
  check_rank(d, r, x);
  check_rank(d, r, y);
  if (d == 1) {
    return abelian_equal(r, x, y) ? std::optional<Word>(Word::identity(r)) : std::nullopt;
  }
  const Group base = Group::free_solvable(d - 1, r);
  const Group a = Group::free_abelian(r);
  WreathElement ex = magnus_to_wreath(magnus_image(x, base), base);
  WreathElement ey = magnus_to_wreath(magnus_image(y, base), base);
  auto z = csp_wreath(ex, ey, a, base, opts);
  if (opts.cross_check) {
    bool fast = cp_wreath_abelian_fastpath(ex, ey, a, base, opts);
    if (fast != z.has_value()) {
      throw VerificationError("search and fast-path verdicts disagree");
    }
  }
  if (!z) return std::nullopt;
  Word s = lift_conjugator(*z, x, y, d, r, opts);
  if (!wp_solvable(d, r, concat(conj_by(s, x), invert(y)))) {
    throw VerificationError("lifted conjugator failed the word-problem check");
  }
  return s;
}

Word lift_conjugator(const WreathElement& z, const Word& x, const Word& y, int d, int r,
                     const Options& opts) {
  check_rank(d, r, x);
  check_rank(d, r, y);
  const Group base = Group::free_solvable(d - 1, r);
  auto verified = [&](const Word& s) { return wp_solvable(d, r, concat(conj_by(s, x), invert(y))); };
  auto trace = [&](const std::string& msg) {
    if (opts.trace) *opts.trace << "# lift: " << msg << '\n';
  };

  // The wreath conjugator may already satisfy the membership identity.
  MagnusImage mz = wreath_to_magnus(z, Group::free_abelian(r), base);
  if (image_membership(base, mz)) {
    Word s = magnus_preimage(base, mz);
    if (verified(s)) {
      trace("witness is itself in the image");
      return s;
    }
  }

  MagnusImage mx = magnus_image(x, base);
  MagnusImage my = magnus_image(y, base);
  int spread = 4 + x.size() + y.size();
  std::vector<Word> tops = candidate_tops(base, z.top, mx.mu, spread);

  if (wp(base, my.mu)) {
    // Both projections vanish; any word projecting onto a valid top
    // conjugates, and tops are words already.
    for (const Word& top : tops) {
      if (verified(top)) {
        trace("projection-level conjugator lifted directly");
        return top;
      }
    }
  } else {
    // For each candidate top D solve (mu(y) - 1) U = D u_x - u_y; the
    // solution is the unique conjugator with that top, an image iff the
    // membership identity holds.
    for (const Word& top : tops) {
      if (!elements_equal(base, concat(top, mx.mu), concat(my.mu, top))) continue;
      MagnusImage cand;
      cand.mu = top;
      cand.u.reserve(std::size_t(r));
      bool solved = true;
      for (int i = 0; i < r && solved; ++i) {
        GroupRing v = ring_sub(base, ring_lmul(base, top, mx.u[std::size_t(i)]),
                               my.u[std::size_t(i)]);
        auto u = solve_shift_equation(base, my.mu, v);
        if (!u) {
          solved = false;
          break;
        }
        cand.u.push_back(std::move(*u));
      }
      if (!solved || !image_membership(base, cand)) continue;
      Word s = magnus_preimage(base, cand);
      if (verified(s)) {
        trace("adjusted top produced an image conjugator");
        return s;
      }
    }
  }

  trace("falling back to bounded search, budget " + std::to_string(opts.lift_budget));
  auto s = bfs_conjugator(d, r, x, y, opts.lift_budget);
  if (s && verified(*s)) return *s;
  throw LiftBudgetError(
      "conjugator lifting exhausted all strategies within budget " +
      std::to_string(opts.lift_budget) +
      "; the elements are conjugate, raise SOLVCORE_BUDGET or --budget to search further");
}

}  // namespace solvcore
