#include "solvcore/wreath.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace solvcore {

namespace {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void trace_line(const Options& opts, const std::string& line) {
  if (opts.trace) *opts.trace << "# " << line << '\n';
}

// B-side words print with y-tokens; a nested wreath B keeps its own split.
std::string format_b_word(const Word& w, const Group& b) {
  return format_word(w, b.kind() == Group::Kind::Wreath ? b.a_gens() : 0);
}

std::vector<Word> support_keys(const WreathElement& e) {
  std::vector<Word> keys;
  keys.reserve(e.support.size());
  for (const auto& [k, v] : e.support) keys.push_back(k);
  return keys;
}

}  // namespace

WreathElement w_identity(const Group& a, const Group& b) {
  (void)a;
  return WreathElement{Word::identity(b.ngens()), {}};
}

WreathElement w_normalize(const Group& a, const Group& b, Word top,
                          std::vector<std::pair<Word, Word>> entries) {
  WreathElement out;
  out.top = shorten(b, std::move(top));
  std::unordered_map<std::string, std::size_t> slots;
  for (auto& [key, val] : entries) {
    std::string k = canonical_key(b, key);
    auto it = slots.find(k);
    if (it == slots.end()) {
      slots.emplace(std::move(k), out.support.size());
      out.support.emplace_back(shorten(b, key), shorten(a, val));
    } else {
      auto& slot = out.support[it->second];
      slot.second = shorten(a, concat(slot.second, val));
    }
  }
  std::erase_if(out.support, [&](const auto& kv) { return wp(a, kv.second); });
  return out;
}

WreathElement w_mul(const WreathElement& u, const WreathElement& v, const Group& a,
                    const Group& b) {
  // b f c g = bc f^c g with f^c(t) = f(t c^-1): u's entry at k lands on k*c.
  std::vector<std::pair<Word, Word>> entries;
  entries.reserve(u.support.size() + v.support.size());
  for (const auto& [k, val] : u.support) entries.emplace_back(concat(k, v.top), val);
  for (const auto& [k, val] : v.support) entries.emplace_back(k, val);
  return w_normalize(a, b, concat(u.top, v.top), std::move(entries));
}

WreathElement w_inv(const WreathElement& u, const Group& a, const Group& b) {
  Word inv_top = invert(u.top);
  std::vector<std::pair<Word, Word>> entries;
  entries.reserve(u.support.size());
  for (const auto& [k, val] : u.support) entries.emplace_back(concat(k, inv_top), invert(val));
  return w_normalize(a, b, std::move(inv_top), std::move(entries));
}

bool w_is_identity(const WreathElement& u, const Group& a, const Group& b) {
  (void)a;
  return u.support.empty() && wp(b, u.top);
}

bool w_equal(const WreathElement& u, const WreathElement& v, const Group& a, const Group& b) {
  if (u.support.size() != v.support.size()) return false;
  if (!elements_equal(b, u.top, v.top)) return false;
  std::unordered_map<std::string, const Word*> values;
  for (const auto& [k, val] : v.support) values.emplace(canonical_key(b, k), &val);
  for (const auto& [k, val] : u.support) {
    auto it = values.find(canonical_key(b, k));
    if (it == values.end()) return false;
    if (!elements_equal(a, val, *it->second)) return false;
  }
  return true;
}

Word w_value_at(const WreathElement& e, const Word& key, const Group& a, const Group& b) {
  for (const auto& [k, val] : e.support) {
    if (elements_equal(b, k, key)) return val;
  }
  return Word::identity(a.ngens());
}

WreathElement to_pair_form(const Word& w, const Group& a, const Group& b) {
  const int na = a.ngens();
  const int nb = b.ngens();
  if (w.rank() != na + nb) {
    throw AlphabetError("mixed word rank " + std::to_string(w.rank()) +
                        " does not match wreath alphabet of rank " + std::to_string(na + nb));
  }
  // Suffix products of the B-letters, right to left; each A-letter is keyed
  // by the B-product strictly to its right.
  Word suffix = Word::identity(nb);
  std::vector<std::pair<Word, Word>> rev_entries;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    int code = *it;
    int g = std::abs(code);
    if (g <= na) {
      Word val = Word::normalize(na, std::vector<int>{code});
      rev_entries.emplace_back(suffix, std::move(val));
    } else {
      int bg = g - na;
      Word letter = Word::normalize(nb, std::vector<int>{code > 0 ? bg : -bg});
      suffix = shorten(b, concat(letter, suffix));
    }
  }
  std::reverse(rev_entries.begin(), rev_entries.end());
  return w_normalize(a, b, suffix, std::move(rev_entries));
}

Word pair_to_word(const WreathElement& e, const Group& a, const Group& b) {
  const int na = a.ngens();
  const int nb = b.ngens();
  auto emit = [&](std::vector<int>& raw, const Word& word, bool is_b) {
    for (int code : word.letters()) {
      int g = std::abs(code);
      int mapped = is_b ? g + na : g;
      raw.push_back(code > 0 ? mapped : -mapped);
    }
  };
  std::vector<int> raw;
  emit(raw, e.top, true);
  for (const auto& [key, val] : e.support) {
    emit(raw, invert(key), true);
    emit(raw, val, false);
    emit(raw, key, true);
  }
  return Word::normalize(na + nb, raw);
}

std::string format_pair(const WreathElement& e, const Group& a, const Group& b) {
  std::ostringstream out;
  out << format_b_word(e.top, b);
  if (e.support.empty()) return out.str();
  out << " |";
  bool first = true;
  for (const auto& [key, val] : e.support) {
    out << (first ? " " : " ; ") << format_b_word(key, b) << " -> "
        << format_word(val, a.a_gens());
    first = false;
  }
  return out.str();
}

CosetReps coset_reps(const Word& base, const std::vector<Word>& points, const Group& b_group) {
  CosetReps out;
  out.base = base;
  for (const Word& p : points) {
    bool placed = false;
    for (const Word& rep : out.reps) {
      if (pp(b_group, concat(invert(rep), p), base)) {
        placed = true;
        break;
      }
    }
    if (!placed) out.reps.push_back(shorten(b_group, p));
  }
  return out;
}

Word pi_map(const Word& t, const Word& gamma, const WreathElement& e, const Word& base,
            const Group& a, const Group& b_group) {
  Order ob = order_of(b_group, base);
  std::map<long long, const Word*> factors;
  for (const auto& [key, val] : e.support) {
    auto j = pp(b_group, concat(concat(invert(t), key), gamma), base);
    if (!j) continue;
    long long idx = ob.finite ? floor_mod(*j, ob.n) : *j;
    if (!factors.emplace(idx, &val).second) {
      throw VerificationError("distinct support keys hit the same coset index");
    }
  }
  Word out = Word::identity(a.ngens());
  for (const auto& [idx, val] : factors) out = shorten(a, concat(out, *val));
  return out;
}

namespace {

// Shared machinery for the conjugacy decision and the search.
struct ConjContext {
  const WreathElement& x;
  const WreathElement& y;
  const Group& a;
  const Group& b;
  const Options& opts;
  bool abelian_equality = false;

  bool a_conjugate(const Word& u, const Word& v) const {
    return abelian_equality ? elements_equal(a, u, v) : cp(a, u, v, opts);
  }
};

// Extends the rep set with one representative per new coset met by `extra`.
std::vector<Word> extend_reps(const std::vector<Word>& reps, const std::vector<Word>& extra,
                              const Word& base, const Group& b_group) {
  std::vector<Word> out = reps;
  for (const Word& p : extra) {
    bool placed = false;
    for (const Word& rep : out) {
      if (pp(b_group, concat(invert(rep), p), base)) {
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back(p);
  }
  return out;
}

// Checks the criterion for one explicit candidate d: for every rep t of a
// coset meeting supp(f) or supp(g)d, the f-side and shifted g-side products
// must match (equality for infinite order, conjugacy in A for finite order).
bool candidate_passes(const ConjContext& ctx, const Word& d, const std::vector<Word>& base_reps,
                      bool finite_order) {
  const Word& b_top = ctx.x.top;
  std::vector<Word> extra;
  for (const auto& [k, v] : ctx.y.support) extra.push_back(shorten(ctx.b, concat(k, d)));
  std::vector<Word> reps = extend_reps(base_reps, extra, b_top, ctx.b);
  for (const Word& t : reps) {
    Word lhs = pi_map(t, Word::identity(ctx.b.ngens()), ctx.x, b_top, ctx.a, ctx.b);
    Word rhs;
    if (ctx.abelian_equality && !finite_order) {
      // Translated form: the shifted product equals the plain product over
      // the <c>-coset through t d^-1.
      rhs = pi_map(concat(t, invert(d)), Word::identity(ctx.b.ngens()), ctx.y, ctx.y.top, ctx.a,
                   ctx.b);
    } else {
      rhs = pi_map(t, d, ctx.y, b_top, ctx.a, ctx.b);
    }
    bool ok = finite_order ? ctx.a_conjugate(lhs, rhs) : elements_equal(ctx.a, lhs, rhs);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

WreathDecision decide_wreath_conjugacy(const WreathElement& x, const WreathElement& y,
                                       const Group& a, const Group& b, const Options& opts,
                                       bool abelian_equality) {
  if (abelian_equality && !a.is_abelian()) {
    throw std::invalid_argument("abelian fast path requires an abelian A, got " + a.to_string());
  }
  ConjContext ctx{x, y, a, b, opts, abelian_equality};
  const Word& b_top = x.top;
  const Word& c_top = y.top;
  const Word id_b = Word::identity(b.ngens());

  if (!cp(b, b_top, c_top, opts)) {
    trace_line(opts, "step 1: tops not conjugate in B");
    return {false, 0, std::nullopt};
  }
  trace_line(opts, "step 1: tops conjugate in B");

  std::vector<Word> points = support_keys(x);
  for (const Word& k : support_keys(y)) points.push_back(k);
  CosetReps tb = coset_reps(b_top, points, b);

  std::vector<Word> pi_f(tb.reps.size());
  bool all_f_trivial = true;
  std::size_t anchor = 0;
  for (std::size_t i = 0; i < tb.reps.size(); ++i) {
    pi_f[i] = pi_map(tb.reps[i], id_b, x, b_top, a, b);
    if (all_f_trivial && !wp(a, pi_f[i])) {
      all_f_trivial = false;
      anchor = i;
    }
  }

  if (y.support.empty()) {
    trace_line(opts, all_f_trivial ? "case 1: all f-side products trivial"
                                   : "case 1: nontrivial f-side product, rejected");
    return {all_f_trivial, 1, std::nullopt};
  }

  if (all_f_trivial) {
    CosetReps tc = coset_reps(c_top, support_keys(y), b);
    for (const Word& s : tc.reps) {
      if (!wp(a, pi_map(s, id_b, y, c_top, a, b))) {
        trace_line(opts, "case 2: nontrivial g-side product, rejected");
        return {false, 2, std::nullopt};
      }
    }
    trace_line(opts, "case 2: all g-side products trivial");
    return {true, 2, std::nullopt};
  }

  // Case 3: some f-side product is nontrivial. Any conjugating top d must
  // move a support point of g onto the anchored coset, which pins d to the
  // finite candidate family below.
  const Word& t_k = tb.reps[anchor];
  Order ob = order_of(b, b_top);
  trace_line(opts, ob.finite ? "case 3 (top of finite order " + std::to_string(ob.n) + ")"
                             : "case 3 (top of infinite order)");
  std::unordered_set<std::string> seen;
  auto try_candidate = [&](const Word& d) -> bool {
    if (!seen.insert(canonical_key(b, d)).second) return false;
    if (!elements_equal(b, concat(d, b_top), concat(c_top, d))) {
      trace_line(opts, "candidate d = " + format_b_word(d, b) + ": fails d b = c d");
      return false;
    }
    bool ok = candidate_passes(ctx, d, tb.reps, ob.finite);
    trace_line(opts,
               "candidate d = " + format_b_word(d, b) + (ok ? ": accepted" : ": rejected"));
    return ok;
  };
  for (const auto& [beta, val] : y.support) {
    Word head = concat(invert(beta), t_k);
    if (!ob.finite) {
      Word d = shorten(b, head);
      if (try_candidate(d)) return {true, 3, d};
    } else {
      for (long long j = 0; j < ob.n; ++j) {
        Word d = shorten(b, concat(head, word_pow(b_top, j)));
        if (try_candidate(d)) return {true, 3, d};
      }
    }
  }
  return {false, 3, std::nullopt};
}

bool cp_wreath(const WreathElement& x, const WreathElement& y, const Group& a, const Group& b,
               const Options& opts) {
  return decide_wreath_conjugacy(x, y, a, b, opts, false).conjugate;
}

bool cp_wreath_abelian_fastpath(const WreathElement& x, const WreathElement& y, const Group& a,
                                const Group& b, const Options& opts) {
  return decide_wreath_conjugacy(x, y, a, b, opts, true).conjugate;
}

bool finite_case3_pairwise_match(const WreathElement& x, const WreathElement& y, const Group& a,
                                 const Group& b) {
  const Word id_b = Word::identity(b.ngens());
  std::vector<Word> points = support_keys(x);
  for (const Word& k : support_keys(y)) points.push_back(k);
  CosetReps tb = coset_reps(x.top, points, b);
  CosetReps tc = coset_reps(y.top, support_keys(y), b);
  std::vector<Word> pi_g;
  pi_g.reserve(tc.reps.size());
  for (const Word& s : tc.reps) pi_g.push_back(pi_map(s, id_b, y, y.top, a, b));
  for (const Word& t : tb.reps) {
    Word lhs = pi_map(t, id_b, x, x.top, a, b);
    bool matched = false;
    for (const Word& rhs : pi_g) {
      if (cp(a, lhs, rhs)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::optional<WreathElement> csp_wreath(const WreathElement& x, const WreathElement& y,
                                        const Group& a, const Group& b, const Options& opts) {
  WreathDecision dec = decide_wreath_conjugacy(x, y, a, b, opts, false);
  if (!dec.conjugate) return std::nullopt;
  const Word& b_top = x.top;

  Word d;
  if (dec.witness_d) {
    d = *dec.witness_d;
  } else {
    auto found = csp(b, b_top, y.top, opts);
    if (!found) throw VerificationError("top-level conjugator vanished between cp and csp");
    d = shorten(b, *found);
  }

  Order ob = order_of(b, b_top);
  std::vector<Word> points = support_keys(x);
  for (const auto& [k, v] : y.support) points.push_back(shorten(b, concat(k, d)));
  CosetReps reps = coset_reps(b_top, points, b);

  const Word id_a = Word::identity(a.ngens());
  std::vector<std::pair<Word, Word>> entries;
  for (const Word& t : reps.reps) {
    // Indexed factors along the coset: F[j] = f(t b^j), G[j] = g(t b^j d^-1).
    std::map<long long, Word> f_at, g_at;
    for (const auto& [key, val] : x.support) {
      auto j = pp(b, concat(invert(t), key), b_top);
      if (!j) continue;
      long long idx = ob.finite ? floor_mod(*j, ob.n) : *j;
      if (!f_at.emplace(idx, val).second) {
        throw VerificationError("duplicate coset index on the f side");
      }
    }
    for (const auto& [key, val] : y.support) {
      auto j = pp(b, concat(invert(t), concat(key, d)), b_top);
      if (!j) continue;
      long long idx = ob.finite ? floor_mod(*j, ob.n) : *j;
      if (!g_at.emplace(idx, val).second) {
        throw VerificationError("duplicate coset index on the g side");
      }
    }
    if (f_at.empty() && g_at.empty()) continue;

    long long lo, hi;
    Word alpha = id_a;
    if (ob.finite) {
      lo = 0;
      hi = ob.n - 1;
      Word pf = id_a, pg = id_a;
      for (long long j = lo; j <= hi; ++j) {
        if (auto it = f_at.find(j); it != f_at.end()) pf = shorten(a, concat(pf, it->second));
        if (auto it = g_at.find(j); it != g_at.end()) pg = shorten(a, concat(pg, it->second));
      }
      auto found = csp(a, pf, pg, opts);
      if (!found) throw VerificationError("missing A-conjugator for a matched coset");
      alpha = *found;
    } else {
      lo = hi = f_at.empty() ? g_at.begin()->first : f_at.begin()->first;
      for (const auto& [j, v] : f_at) lo = std::min(lo, j), hi = std::max(hi, j);
      for (const auto& [j, v] : g_at) lo = std::min(lo, j), hi = std::max(hi, j);
    }

    // h(t b^k) = (prod_{j<=k} G_j)^-1 alpha prod_{j<=k} F_j; trivial outside
    // the window, and at the top of the window when the criterion holds.
    Word pf = id_a, pg = id_a;
    for (long long k = lo; k <= hi; ++k) {
      if (auto it = f_at.find(k); it != f_at.end()) pf = shorten(a, concat(pf, it->second));
      if (auto it = g_at.find(k); it != g_at.end()) pg = shorten(a, concat(pg, it->second));
      Word h = shorten(a, concat(invert(pg), concat(alpha, pf)));
      if (!ob.finite && k == hi && !wp(a, h)) {
        throw VerificationError("h fails to close at the top of the support window");
      }
      if (!wp(a, h)) {
        entries.emplace_back(shorten(b, concat(t, word_pow(b_top, k))), h);
      }
    }
  }

  WreathElement z = w_normalize(a, b, d, std::move(entries));
  WreathElement check = w_mul(w_mul(z, x, a, b), w_inv(z, a, b), a, b);
  if (!w_equal(check, y, a, b)) {
    throw VerificationError("constructed wreath conjugator failed verification");
  }
  return z;
}

}  // namespace solvcore
