#include "solvcore/oracle.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solvcore {

namespace {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long checked_pow(long long base, long long exp, long long limit) {
  long long v = 1;
  for (long long i = 0; i < exp; ++i) {
    if (v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

}  // namespace

int FiniteGroupTable::index_of(const Elem& e) const {
  long long idx = 0;
  long long stride = 1;
  for (long long j = 0; j < nb; ++j) {
    idx += e.vals[std::size_t(j)] * stride;
    stride *= na;
  }
  idx += e.top * stride;
  return static_cast<int>(idx);
}

FiniteGroupTable enumerate_finite_wreath(const Group& a, const Group& b, std::size_t bound) {
  if (a.kind() != Group::Kind::FiniteCyclic || b.kind() != Group::Kind::FiniteCyclic) {
    throw std::invalid_argument("finite enumeration needs cyclic factors, got wr(" +
                                a.to_string() + "," + b.to_string() + ")");
  }
  FiniteGroupTable t;
  t.na = a.modulus();
  t.nb = b.modulus();
  long long fcount = checked_pow(t.na, t.nb, static_cast<long long>(bound));
  if (fcount > static_cast<long long>(bound) || fcount * t.nb > static_cast<long long>(bound)) {
    throw SizeExceededError("wreath product size exceeds bound " + std::to_string(bound));
  }
  long long n = fcount * t.nb;
  if (n * n > 50000000LL) {
    throw SizeExceededError("multiplication table with " + std::to_string(n * n) +
                            " entries is too large");
  }

  t.elements.resize(std::size_t(n));
  for (long long idx = 0; idx < n; ++idx) {
    auto& e = t.elements[std::size_t(idx)];
    e.vals.resize(std::size_t(t.nb));
    long long rest = idx;
    for (long long j = 0; j < t.nb; ++j) {
      e.vals[std::size_t(j)] = static_cast<int>(rest % t.na);
      rest /= t.na;
    }
    e.top = static_cast<int>(rest);
  }

  // b f c g = bc f^c g with f^c(t) = f(t c^-1).
  t.mul.assign(std::size_t(n), std::vector<int>(std::size_t(n)));
  FiniteGroupTable::Elem prod;
  prod.vals.resize(std::size_t(t.nb));
  for (long long i = 0; i < n; ++i) {
    const auto& u = t.elements[std::size_t(i)];
    for (long long j = 0; j < n; ++j) {
      const auto& v = t.elements[std::size_t(j)];
      prod.top = static_cast<int>((u.top + v.top) % t.nb);
      for (long long s = 0; s < t.nb; ++s) {
        long long shifted = floor_mod(s - v.top, t.nb);
        prod.vals[std::size_t(s)] =
            static_cast<int>((u.vals[std::size_t(shifted)] + v.vals[std::size_t(s)]) % t.na);
      }
      t.mul[std::size_t(i)][std::size_t(j)] = t.index_of(prod);
    }
  }

  t.inv.resize(std::size_t(n));
  for (long long i = 0; i < n; ++i) {
    const auto& u = t.elements[std::size_t(i)];
    prod.top = static_cast<int>(floor_mod(-u.top, t.nb));
    for (long long s = 0; s < t.nb; ++s) {
      long long shifted = floor_mod(s + u.top, t.nb);
      prod.vals[std::size_t(s)] =
          static_cast<int>(floor_mod(-u.vals[std::size_t(shifted)], t.na));
    }
    t.inv[std::size_t(i)] = t.index_of(prod);
  }
  return t;
}

std::optional<int> brute_conjugacy(const FiniteGroupTable& t, int x, int y) {
  const int n = static_cast<int>(t.size());
  for (int z = 0; z < n; ++z) {
    if (t.mul[std::size_t(t.mul[std::size_t(z)][std::size_t(x)])][std::size_t(t.inv[std::size_t(z)])] == y) {
      return z;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroupTable& t, bool parallel) {
  const int n = static_cast<int>(t.size());
  // Minimal conjugate of each element; independent per element.
  std::vector<int> rep(static_cast<std::size_t>(n));
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int x = 0; x < n; ++x) {
      int best = x;
      for (int z = 0; z < n; ++z) {
        int c = t.mul[std::size_t(t.mul[std::size_t(z)][std::size_t(x)])][std::size_t(
            t.inv[std::size_t(z)])];
        best = std::min(best, c);
      }
      rep[std::size_t(x)] = best;
    }
  } else {
    for (int x = 0; x < n; ++x) {
      int best = x;
      for (int z = 0; z < n; ++z) {
        int c = t.mul[std::size_t(t.mul[std::size_t(z)][std::size_t(x)])][std::size_t(
            t.inv[std::size_t(z)])];
        best = std::min(best, c);
      }
      rep[std::size_t(x)] = best;
    }
  }
  std::map<int, std::vector<int>> grouped;
  for (int x = 0; x < n; ++x) grouped[rep[std::size_t(x)]].push_back(x);
  std::vector<std::vector<int>> classes;
  classes.reserve(grouped.size());
  for (auto& [r, members] : grouped) classes.push_back(std::move(members));
  return classes;
}

void dump_classes_csv(const FiniteGroupTable& t, std::ostream& out) {
  auto classes = conjugacy_classes(t, false);
  out << "class,representative,size,members\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << c << ',' << classes[c].front() << ',' << classes[c].size() << ',';
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      if (i) out << ' ';
      out << classes[c][i];
    }
    out << '\n';
  }
}

WreathElement table_elem_to_wreath(const FiniteGroupTable& t, int idx) {
  const Group a = Group::finite_cyclic(t.na);
  const Group b = Group::finite_cyclic(t.nb);
  const auto& e = t.elements[std::size_t(idx)];
  std::vector<std::pair<Word, Word>> entries;
  Word bgen = Word::normalize(1, std::vector<int>{1});
  for (long long s = 0; s < t.nb; ++s) {
    int v = e.vals[std::size_t(s)];
    if (v != 0) entries.emplace_back(word_pow(bgen, s), word_pow(bgen, v));
  }
  return w_normalize(a, b, word_pow(bgen, e.top), std::move(entries));
}

int wreath_to_table_index(const FiniteGroupTable& t, const WreathElement& e, const Group& a,
                          const Group& b) {
  (void)a;
  (void)b;
  FiniteGroupTable::Elem enc;
  enc.top = static_cast<int>(floor_mod(exponent_sum(e.top), t.nb));
  enc.vals.assign(std::size_t(t.nb), 0);
  for (const auto& [key, val] : e.support) {
    long long pos = floor_mod(exponent_sum(key), t.nb);
    enc.vals[std::size_t(pos)] = static_cast<int>(
        floor_mod(enc.vals[std::size_t(pos)] + exponent_sum(val), t.na));
  }
  return t.index_of(enc);
}

namespace {

// Reduced words of length <= max_len in length order, then by letter codes
// x1 < X1 < x2 < X2 < ...
template <typename Fn>
void enumerate_reduced_words(int rank, int max_len, Fn&& visit) {
  std::vector<Word> layer{Word::identity(rank)};
  if (visit(layer.front())) return;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * std::size_t(2 * rank));
    for (const Word& s : layer) {
      int last = s.empty() ? 0 : s.letter(s.size() - 1);
      for (int g = 1; g <= rank; ++g) {
        for (int code : {g, -g}) {
          if (code == -last) continue;
          std::vector<int> raw = s.letters();
          raw.push_back(code);
          Word cand = Word::normalize(rank, raw);
          if (visit(cand)) return;
          next.push_back(std::move(cand));
        }
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

std::optional<Word> bounded_conjugator_search(const Group& g, const Word& x, const Word& y,
                                              int max_len) {
  std::optional<Word> found;
  Word target = invert(y);
  enumerate_reduced_words(g.ngens(), max_len, [&](const Word& s) {
    if (wp(g, concat(conj_by(s, x), target))) {
      found = s;
      return true;
    }
    return false;
  });
  return found;
}

std::vector<std::pair<std::string, Word>> bounded_conjugate_map(const Group& g, const Word& x,
                                                                int max_len) {
  std::vector<std::pair<std::string, Word>> out;
  std::unordered_map<std::string, bool> seen;
  enumerate_reduced_words(g.ngens(), max_len, [&](const Word& s) {
    std::string key = canonical_key(g, conj_by(s, x));
    if (seen.emplace(key, true).second) out.emplace_back(std::move(key), s);
    return false;
  });
  return out;
}

}  // namespace solvcore
