#include "solvcore/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "solvcore/magnus.hpp"
#include "solvcore/solvable.hpp"
#include "solvcore/wreath.hpp"

namespace solvcore {

namespace {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Extended gcd: returns g and writes x with a*x = g (mod m).
long long modular_inverse(long long a, long long m) {
  long long old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return floor_mod(old_s, m);
}

Word abelian_word(int rank, const std::vector<long long>& exps) {
  std::vector<int> raw;
  for (int g = 1; g <= rank; ++g) {
    long long e = exps[static_cast<std::size_t>(g - 1)];
    for (long long i = 0; i < std::llabs(e); ++i) raw.push_back(e > 0 ? g : -g);
  }
  return Word::normalize(rank, raw);
}

WreathElement w_pow(const WreathElement& e, long long n, const Group& a, const Group& b) {
  WreathElement base = n < 0 ? w_inv(e, a, b) : e;
  long long k = std::llabs(n);
  WreathElement acc = w_identity(a, b);
  WreathElement sq = base;
  while (k > 0) {
    if (k & 1) acc = w_mul(acc, sq, a, b);
    sq = w_mul(sq, sq, a, b);
    k >>= 1;
  }
  return acc;
}

std::optional<long long> pp_abelian(int rank, const Word& x, const Word& y) {
  auto ax = abelianization(x, rank);
  auto ay = abelianization(y, rank);
  bool y_zero = std::all_of(ay.begin(), ay.end(), [](long long v) { return v == 0; });
  if (y_zero) {
    bool x_zero = std::all_of(ax.begin(), ax.end(), [](long long v) { return v == 0; });
    return x_zero ? std::optional<long long>(0) : std::nullopt;
  }
  std::optional<long long> n;
  for (int i = 0; i < rank; ++i) {
    long long a = ax[static_cast<std::size_t>(i)];
    long long b = ay[static_cast<std::size_t>(i)];
    if (b == 0) {
      if (a != 0) return std::nullopt;  // coordinate forces a = 0, n stays free
      continue;
    }
    if (a % b != 0) return std::nullopt;
    long long q = a / b;
    if (n && *n != q) return std::nullopt;
    n = q;
  }
  return n;  // some coordinate of y is nonzero, so n is set
}

std::optional<long long> pp_cyclic(long long modulus, const Word& x, const Word& y) {
  long long ex = floor_mod(exponent_sum(x), modulus);
  long long ey = floor_mod(exponent_sum(y), modulus);
  if (ey == 0) return ex == 0 ? std::optional<long long>(0) : std::nullopt;
  long long g = std::gcd(ey, modulus);
  if (ex % g != 0) return std::nullopt;
  long long m = modulus / g;
  long long n = floor_mod((ex / g) % m * modular_inverse(ey / g, m), m);
  return n;
}

// Power problem in a wreath product, reduced to the factors and verified.
std::optional<long long> pp_wreath(const Group& g, const Word& xw, const Word& yw) {
  const Group& a = g.left();
  const Group& b = g.right();
  WreathElement x = to_pair_form(xw, a, b);
  WreathElement y = to_pair_form(yw, a, b);
  if (w_is_identity(y, a, b)) {
    return w_is_identity(x, a, b) ? std::optional<long long>(0) : std::nullopt;
  }
  if (w_is_identity(x, a, b)) return 0;
  auto verify = [&](long long n) -> std::optional<long long> {
    if (w_equal(x, w_pow(y, n, a, b), a, b)) return n;
    return std::nullopt;
  };
  Order oy = order_of(g, yw);
  if (oy.finite) {
    for (long long n = 0; n < oy.n; ++n) {
      if (auto hit = verify(n)) return hit;
    }
    return std::nullopt;
  }
  // For a pure function of infinite order some value has infinite order and
  // pins the exponent.
  auto pure_exponent = [&](const WreathElement& xe,
                           const WreathElement& ye) -> std::optional<long long> {
    for (const auto& [key, val] : ye.support) {
      if (order_of(a, val).finite) continue;
      Word xval = w_value_at(xe, key, a, b);
      return pp(a, xval, val);
    }
    return std::nullopt;
  };
  Order otop = order_of(b, y.top);
  if (!otop.finite) {
    auto n = pp(b, x.top, y.top);
    if (!n) return std::nullopt;
    return verify(*n);
  }
  if (otop.n == 1) {  // trivial top: pointwise powers
    if (!wp(b, x.top)) return std::nullopt;
    auto n = pure_exponent(x, y);
    if (!n) return std::nullopt;
    return verify(*n);
  }
  // Finite-order top over an infinite function part: split n = n0 + m*T.
  long long t = otop.n;
  WreathElement y_t = w_pow(y, t, a, b);
  for (long long n0 = 0; n0 < t; ++n0) {
    if (!elements_equal(b, x.top, word_pow(y.top, n0))) continue;
    WreathElement rest = w_mul(x, w_inv(w_pow(y, n0, a, b), a, b), a, b);
    auto m = pure_exponent(rest, y_t);
    if (!m) continue;
    if (auto hit = verify(n0 + *m * t)) return hit;
  }
  return std::nullopt;
}

Order order_wreath(const Group& g, const Word& w) {
  const Group& a = g.left();
  const Group& b = g.right();
  WreathElement e = to_pair_form(w, a, b);
  if (w_is_identity(e, a, b)) return Order::fin(1);
  Order top = order_of(b, e.top);
  if (!top.finite) return Order::infinite();
  // e^N is a pure function; its order is the lcm of the value orders.
  WreathElement p = w_pow(e, top.n, a, b);
  long long l = 1;
  for (const auto& [key, val] : p.support) {
    Order ov = order_of(a, val);
    if (!ov.finite) return Order::infinite();
    l = std::lcm(l, ov.n);
  }
  return Order::fin(top.n * l);
}

}  // namespace

Group Group::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("free abelian rank must be positive");
  Group g;
  g.kind_ = Kind::FreeAbelian;
  g.rank_ = rank;
  return g;
}

Group Group::finite_cyclic(long long modulus) {
  if (modulus < 1) throw std::invalid_argument("cyclic modulus must be positive");
  Group g;
  g.kind_ = Kind::FiniteCyclic;
  g.modulus_ = modulus;
  g.rank_ = 1;
  return g;
}

Group Group::free_solvable(int degree, int rank) {
  if (degree < 1) throw std::invalid_argument("solvable degree must be positive");
  if (rank < 1) throw std::invalid_argument("solvable rank must be positive");
  Group g;
  g.kind_ = Kind::FreeSolvable;
  g.degree_ = degree;
  g.rank_ = rank;
  return g;
}

Group Group::wreath(Group a, Group b) {
  Group g;
  g.kind_ = Kind::Wreath;
  g.a_ = std::make_shared<const Group>(std::move(a));
  g.b_ = std::make_shared<const Group>(std::move(b));
  return g;
}

int Group::ngens() const {
  switch (kind_) {
    case Kind::FreeAbelian:
    case Kind::FreeSolvable:
      return rank_;
    case Kind::FiniteCyclic:
      return 1;
    case Kind::Wreath:
      return a_->ngens() + b_->ngens();
  }
  return 0;
}

int Group::a_gens() const { return kind_ == Kind::Wreath ? a_->ngens() : ngens(); }

bool Group::is_abelian() const {
  switch (kind_) {
    case Kind::FreeAbelian:
    case Kind::FiniteCyclic:
      return true;
    case Kind::FreeSolvable:
      return degree_ == 1;
    case Kind::Wreath:
      return false;
  }
  return false;
}

bool Group::operator==(const Group& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::FreeAbelian:
      return rank_ == other.rank_;
    case Kind::FiniteCyclic:
      return modulus_ == other.modulus_;
    case Kind::FreeSolvable:
      return degree_ == other.degree_ && rank_ == other.rank_;
    case Kind::Wreath:
      return *a_ == *other.a_ && *b_ == *other.b_;
  }
  return false;
}

std::string Group::to_string() const {
  switch (kind_) {
    case Kind::FreeAbelian:
      return "Z^" + std::to_string(rank_);
    case Kind::FiniteCyclic:
      return "Z/" + std::to_string(modulus_);
    case Kind::FreeSolvable:
      return "S(" + std::to_string(degree_) + "," + std::to_string(rank_) + ")";
    case Kind::Wreath:
      return "wr(" + a_->to_string() + "," + b_->to_string() + ")";
  }
  return "?";
}

namespace {

struct GroupParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }
  long long number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::exception&) {
      throw ParseError("number out of range", start);
    }
  }

  Group parse() {
    skip_space();
    std::size_t start = pos;
    if (text.compare(pos, 3, "wr(") == 0) {
      pos += 3;
      Group a = parse();
      expect(',');
      Group b = parse();
      expect(')');
      return Group::wreath(std::move(a), std::move(b));
    }
    if (peek() == 'Z') {
      ++pos;
      char c = peek();
      if (c == '^') {
        ++pos;
        long long r = number();
        if (r < 1) throw ParseError("rank must be positive", start);
        return Group::free_abelian(static_cast<int>(r));
      }
      if (c == '/') {
        ++pos;
        long long n = number();
        if (n < 1) throw ParseError("modulus must be positive", start);
        return Group::finite_cyclic(n);
      }
      throw ParseError("expected '^' or '/' after Z", pos);
    }
    if (peek() == 'S') {
      ++pos;
      expect('(');
      long long d = number();
      expect(',');
      long long r = number();
      expect(')');
      if (d < 1) throw ParseError("degree must be positive", start);
      if (r < 1) throw ParseError("rank must be positive", start);
      return Group::free_solvable(static_cast<int>(d), static_cast<int>(r));
    }
    throw ParseError("expected a group descriptor", pos);
  }
};

}  // namespace

Group Group::parse(const std::string& text) {
  GroupParser p{text};
  Group g = p.parse();
  p.skip_space();
  if (p.pos != text.size()) throw ParseError("trailing input after group descriptor", p.pos);
  return g;
}

void check_alphabet(const Group& g, const Word& w) {
  if (w.rank() != g.ngens()) {
    throw AlphabetError("word over alphabet of rank " + std::to_string(w.rank()) +
                        " used with group " + g.to_string() + " of rank " +
                        std::to_string(g.ngens()));
  }
}

Word parse_word(const std::string& text, const Group& g) {
  return parse_word_text(text, g.ngens(), g.a_gens());
}

std::string format_word(const Word& w, const Group& g) { return format_word(w, g.a_gens()); }

bool wp(const Group& g, const Word& w) {
  check_alphabet(g, w);
  switch (g.kind()) {
    case Group::Kind::FreeAbelian: {
      auto e = abelianization(w, g.rank());
      return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
    }
    case Group::Kind::FiniteCyclic:
      return floor_mod(exponent_sum(w), g.modulus()) == 0;
    case Group::Kind::FreeSolvable:
      return wp_solvable(g.degree(), g.rank(), w);
    case Group::Kind::Wreath:
      return w_is_identity(to_pair_form(w, g.left(), g.right()), g.left(), g.right());
  }
  return false;
}

bool cp(const Group& g, const Word& x, const Word& y, const Options& opts) {
  check_alphabet(g, x);
  check_alphabet(g, y);
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
    case Group::Kind::FiniteCyclic:
      return elements_equal(g, x, y);
    case Group::Kind::FreeSolvable:
      return cp_solvable(g.degree(), g.rank(), x, y, opts);
    case Group::Kind::Wreath: {
      WreathElement ex = to_pair_form(x, g.left(), g.right());
      WreathElement ey = to_pair_form(y, g.left(), g.right());
      bool verdict = cp_wreath(ex, ey, g.left(), g.right(), opts);
      if (opts.cross_check && g.left().is_abelian()) {
        bool fast = cp_wreath_abelian_fastpath(ex, ey, g.left(), g.right(), opts);
        if (fast != verdict) {
          throw VerificationError("wreath decision paths disagree on " + g.to_string());
        }
      }
      return verdict;
    }
  }
  return false;
}

std::optional<Word> csp(const Group& g, const Word& x, const Word& y, const Options& opts) {
  check_alphabet(g, x);
  check_alphabet(g, y);
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
    case Group::Kind::FiniteCyclic:
      if (elements_equal(g, x, y)) return Word::identity(g.ngens());
      return std::nullopt;
    case Group::Kind::FreeSolvable:
      return csp_solvable(g.degree(), g.rank(), x, y, opts);
    case Group::Kind::Wreath: {
      WreathElement ex = to_pair_form(x, g.left(), g.right());
      WreathElement ey = to_pair_form(y, g.left(), g.right());
      auto z = csp_wreath(ex, ey, g.left(), g.right(), opts);
      if (!z) return std::nullopt;
      Word zw = pair_to_word(*z, g.left(), g.right());
      if (!wp(g, concat(conj_by(zw, x), invert(y)))) {
        throw VerificationError("wreath conjugator failed word-level verification");
      }
      return zw;
    }
  }
  return std::nullopt;
}

std::optional<long long> pp(const Group& g, const Word& x, const Word& y) {
  check_alphabet(g, x);
  check_alphabet(g, y);
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
      return pp_abelian(g.rank(), x, y);
    case Group::Kind::FiniteCyclic:
      return pp_cyclic(g.modulus(), x, y);
    case Group::Kind::FreeSolvable:
      return pp_solvable(g.degree(), g.rank(), x, y);
    case Group::Kind::Wreath:
      return pp_wreath(g, x, y);
  }
  return std::nullopt;
}

Order order_of(const Group& g, const Word& b) {
  check_alphabet(g, b);
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
    case Group::Kind::FreeSolvable:
      // torsion-free: only the identity has finite order
      return wp(g, b) ? Order::fin(1) : Order::infinite();
    case Group::Kind::FiniteCyclic: {
      long long e = floor_mod(exponent_sum(b), g.modulus());
      if (e == 0) return Order::fin(1);
      return Order::fin(g.modulus() / std::gcd(g.modulus(), e));
    }
    case Group::Kind::Wreath:
      return order_wreath(g, b);
  }
  return Order::infinite();
}

bool elements_equal(const Group& g, const Word& u, const Word& v) {
  return wp(g, concat(u, invert(v)));
}

std::optional<Word> normal_form(const Group& g, const Word& w) {
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
      return abelian_word(g.rank(), abelianization(w, g.rank()));
    case Group::Kind::FiniteCyclic: {
      long long e = floor_mod(exponent_sum(w), g.modulus());
      return abelian_word(1, {e});
    }
    case Group::Kind::FreeSolvable:
      if (g.degree() == 1) return abelian_word(g.rank(), abelianization(w, g.rank()));
      return std::nullopt;
    case Group::Kind::Wreath:
      return std::nullopt;
  }
  return std::nullopt;
}

Word shorten(const Group& g, const Word& w) {
  auto nf = normal_form(g, w);
  return nf ? *nf : w;
}

std::string canonical_key(const Group& g, const Word& w) {
  std::ostringstream out;
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
    case Group::Kind::FreeSolvable: {
      if (g.kind() == Group::Kind::FreeSolvable && g.degree() > 1) {
        const Group base = Group::free_solvable(g.degree() - 1, g.rank());
        MagnusImage m = magnus_image(w, base);
        out << "s(" << canonical_key(base, m.mu);
        for (const auto& coord : m.u) {
          std::vector<std::string> parts;
          parts.reserve(coord.terms.size());
          for (const auto& t : coord.terms) {
            parts.push_back(canonical_key(base, t.elt) + "*" + std::to_string(t.coeff));
          }
          std::sort(parts.begin(), parts.end());
          out << '|';
          for (const auto& p : parts) out << p << '+';
        }
        out << ')';
        break;
      }
      auto e = abelianization(w, g.rank());
      out << "a(";
      for (long long v : e) out << v << ',';
      out << ')';
      break;
    }
    case Group::Kind::FiniteCyclic:
      out << "c(" << floor_mod(exponent_sum(w), g.modulus()) << ')';
      break;
    case Group::Kind::Wreath: {
      WreathElement e = to_pair_form(w, g.left(), g.right());
      out << "w(" << canonical_key(g.right(), e.top);
      std::vector<std::string> parts;
      parts.reserve(e.support.size());
      for (const auto& [key, val] : e.support) {
        parts.push_back(canonical_key(g.right(), key) + "->" + canonical_key(g.left(), val));
      }
      std::sort(parts.begin(), parts.end());
      for (const auto& p : parts) out << ';' << p;
      out << ')';
      break;
    }
  }
  return out.str();
}

}  // namespace solvcore
