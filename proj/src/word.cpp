#include "solvcore/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace solvcore {

namespace {

void check_letter(int code, int rank) {
  int g = std::abs(code);
  if (g < 1 || g > rank) {
    throw AlphabetError("generator index " + std::to_string(g) + " outside alphabet of rank " +
                        std::to_string(rank));
  }
}

void push_reduced(std::vector<int>& out, int code) {
  if (!out.empty() && out.back() == -code) {
    out.pop_back();
  } else {
    out.push_back(code);
  }
}

}  // namespace

Word Word::normalize(int rank, std::span<const int> raw) {
  Word w(rank);
  std::vector<int> out;
  out.reserve(raw.size());
  for (int code : raw) {
    check_letter(code, rank);
    push_reduced(out, code);
  }
  w.letters_ = std::move(out);
  return w;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw AlphabetError("cannot concatenate words over different alphabets (ranks " +
                        std::to_string(u.rank()) + " and " + std::to_string(v.rank()) + ")");
  }
  std::vector<int> out = u.letters();
  for (int code : v.letters()) push_reduced(out, code);
  return Word::normalize(u.rank(), out);
}

Word invert(const Word& w) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return Word::normalize(w.rank(), out);
}

Word conj_by(const Word& s, const Word& w) { return concat(concat(s, w), invert(s)); }

Word word_pow(const Word& w, long long n) {
  Word base = n < 0 ? invert(w) : w;
  if (n < 0) n = -n;
  Word acc = Word::identity(w.rank());
  for (long long i = 0; i < n; ++i) acc = concat(acc, base);
  return acc;
}

std::vector<long long> abelianization(const Word& w, int rank) {
  std::vector<long long> e(static_cast<std::size_t>(rank), 0);
  for (int code : w.letters()) {
    int g = std::abs(code);
    if (g > rank) throw AlphabetError("generator index " + std::to_string(g) + " outside rank");
    e[static_cast<std::size_t>(g - 1)] += code > 0 ? 1 : -1;
  }
  return e;
}

long long exponent_sum(const Word& w) {
  long long e = 0;
  for (int code : w.letters()) e += code > 0 ? 1 : -1;
  return e;
}

std::string format_word(const Word& w, int a_gens) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int code : w.letters()) {
    if (!first) out << ' ';
    first = false;
    int g = std::abs(code);
    bool positive = code > 0;
    if (g <= a_gens) {
      out << (positive ? 'x' : 'X') << g;
    } else {
      out << (positive ? 'y' : 'Y') << (g - a_gens);
    }
  }
  return out.str();
}

Word parse_word_text(const std::string& text, int rank, int a_gens) {
  std::vector<int> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c == '1') {
      // explicit identity token
      ++i;
      if (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character after identity token", i);
      }
      continue;
    }
    if (c != 'x' && c != 'X' && c != 'y' && c != 'Y') {
      throw ParseError(std::string("unexpected character '") + c + "' in word", i);
    }
    std::size_t start = i;
    ++i;
    std::size_t digits_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_begin) throw ParseError("generator token missing index", start);
    int index = 0;
    try {
      index = std::stoi(text.substr(digits_begin, i - digits_begin));
    } catch (const std::exception&) {
      throw ParseError("generator index out of range", digits_begin);
    }
    if (index < 1) throw ParseError("generator index must be positive", digits_begin);
    int gen;
    if (c == 'x' || c == 'X') {
      if (index > a_gens) {
        throw ParseError("x-generator index " + std::to_string(index) + " exceeds " +
                             std::to_string(a_gens),
                         digits_begin);
      }
      gen = index;
    } else {
      int b_gens = rank - a_gens;
      if (b_gens == 0) throw ParseError("y-generators not valid for this group", start);
      if (index > b_gens) {
        throw ParseError("y-generator index " + std::to_string(index) + " exceeds " +
                             std::to_string(b_gens),
                         digits_begin);
      }
      gen = a_gens + index;
    }
    raw.push_back((c == 'x' || c == 'y') ? gen : -gen);
  }
  return Word::normalize(rank, raw);
}

}  // namespace solvcore
