#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "solvcore/errors.hpp"

namespace solvcore {

// A freely reduced word over a signed alphabet of `rank` generators.
// Letters are encoded as +g / -g with g in [1, rank]. Construction always
// reduces, so no instance ever contains an adjacent g, -g pair.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  static Word identity(int rank) { return Word(rank); }

  // Builds the freely reduced word from raw signed letters.
  static Word normalize(int rank, std::span<const int> raw);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  bool operator==(const Word& other) const {
    return rank_ == other.rank_ && letters_ == other.letters_;
  }

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
// Reduced form of s * w * s^-1. All conjugation in this library acts on the
// left: "z conjugates x to y" means z x z^-1 = y.
Word conj_by(const Word& s, const Word& w);
// w^n by repeated reduced concatenation; negative n inverts first.
Word word_pow(const Word& w, long long n);

// Exponent of each generator, length `rank`.
std::vector<long long> abelianization(const Word& w, int rank);
long long exponent_sum(const Word& w);

// Text form. Generators with index <= a_gens print as x<i>/X<i>, the rest as
// y<j>/Y<j> with j relative to the split; a_gens == rank means plain x-words.
// "1" or the empty string denotes the identity.
std::string format_word(const Word& w, int a_gens);
Word parse_word_text(const std::string& text, int rank, int a_gens);

}  // namespace solvcore
