#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "solvcore/word.hpp"

namespace solvcore {

// Recursive group descriptor. Four variants:
//   Z^r            free abelian of rank r
//   Z/n            cyclic of order n
//   S(d,r)         free solvable of degree d and rank r; S(1,r) is Z^r
//   wr(A,B)        restricted wreath product A wr B
class Group {
 public:
  enum class Kind { FreeAbelian, FiniteCyclic, FreeSolvable, Wreath };

  static Group free_abelian(int rank);
  static Group finite_cyclic(long long modulus);
  static Group free_solvable(int degree, int rank);
  static Group wreath(Group a, Group b);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  int degree() const { return degree_; }
  long long modulus() const { return modulus_; }
  const Group& left() const { return *a_; }   // A of wr(A,B)
  const Group& right() const { return *b_; }  // B of wr(A,B)

  // Total number of generators; a wreath product concatenates the alphabets
  // of its factors (A first, then B).
  int ngens() const;
  // How many leading generators print as x-tokens. Equals ngens() except for
  // wreath products, where the B-generators print as y-tokens.
  int a_gens() const;
  bool is_abelian() const;

  bool operator==(const Group& other) const;
  bool operator!=(const Group& other) const { return !(*this == other); }

  std::string to_string() const;
  // Grammar: Z^<r> | Z/<n> | S(<d>,<r>) | wr(<A>,<B>)
  static Group parse(const std::string& text);

 private:
  Group() = default;
  Kind kind_ = Kind::FreeAbelian;
  int rank_ = 0;
  int degree_ = 0;
  long long modulus_ = 0;
  std::shared_ptr<const Group> a_, b_;
};

struct Order {
  bool finite = false;
  long long n = 0;  // meaningful when finite
  static Order infinite() { return {false, 0}; }
  static Order fin(long long n) { return {true, n}; }
  bool operator==(const Order& o) const { return finite == o.finite && (!finite || n == o.n); }
};

// Knobs shared by the oracle entry points. Defaults match the production CLI;
// tests turn cross_check on.
struct Options {
  bool cross_check = false;  // run both wreath decision paths and compare
  int lift_budget = 12;      // max conjugator length for the lifting fallback
  std::ostream* trace = nullptr;
};

// The five decision/search problems, dispatched on the descriptor.
bool wp(const Group& g, const Word& w);
bool cp(const Group& g, const Word& x, const Word& y, const Options& opts = {});
std::optional<Word> csp(const Group& g, const Word& x, const Word& y, const Options& opts = {});
std::optional<long long> pp(const Group& g, const Word& x, const Word& y);
Order order_of(const Group& g, const Word& b);

// Equality of group elements given as words.
bool elements_equal(const Group& g, const Word& u, const Word& v);
// Injective string invariant: equal keys iff equal elements.
std::string canonical_key(const Group& g, const Word& w);
// Short normal form where one exists (abelian and cyclic groups).
std::optional<Word> normal_form(const Group& g, const Word& w);
// normal_form(w) if available, otherwise w unchanged.
Word shorten(const Group& g, const Word& w);

Word parse_word(const std::string& text, const Group& g);
std::string format_word(const Word& w, const Group& g);
void check_alphabet(const Group& g, const Word& w);

}  // namespace solvcore
