#pragma once

#include <optional>

#include "solvcore/magnus.hpp"

namespace solvcore {

// Conjugacy decision in S(d,r). Degree 1 compares abelianizations; higher
// degrees map both inputs into Z^r wr S(d-1,r) and decide there, recursing
// through these functions for the base-group oracles. With opts.cross_check
// both wreath decision paths run and must agree.
bool cp_solvable(int d, int r, const Word& x, const Word& y, const Options& opts = {});

// Conjugacy search in S(d,r): a word s with s x s^-1 = y, verified via
// wp_solvable before returning, or nothing when not conjugate.
std::optional<Word> csp_solvable(int d, int r, const Word& x, const Word& y,
                                 const Options& opts = {});

// Turns a wreath-level conjugator of the images of x and y into a word of
// S(d,r). Strategy ladder:
//   1. if z itself satisfies the membership identity, take its preimage;
//   2. re-solve the module part of the conjugation equation for nearby tops
//      (z.top shifted by powers of the top of x) and take the first image hit;
//   3. breadth-first search over short conjugating words within opts.lift_budget.
// The result always satisfies wp_solvable(d, r, s x s^-1 y^-1); running out of
// ladder is a LiftBudgetError, never a wrong answer.
Word lift_conjugator(const WreathElement& z, const Word& x, const Word& y, int d, int r,
                     const Options& opts = {});

}  // namespace solvcore
