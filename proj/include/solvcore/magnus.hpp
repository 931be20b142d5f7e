#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvcore/group_ring.hpp"
#include "solvcore/wreath.hpp"

namespace solvcore {

// Image of a word under the embedding into 2x2 matrices ((mu, u), (0, 1))
// over Z[B]: mu is the projection of the word to B, u its vector of module
// coordinates. Multiplication rule: (g, u)(g', u') = (g g', g u' + u).
struct MagnusImage {
  Word mu;
  std::vector<GroupRing> u;  // one coordinate per generator
};

MagnusImage magnus_identity(const Group& b, int r);
// Left-to-right accumulation over the letters of w; generator x_i
// contributes +(prefix) e_i, its inverse -(prefix after the letter) e_i.
MagnusImage magnus_image(const Word& w, const Group& b);
MagnusImage magnus_mul(const Group& b, const MagnusImage& m1, const MagnusImage& m2);
MagnusImage magnus_inv(const Group& b, const MagnusImage& m);
MagnusImage magnus_pow(const Group& b, const MagnusImage& m, long long n);
bool magnus_equal(const Group& b, const MagnusImage& m1, const MagnusImage& m2);
bool magnus_is_identity(const Group& b, const MagnusImage& m);

// The matrix group over Z[B] is isomorphic to Z^r wr B. The support point
// for a ring term at beta in coordinate i is beta^-1 * mu, which is the
// unique choice making the map multiplicative for the wreath convention
// used here.
WreathElement magnus_to_wreath(const MagnusImage& m, const Group& b);
MagnusImage wreath_to_magnus(const WreathElement& e, const Group& a, const Group& b);

// sum_i u_i (mu(x_i) - 1) - (mu - 1); zero exactly on images of words.
GroupRing membership_defect(const Group& b, const MagnusImage& m);
bool image_membership(const Group& b, const MagnusImage& m);

// Reconstructs a word with the given image by reading u as an integer flow
// on the Cayley graph of B and walking it off. Requires image_membership.
Word magnus_preimage(const Group& b, const MagnusImage& m);

// Word problem in S(d,r): degree 1 is abelianization, higher degrees check
// that the image over S(d-1,r) is the identity matrix.
bool wp_solvable(int d, int r, const Word& w);

// Power problem in S(d,r): returns n with x = y^n, or nothing. Handles the
// case of y with zero abelianization by recursing on mu-parts and, when the
// mu-part is trivial too, by matching module coordinates; every candidate is
// verified against the word problem before it is returned.
std::optional<long long> pp_solvable(int d, int r, const Word& x, const Word& y);

std::string format_magnus(const MagnusImage& m, const Group& b);

}  // namespace solvcore
