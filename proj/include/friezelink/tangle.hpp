#pragma once

#include "friezelink/laurent.hpp"
#include "friezelink/rational.hpp"

namespace friezelink {

/// Skein-module coordinates of a (2,2)-tangle:
/// <T> = f <0-tangle> + g <infinity-tangle>.
struct BracketPair {
    LaurentPoly f, g;
};

/// Twist conventions, pinned by the worked Jones values (V(1/4) and V(3/10)):
/// region j of [0, a1..an] is a vertical (bottom) twist region when j is odd
/// and a horizontal (right) twist region when j is even; regions are applied
/// from j = n down to 1 starting from the 0-tangle (n even) or the
/// infinity-tangle (n odd). Horizontal crossings carry skein sign +1 and
/// vertical crossings -1; at every crossing the strand entering the top-left
/// slot passes over. `mirrored` flips all crossings.
BracketPair bracket_pair_of_cf(const ContinuedFraction& cf, bool mirrored = false);

BracketPair bracket_of_tangle(const Fraction& alpha);

/// Denominator closure weights (1, delta): the closed 0-tangle is one circle.
LaurentPoly close_denominator(const BracketPair& p);
/// Numerator closure weights (delta, 1).
LaurentPoly close_numerator(const BracketPair& p);

LaurentPoly bracket_of_denominator(const Fraction& alpha);
LaurentPoly bracket_of_denominator_cf(const ContinuedFraction& cf);
LaurentPoly bracket_of_denominator_mirrored(const Fraction& alpha);
LaurentPoly numerator_closure_bracket(const Fraction& alpha);

} // namespace friezelink
