#pragma once

#include <array>
#include <string>
#include <vector>

#include "friezelink/rational.hpp"

namespace friezelink {

/// Word over {L, R}; the empty word corresponds to 1/2.
using LRWord = std::string;

bool is_valid_word(const LRWord& w);

/// w(alpha) for alpha in (0,1), via the parent recurrence
/// w(p/q # r/s) = L w(r/s) if q < s, R w(p/q) if q > s, w(1/2) = empty.
LRWord word_of(const Fraction& alpha);

/// Inverse of word_of: descend the Stern-Brocot tree from 1/2 along the
/// reversed word.
Fraction alpha_of(const LRWord& w);

LRWord word_i(const LRWord& w);  // swap L <-> R
LRWord word_r(const LRWord& w);  // reverse
LRWord word_ir(const LRWord& w); // both

/// i(alpha) = (q-p)/q.
Fraction op_i(const Fraction& alpha);
/// r(alpha) = (left parent denominator)/q; the member with p*p' = 1 (mod q).
Fraction op_r(const Fraction& alpha);
/// (ir)(alpha) = (right parent denominator)/q; the member with p*p' = -1 (mod q).
Fraction op_ir(const Fraction& alpha);

/// Closed-form expansions of Lemma-1.4 type: i(alpha) = [0,1,a1-1,a2,...,an];
/// for the even-n expansion, r(alpha) = [0,1,an-1,...,a1] and
/// (ir)(alpha) = [0,an,...,a1]. Zero terms produced by a1 = 1 or an = 1 are
/// merged away.
struct CfImages {
    ContinuedFraction i, r, ir;
};
CfImages cf_of_images(const Fraction& alpha);

struct Orbit {
    Fraction alpha, i, r, ir;
    std::vector<Fraction> distinct() const; // sorted, size 1, 2 or 4
    /// Smallest numerator; ties broken by smallest i-image numerator.
    Fraction canonical() const;
};
Orbit orbit_of(const Fraction& alpha);

} // namespace friezelink
