#pragma once

#include <vector>

#include "friezelink/rational.hpp"

namespace friezelink {

/// Signs t(D_1)..t(D_n) of the triangles along the continued fraction path of
/// [0, a1..an], one per term, computed by the type-cased recursion. The j-th
/// sign pairs with a_j in the writhe formula -wr = sum t(D_j) a_j.
using SignSequence = std::vector<int>;

SignSequence sign_sequence(const ContinuedFraction& cf);

/// Closed form for the last sign t(D_n). The displayed formula's second
/// factor reads d(alpha_{n-1}); the printed n(alpha_{n-1}) fails on
/// [0,1,2,1,2], whose last sign is +1.
int top_sign_closed_form(const ContinuedFraction& cf);

/// wr(alpha) = -sum_j t(D_j) a_j, independent of the expansion parity.
Int writhe_principal(const Fraction& alpha);
Int writhe_principal_cf(const ContinuedFraction& cf);

/// wr_{+-}(alpha) = -wr(i(alpha)); needs a two-component link (1/0-type).
Int writhe_plus_minus(const Fraction& alpha);

namespace detail {

/// Ambiguous readings of the recursion's prefix factors, resolved against the
/// oriented-diagram oracle. Index 0 picks the convergent index j-1 (as in the
/// worked proof), 1 picks j (as printed); the last two switch the exponent of
/// the two-level cases between a_{n-1} (printed) and a_n - 1.
struct SignVariants {
    int case1_prefix_index = 0; // 0: d(alpha_{j-1}), 1: d(alpha_j)
    int case2_prefix_index = 0;
    int case3_prefix_index = 1;
    int case3_top_exponent = 0; // 0: a_{n-1} - 1, 1: a_n - 1
    int case456_exponent = 0;   // 0: a_{n-1},     1: a_n - 1
};

SignSequence sign_sequence_variant(const ContinuedFraction& cf, const SignVariants& v);

} // namespace detail

} // namespace friezelink
