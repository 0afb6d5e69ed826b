#include "friezelink/tangle.hpp"

#include <array>

namespace friezelink {

namespace {

using Mat = std::array<LaurentPoly, 4>; // row-major 2x2 acting on column (f, g)

Mat mat_mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat mat_pow(Mat m, long long k) {
    Mat acc{LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()};
    while (k > 0) {
        if (k & 1) acc = mat_mul(acc, m);
        m = mat_mul(m, m);
        k >>= 1;
    }
    return acc;
}

BracketPair apply_matrix(const Mat& m, const BracketPair& p) {
    return {m[0] * p.f + m[1] * p.g, m[2] * p.f + m[3] * p.g};
}

// One right twist with skein sign s: (f, g) -> (A^s f, A^-s f - A^-3s g).
Mat right_twist(int s) {
    return {LaurentPoly::monomial(1, s), LaurentPoly::zero(),
            LaurentPoly::monomial(1, -s), LaurentPoly::monomial(-1, -3 * s)};
}

// One bottom twist with skein sign s: (f, g) -> (-A^-3s f + A^-s g, A^s g).
Mat bottom_twist(int s) {
    return {LaurentPoly::monomial(-1, -3 * s), LaurentPoly::monomial(1, -s),
            LaurentPoly::zero(), LaurentPoly::monomial(1, s)};
}

constexpr long long kPowThreshold = 64;

void apply_region(BracketPair& p, const Mat& m, const Int& count) {
    if (count > kPowThreshold) {
        p = apply_matrix(mat_pow(m, checked_ll(count)), p);
        return;
    }
    long long c = checked_ll(count);
    for (long long i = 0; i < c; ++i) p = apply_matrix(m, p);
}

} // namespace

BracketPair bracket_pair_of_cf(const ContinuedFraction& cf, bool mirrored) {
    if (cf.a0 != 0 || cf.terms.empty())
        throw out_of_range("tangle bracket needs a cf of the form [0, a1..an]");
    const int hsign = mirrored ? -1 : 1;
    const int vsign = -hsign;
    const long long n = cf.n();
    BracketPair p;
    if (n % 2 == 0) { // 0-tangle
        p = {LaurentPoly::one(), LaurentPoly::zero()};
    } else { // infinity-tangle
        p = {LaurentPoly::zero(), LaurentPoly::one()};
    }
    const Mat h = right_twist(hsign);
    const Mat v = bottom_twist(vsign);
    for (long long j = n; j >= 1; --j) {
        const Int& a = cf.terms[static_cast<size_t>(j - 1)];
        apply_region(p, (j % 2 == 1) ? v : h, a);
    }
    return p;
}

BracketPair bracket_of_tangle(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha))
        throw out_of_range("bracket_of_tangle needs alpha in (0,1), got " + alpha.str());
    return bracket_pair_of_cf(cf_expand(alpha, Parity::Any));
}

LaurentPoly close_denominator(const BracketPair& p) {
    return p.f + LaurentPoly::loop_value() * p.g;
}

LaurentPoly close_numerator(const BracketPair& p) {
    return LaurentPoly::loop_value() * p.f + p.g;
}

LaurentPoly bracket_of_denominator(const Fraction& alpha) {
    return close_denominator(bracket_of_tangle(alpha));
}

LaurentPoly bracket_of_denominator_cf(const ContinuedFraction& cf) {
    return close_denominator(bracket_pair_of_cf(cf));
}

LaurentPoly bracket_of_denominator_mirrored(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha))
        throw out_of_range("mirrored bracket needs alpha in (0,1), got " + alpha.str());
    return close_denominator(bracket_pair_of_cf(cf_expand(alpha, Parity::Any), true));
}

LaurentPoly numerator_closure_bracket(const Fraction& alpha) {
    return close_numerator(bracket_of_tangle(alpha));
}

} // namespace friezelink
