#include "friezelink/writhe.hpp"

#include "friezelink/lr_word.hpp"

namespace friezelink {

namespace detail {

SignSequence sign_sequence_variant(const ContinuedFraction& cf, const SignVariants& v) {
    if (cf.a0 != 0 || cf.terms.empty())
        throw out_of_range("sign sequence needs a cf of the form [0, a1..an]");
    if (!in_open_unit_interval(cf_value(cf)))
        throw out_of_range("sign sequence needs a value in (0,1)");

    const long long n = cf.n();
    const auto bits = convergent_parity_bits(cf); // index 0..n
    auto dbit = [&](long long i) { return bits[static_cast<size_t>(i)].second; };
    auto type_of = [&](long long i) {
        auto [nb, db] = bits[static_cast<size_t>(i)];
        if (nb && db) return ParityType::OneOne;
        if (nb) return ParityType::OneZero;
        return ParityType::ZeroOne;
    };
    auto term = [&](long long j) { return cf.terms[static_cast<size_t>(j - 1)]; };
    auto odd = [](const Int& x) { return parity_bit(x) == 1; };

    std::vector<int> prev2, prev1, cur; // signs of alpha_{m-2}, alpha_{m-1}, alpha_m (1-based in [0])
    for (long long m = 1; m <= n; ++m) {
        cur.assign(static_cast<size_t>(m), 0);
        auto set = [&](long long j, int s) { cur[static_cast<size_t>(j - 1)] = s; };
        auto p1 = [&](long long j) { return prev1[static_cast<size_t>(j - 1)]; };
        auto p2 = [&](long long j) { return prev2[static_cast<size_t>(j - 1)]; };
        if (m == 1) {
            set(1, odd(term(1)) ? 1 : -1); // (-1)^(a1+1)
        } else if (m == 2) {
            const Int& a1 = term(1);
            const Int& a2 = term(2);
            set(2, odd(a1) ? -1 : 1);                       // (-1)^a1
            set(1, odd(a1 * a2 + a2 + 1) ? -1 : 1);          // (-1)^(a1 a2 + a2 + 1)
        } else {
            ParityType t2 = type_of(m - 2), t1 = type_of(m - 1);
            const Int& a = term(m);
            const Int& am1 = term(m - 1);
            if (t1 == ParityType::OneZero) {
                // one-level cases with a parity-dependent prefix
                bool active = (t2 == ParityType::OneOne) ? !odd(a) : odd(a);
                int idx_shift = (t2 == ParityType::OneOne) ? v.case1_prefix_index
                                                           : v.case2_prefix_index;
                for (long long j = 1; j <= m - 1; ++j) {
                    int pref = (active && dbit(j - 1 + idx_shift)) ? -1 : 1;
                    set(j, pref * p1(j));
                }
                set(m, (t2 == ParityType::OneOne) ? p1(m - 1) : -p1(m - 1));
            } else if (t2 == ParityType::OneZero && t1 == ParityType::ZeroOne && !odd(a)) {
                for (long long j = 1; j <= m - 1; ++j) set(j, p1(j));
                set(m, -p1(m - 1));
            } else if (t2 == ParityType::OneZero && t1 == ParityType::ZeroOne) {
                for (long long j = 1; j <= m - 2; ++j) {
                    int pref = dbit(j - 1 + v.case3_prefix_index) ? -1 : 1;
                    set(j, pref * p2(j));
                }
                Int e = v.case3_top_exponent == 0 ? am1 - 1 : a - 1;
                int f = odd(e) ? -1 : 1;
                set(m - 1, f * p2(m - 2));
                set(m, f * p2(m - 2));
            } else if (t2 == ParityType::OneOne && t1 == ParityType::ZeroOne && odd(a)) {
                for (long long j = 1; j <= m - 1; ++j) set(j, p1(j));
                set(m, p1(m - 1));
            } else {
                // two-level cases (4 even), (5), (6)
                for (long long j = 1; j <= m - 2; ++j) set(j, p2(j));
                Int e = v.case456_exponent == 0 ? am1 : a - 1;
                int f = odd(e) ? -1 : 1;
                set(m - 1, f * p2(m - 2));
                set(m, f * p2(m - 2));
            }
        }
        prev2 = std::move(prev1);
        prev1 = cur;
    }
    return cur;
}

} // namespace detail

SignSequence sign_sequence(const ContinuedFraction& cf) {
    return detail::sign_sequence_variant(cf, detail::SignVariants{});
}

int top_sign_closed_form(const ContinuedFraction& cf) {
    if (cf.a0 != 0 || cf.terms.empty())
        throw out_of_range("top sign needs a cf of the form [0, a1..an]");
    if (!in_open_unit_interval(cf_value(cf)))
        throw out_of_range("top sign needs a value in (0,1)");
    const long long n = cf.n();
    const auto bits = convergent_parity_bits(cf);
    int dn = bits[static_cast<size_t>(n)].second;
    int n1 = bits[static_cast<size_t>(n - 1)].first;
    int d1 = bits[static_cast<size_t>(n - 1)].second;
    long long e = static_cast<long long>(dn + 1) * n1 + static_cast<long long>(dn) * d1 + n;
    return (e % 2 == 0) ? 1 : -1;
}

Int writhe_principal_cf(const ContinuedFraction& cf) {
    SignSequence t = sign_sequence(cf);
    Int s = 0;
    for (long long j = 1; j <= cf.n(); ++j)
        s += Int(t[static_cast<size_t>(j - 1)]) * cf.terms[static_cast<size_t>(j - 1)];
    return -s;
}

Int writhe_principal(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha))
        throw out_of_range("writhe needs alpha in (0,1), got " + alpha.str());
    return writhe_principal_cf(cf_expand(alpha, Parity::Any));
}

Int writhe_plus_minus(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha) || classify_type(alpha) != ParityType::OneZero)
        throw not_two_component("wr_{+-} needs a two-component link (1/0-type)");
    return -writhe_principal(op_i(alpha));
}

} // namespace friezelink
