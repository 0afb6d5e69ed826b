#pragma once

#include <utility>
#include <vector>

#include "friezelink/core.hpp"

namespace friezelink {

/// Irreducible fraction p/q with q >= 0; q == 0 is the formal fraction 1/0.
struct Fraction {
    Int num{0};
    Int den{1};

    Fraction() = default;
    Fraction(Int p, Int q); // reduces; requires non-negative p, q, (p,q) != (0,0)

    bool is_infinite() const { return den == 0; }
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    bool operator<(const Fraction& o) const;

    std::string str() const { return num.str() + "/" + den.str(); }
};

Fraction make_fraction(const Int& p, const Int& q, bool allow_signed = false);
Fraction parse_fraction(const std::string& text);

/// (num mod 2, den mod 2); (0,0) cannot occur for an irreducible fraction.
enum class ParityType { OneOne, OneZero, ZeroOne };

int numerator_bit(ParityType t);
int denominator_bit(ParityType t);
const char* to_string(ParityType t);

ParityType classify_type(const Fraction& alpha);

bool in_open_unit_interval(const Fraction& alpha);

/// qr - ps = 1 for left = p/q, right = r/s. The formal 1/0 may appear on the right.
bool is_farey_neighbor(const Fraction& left, const Fraction& right);

/// Mediant (p+r)/(q+s); requires Farey neighbors.
Fraction farey_sum(const Fraction& left, const Fraction& right);

/// The unique Farey-neighbor pair (left, right) with left # right == alpha.
std::pair<Fraction, Fraction> parents(const Fraction& alpha);

/// [a0; a1, ..., an] with every ai >= 1.
struct ContinuedFraction {
    Int a0{0};
    std::vector<Int> terms;

    ContinuedFraction() = default;
    ContinuedFraction(Int a0_, std::vector<Int> terms_);

    long long n() const { return static_cast<long long>(terms.size()); }
    std::string str() const;
    bool operator==(const ContinuedFraction& o) const { return a0 == o.a0 && terms == o.terms; }
};

enum class Parity { Even, Odd, Any };

/// Euclidean expansion. Parity::Any gives the canonical form (last term >= 2
/// when terms exist); Even/Odd force the parity of the term count n via
/// [..., a] = [..., a-1, 1] and [..., a, 1] = [..., a+1].
ContinuedFraction cf_expand(const Fraction& alpha, Parity parity = Parity::Any);

Fraction cf_value(const ContinuedFraction& cf);

long long count_even_terms(const ContinuedFraction& cf);

/// Types of the convergents alpha_1..alpha_n of [0, a1..an], computed by the
/// mod-2 recurrence n(a_i) = n(a_{i-2}) + (a_i mod 2) n(a_{i-1}) with
/// alpha_0 := 0/1.
std::vector<ParityType> convergent_types(const ContinuedFraction& cf);

/// (num bit, den bit) of alpha_0..alpha_n, same recurrence, index 0 = 0/1.
std::vector<std::pair<int, int>> convergent_parity_bits(const ContinuedFraction& cf);

} // namespace friezelink
