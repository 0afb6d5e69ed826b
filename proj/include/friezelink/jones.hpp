#pragma once

#include <string>
#include <vector>

#include "friezelink/frieze.hpp"
#include "friezelink/laurent.hpp"
#include "friezelink/lr_word.hpp"
#include "friezelink/tangle.hpp"
#include "friezelink/writhe.hpp"

namespace friezelink {

/// wt(alpha): a0 - a1 + a2 - ... + an for even n, a0 - a1 + ... - an + 2 for
/// odd n; independent of which expansion is used.
Int weight(const Fraction& alpha);
Int weight_cf(const ContinuedFraction& cf);

/// wt~(alpha) = -wr(alpha) - wt(alpha).
Int extended_weight(const Fraction& alpha);
/// wt~_{+-}(alpha) = -wr_{+-}(alpha) - wt(alpha); 1/0-type only.
Int extended_weight_plus_minus(const Fraction& alpha);

/// <Gamma_alpha> = (-A^3)^wt(alpha) <D(T(alpha))>.
LaurentPoly frieze_bracket(const Fraction& alpha);

struct JonesValue {
    LaurentPoly poly_A; // even exponents only
    LaurentPoly poly_t; // the same value in t^(1/2)
    bool plus_minus = false;
};

/// V(alpha) = (-A^3)^(-wr(alpha)) <D(T(alpha))>.
JonesValue jones(const Fraction& alpha);
/// The same value through V(alpha) = (-A^3)^(wt~(alpha)) <Gamma_alpha>.
JonesValue jones_via_frieze(const Fraction& alpha);
/// V_{+-}(alpha) = conj(V(i(alpha))); 1/0-type only.
JonesValue jones_plus_minus(const Fraction& alpha);

enum class JonesCaseTag { OddDenominator, EvenDenXEven, EvenDenYEven };
const char* to_string(JonesCaseTag t);

/// The equivalence class V(Gamma): {V, conj V} for odd q, {V, V(i)} when q and
/// the left-parent numerator are even, all four when q and the right-parent
/// numerator are even. Stored as the sorted set of distinct t-polynomials.
struct FriezeJonesClass {
    JonesCaseTag tag = JonesCaseTag::OddDenominator;
    std::vector<LaurentPoly> members; // distinct, sorted, variable t^(1/2)
    bool operator==(const FriezeJonesClass& o) const {
        return tag == o.tag && members == o.members;
    }
};

/// Computes the class and asserts it is identical when rebuilt from every
/// orbit member.
FriezeJonesClass frieze_jones(const Fraction& alpha);
FriezeJonesClass frieze_jones(const Frieze& gamma);

struct ExceptionalPair {
    Fraction a, b;
    LaurentPoly va_t, vb_t;
    long long shift_half = 0; // V(a) = t^(shift_half/2) * conj(V(b))
    bool jones_related = false;
    bool patterns_ok = false;
    std::array<Int, 4> display_a; // n(alpha), n(r); n(ir), n(i)
    std::array<Int, 4> display_b;
};

struct ExceptionalPairsReport {
    std::vector<ExceptionalPair> pairs;
    bool discrepancy_flagged = false; // the listed 104/147 vs the displayed 106/147
    std::string notes;
    bool all_ok() const;
    std::string text() const;
};

/// The four knot pairs with matching Jones polynomials up to t <-> 1/t, with
/// the numerator patterns around the maximal frieze entry.
ExceptionalPairsReport exceptional_pairs_report();

/// CLI-facing JSON: {"alpha","wr","wt","ext_wt","V_A","V_t"}.
std::string jones_report_json(const Fraction& alpha);

} // namespace friezelink
