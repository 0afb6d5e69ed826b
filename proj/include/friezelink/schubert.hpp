#pragma once

#include <string>
#include <vector>

#include "friezelink/lr_word.hpp"
#include "friezelink/rational.hpp"

namespace friezelink {

/// D(T(alpha)) and D(T(beta)) are isotopic as unoriented links iff the
/// denominators agree and p p' = 1 or p = p' (mod q).
bool schubert_equivalent_unoriented(const Fraction& alpha, const Fraction& beta);

/// One unoriented-equivalence-with-mirror class: the numerators of
/// {alpha, i(alpha), r(alpha), (ir)(alpha)}.
struct LinkClass {
    Int q;
    std::vector<Int> numerators; // sorted distinct
    Fraction canonical() const;  // smallest numerator over q
    bool operator==(const LinkClass& o) const { return q == o.q && numerators == o.numerators; }
};

LinkClass orbit_class(const Fraction& alpha);

/// Partition of all coprime p in {1..q-1}; equals both the orbit partition
/// and the congruence partition (p p' = +-1 or p = +-p' mod q).
std::vector<LinkClass> classify_denominator(const Int& q);

/// Congruence-only partition, for checking against the orbit partition.
std::vector<LinkClass> classify_denominator_by_congruence(const Int& q);

/// Partial oriented check: p p' = 1 (mod 2q) witnesses oriented isotopy of
/// the principal orientations. Not a full oriented classification.
bool oriented_schubert_witness(const Fraction& alpha, const Fraction& beta);

/// CSV: q, members, size, canonical representative.
std::string classes_csv(const Int& q);

} // namespace friezelink
