#include "doctest.h"

#include <algorithm>

#include "friezelink/schubert.hpp"
#include "friezelink/tangle.hpp"

using namespace friezelink;

TEST_CASE("unoriented equivalence") {
    CHECK(schubert_equivalent_unoriented(Fraction(3, 10), Fraction(7, 10)));
    CHECK(schubert_equivalent_unoriented(Fraction(1, 3), Fraction(1, 3)));
    CHECK_FALSE(schubert_equivalent_unoriented(Fraction(1, 3), Fraction(2, 3)));
    CHECK_FALSE(schubert_equivalent_unoriented(Fraction(1, 3), Fraction(1, 4)));
}

TEST_CASE("orbit classes") {
    CHECK(orbit_class(Fraction(7, 17)).numerators == std::vector<Int>{5, 7, 10, 12});
    CHECK(orbit_class(Fraction(3, 10)).numerators == std::vector<Int>{3, 7});
    CHECK(orbit_class(Fraction(1, 2)).numerators == std::vector<Int>{1});
}

TEST_CASE("classify_denominator golden values") {
    auto has_class = [](const std::vector<LinkClass>& cs, std::vector<Int> want) {
        return std::any_of(cs.begin(), cs.end(),
                           [&](const LinkClass& c) { return c.numerators == want; });
    };
    CHECK(has_class(classify_denominator(17), {5, 7, 10, 12}));
    auto q4 = classify_denominator(4);
    REQUIRE(q4.size() == 1);
    CHECK(q4[0].numerators == std::vector<Int>{1, 3});
    CHECK(has_class(classify_denominator(14), {3, 5, 9, 11}));
    CHECK(classify_denominator(2).size() == 1);
    CHECK_THROWS_AS(classify_denominator(1), invalid_q);
}

TEST_CASE("orbit partition equals the congruence partition, 2 <= q <= 500") {
    for (long long q = 2; q <= 500; ++q) {
        auto a = classify_denominator(q);
        auto b = classify_denominator_by_congruence(q);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        for (const auto& cls : a) {
            size_t sz = cls.numerators.size();
            CHECK((sz == 1 || sz == 2 || sz == 4));
        }
    }
}

TEST_CASE("mirror sub-relation, q <= 300") {
    // beta lies in {i(alpha), (ir)(alpha)} iff p p' = -1 or p' = -p (mod q)
    for (long long q = 2; q <= 300; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            Int ni = op_i(a).num, nir = op_ir(a).num;
            for (long long pp = 1; pp < q; ++pp) {
                if (Fraction(pp, q).den != q) continue;
                bool in_mirror = (ni == pp) || (nir == pp);
                bool cong = ((p * pp) % q == (q - 1) % q) || ((p + pp) % q == 0);
                CHECK(in_mirror == cong);
            }
        }
}

TEST_CASE("brackets within a class agree up to conjugation, q <= 100") {
    for (long long q = 2; q <= 100; ++q)
        for (const LinkClass& cls : classify_denominator(q)) {
            LaurentPoly base = bracket_of_denominator(cls.canonical());
            LaurentPoly conj = base.conjugate();
            for (const Int& m : cls.numerators) {
                LaurentPoly b = bracket_of_denominator(Fraction(m, q));
                CHECK((b == base || b == conj));
            }
        }
}

TEST_CASE("oriented witness") {
    CHECK(oriented_schubert_witness(Fraction(3, 10), Fraction(7, 10)));
    CHECK_FALSE(oriented_schubert_witness(Fraction(1, 4), Fraction(3, 4)));
}

TEST_CASE("csv export") {
    std::string csv = classes_csv(17);
    CHECK(csv.find("q,members,size,canonical") == 0);
    CHECK(csv.find("\"5 7 10 12\",4,5/17") != std::string::npos);
}
