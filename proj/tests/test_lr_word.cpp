#include "doctest.h"

#include "friezelink/lr_word.hpp"

using namespace friezelink;

TEST_CASE("word_of golden values") {
    CHECK(word_of(Fraction(1, 3)) == "L");
    CHECK(word_of(Fraction(3, 4)) == "RR");
    CHECK(word_of(Fraction(1, 2)) == "");
    CHECK(word_of(Fraction(7, 17)) == "LLRRL");
    CHECK_THROWS_AS(word_of(Fraction(3, 2)), out_of_range);
}

TEST_CASE("alpha_of golden values") {
    CHECK(alpha_of("L") == Fraction(1, 3));
    CHECK(alpha_of("LL") == Fraction(1, 4));
    CHECK(alpha_of("") == Fraction(1, 2));
    CHECK_THROWS(alpha_of("LX"));
}

TEST_CASE("alpha_of inverts word_of, q <= 500") {
    for (long long q = 2; q <= 500; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            CHECK(alpha_of(word_of(a)) == a);
        }
}

TEST_CASE("word family 1/n and (n-1)/n") {
    for (int n = 3; n <= 50; ++n) {
        CHECK(word_of(Fraction(1, n)) == LRWord(static_cast<size_t>(n - 2), 'L'));
        CHECK(word_of(Fraction(n - 1, n)) == LRWord(static_cast<size_t>(n - 2), 'R'));
    }
}

TEST_CASE("involution golden values") {
    // 3/14 (worked example), 1/4, and 7/17; for 7/17 Lemma-1.2's formula gives
    // r = 5/17 and ir = 12/17 (the prose display transposes the two labels).
    CHECK(op_i(Fraction(3, 14)) == Fraction(11, 14));
    CHECK(op_r(Fraction(3, 14)) == Fraction(5, 14));
    CHECK(op_ir(Fraction(3, 14)) == Fraction(9, 14));
    CHECK(op_i(Fraction(1, 4)) == Fraction(3, 4));
    CHECK(op_r(Fraction(1, 4)) == Fraction(1, 4));
    CHECK(op_ir(Fraction(1, 4)) == Fraction(3, 4));
    CHECK(op_i(Fraction(7, 17)) == Fraction(10, 17));
    CHECK(op_r(Fraction(7, 17)) == Fraction(5, 17));
    CHECK(op_ir(Fraction(7, 17)) == Fraction(12, 17));
    CHECK(orbit_of(Fraction(7, 17)).distinct() ==
          std::vector<Fraction>{Fraction(5, 17), Fraction(7, 17), Fraction(10, 17),
                                Fraction(12, 17)});
}

TEST_CASE("r is the p p' = 1 (mod q) member") {
    for (long long q = 2; q <= 200; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            CHECK((op_r(a).num * p) % q == 1 % q);
            if (q > 2) CHECK((op_ir(a).num * p) % q == q - 1);
        }
}

TEST_CASE("involution structure, q <= 1000") {
    for (long long q = 2; q <= 1000; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            CHECK(op_i(op_i(a)) == a);
            CHECK(op_r(op_r(a)) == a);
            CHECK(op_ir(op_ir(a)) == a);
            CHECK(op_i(op_r(a)) == op_ir(a));
            CHECK(op_r(op_i(a)) == op_ir(a));
            size_t sz = orbit_of(a).distinct().size();
            CHECK((sz == 1 || sz == 2 || sz == 4));
        }
}

TEST_CASE("word-level and fraction-level definitions agree, q <= 500") {
    for (long long q = 2; q <= 500; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            LRWord w = word_of(a);
            CHECK(word_of(op_i(a)) == word_i(w));
            CHECK(word_of(op_r(a)) == word_r(w));
            CHECK(word_of(op_ir(a)) == word_ir(w));
        }
}

TEST_CASE("closed-form expansions match the involutions, q <= 1000") {
    for (long long q = 2; q <= 1000; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            CfImages im = cf_of_images(a);
            CHECK(cf_value(im.i) == op_i(a));
            CHECK(cf_value(im.r) == op_r(a));
            CHECK(cf_value(im.ir) == op_ir(a));
        }
}

TEST_CASE("closed-form golden values") {
    ContinuedFraction i14 = cf_of_images(Fraction(1, 4)).i;
    CHECK(i14 == ContinuedFraction(0, {Int(1), Int(3)}));
    CHECK(cf_of_images(Fraction(3, 10)).i == ContinuedFraction(0, {Int(1), Int(2), Int(3)}));
    CHECK(cf_of_images(Fraction(3, 14)).i ==
          ContinuedFraction(0, {Int(1), Int(3), Int(1), Int(2)}));
}

TEST_CASE("empty word fixed point") {
    CHECK(word_i("") == "");
    CHECK(word_r("") == "");
    CHECK(op_i(Fraction(1, 2)) == Fraction(1, 2));
    CHECK(op_r(Fraction(1, 2)) == Fraction(1, 2));
    CHECK(op_ir(Fraction(1, 2)) == Fraction(1, 2));
}

TEST_CASE("canonical orbit representative") {
    CHECK(orbit_of(Fraction(7, 17)).canonical() == Fraction(5, 17));
    CHECK(orbit_of(Fraction(3, 4)).canonical() == Fraction(1, 4));
    CHECK(orbit_of(Fraction(1, 2)).canonical() == Fraction(1, 2));
}
