#include "doctest.h"

#include <functional>

#include "friezelink/rational.hpp"

using namespace friezelink;

namespace {

ContinuedFraction cf(std::initializer_list<long long> xs) {
    auto it = xs.begin();
    Int a0 = *it++;
    std::vector<Int> t;
    for (; it != xs.end(); ++it) t.emplace_back(*it);
    return ContinuedFraction(a0, t);
}

} // namespace

TEST_CASE("make_fraction reduces and normalizes") {
    CHECK(make_fraction(6, 10) == Fraction(3, 5));
    CHECK(make_fraction(1, 0) == Fraction(1, 0));
    CHECK(make_fraction(5, 0) == Fraction(1, 0));
    CHECK(make_fraction(0, 7) == Fraction(0, 1));
    CHECK(make_fraction(-6, -10, true) == Fraction(3, 5));
    CHECK_THROWS_AS(make_fraction(0, 0), zero_over_zero);
    CHECK_THROWS_AS(make_fraction(-1, 2), negative_input);
    CHECK_THROWS_AS(make_fraction(-1, 2, true), negative_input);
}

TEST_CASE("parse_fraction") {
    CHECK(parse_fraction("3/8") == Fraction(3, 8));
    CHECK(parse_fraction(" 7 / 17 ") == Fraction(7, 17));
    CHECK_THROWS(parse_fraction("3"));
    CHECK_THROWS(parse_fraction("a/b"));
}

TEST_CASE("farey neighbors") {
    CHECK(is_farey_neighbor(Fraction(0, 1), Fraction(1, 1)));
    CHECK(is_farey_neighbor(Fraction(1, 3), Fraction(1, 2)));
    CHECK_FALSE(is_farey_neighbor(Fraction(1, 3), Fraction(2, 3)));
    CHECK(is_farey_neighbor(Fraction(2, 1), Fraction(1, 0)));
}

TEST_CASE("farey_sum") {
    CHECK(farey_sum(Fraction(0, 1), Fraction(1, 1)) == Fraction(1, 2));
    CHECK(farey_sum(Fraction(1, 5), Fraction(2, 9)) == Fraction(3, 14));
    CHECK(farey_sum(Fraction(2, 7), Fraction(1, 3)) == Fraction(3, 10));
    CHECK_THROWS_AS(farey_sum(Fraction(1, 3), Fraction(2, 3)), not_neighbors);
}

TEST_CASE("parents") {
    CHECK(parents(Fraction(1, 2)) == std::pair(Fraction(0, 1), Fraction(1, 1)));
    CHECK(parents(Fraction(3, 14)) == std::pair(Fraction(1, 5), Fraction(2, 9)));
    CHECK(parents(Fraction(1, 4)) == std::pair(Fraction(0, 1), Fraction(1, 3)));
    CHECK(parents(Fraction(7, 17)) == std::pair(Fraction(2, 5), Fraction(5, 12)));
    CHECK(parents(Fraction(2, 1)) == std::pair(Fraction(1, 1), Fraction(1, 0)));
    CHECK_THROWS_AS(parents(Fraction(0, 1)), no_parents);
    CHECK_THROWS_AS(parents(Fraction(1, 0)), no_parents);
}

TEST_CASE("parents reconstruct by mediant for q <= 1000") {
    for (long long q = 2; q <= 1000; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue; // not coprime
            auto [l, r] = parents(a);
            CHECK(is_farey_neighbor(l, r));
            CHECK(farey_sum(l, r) == a);
            CHECK(l < a);
            CHECK(a < r);
        }
}

TEST_CASE("cf_expand golden values") {
    CHECK(cf_expand(Fraction(3, 8), Parity::Odd) == cf({0, 2, 1, 2}));
    CHECK(cf_expand(Fraction(8, 11)) == cf({0, 1, 2, 1, 2}));
    CHECK(cf_expand(Fraction(1, 2), Parity::Even) == cf({0, 1, 1}));
    CHECK(cf_expand(Fraction(7, 17)) == cf({0, 2, 2, 3}));
    CHECK_THROWS_AS(cf_expand(Fraction(1, 0)), infinite_input);
}

TEST_CASE("cf_value golden values") {
    CHECK(cf_value(cf({0, 4})) == Fraction(1, 4));
    CHECK(cf_value(cf({0, 3, 3})) == Fraction(3, 10));
    CHECK(cf_value(cf({0, 1, 3, 1, 2})) == Fraction(11, 14));
    CHECK(cf_value(cf({2})) == Fraction(2, 1));
}

TEST_CASE("cf roundtrip both parities for q <= 1000") {
    for (long long q = 2; q <= 1000; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            for (Parity par : {Parity::Any, Parity::Even, Parity::Odd}) {
                ContinuedFraction c = cf_expand(a, par);
                CHECK(cf_value(c) == a);
                if (par == Parity::Even) CHECK(c.n() % 2 == 0);
                if (par == Parity::Odd) CHECK(c.n() % 2 == 1);
            }
        }
}

TEST_CASE("classify_type") {
    CHECK(classify_type(Fraction(3, 14)) == ParityType::OneZero);
    CHECK(classify_type(Fraction(3, 8)) == ParityType::OneZero);
    CHECK(classify_type(Fraction(2, 3)) == ParityType::ZeroOne);
    CHECK(classify_type(Fraction(1, 1)) == ParityType::OneOne);
    CHECK(classify_type(Fraction(1, 0)) == ParityType::OneZero);
    CHECK(classify_type(Fraction(0, 1)) == ParityType::ZeroOne);
}

TEST_CASE("count_even_terms") {
    CHECK(count_even_terms(cf({0, 2, 1, 2})) == 2);
    CHECK(count_even_terms(cf({0, 1, 1})) == 0);
    CHECK(count_even_terms(cf({0, 4, 1, 2})) == 2);
}

TEST_CASE("convergent_types golden values") {
    CHECK(convergent_types(cf({0, 2, 1, 2})) ==
          std::vector<ParityType>{ParityType::OneZero, ParityType::OneOne, ParityType::OneZero});
    CHECK(convergent_types(cf({0, 1})) == std::vector<ParityType>{ParityType::OneOne});
    CHECK(convergent_types(cf({0, 1, 2, 1, 2})) ==
          std::vector<ParityType>{ParityType::OneOne, ParityType::ZeroOne, ParityType::OneZero,
                                  ParityType::ZeroOne});
}

TEST_CASE("convergent_types agrees with direct evaluation, sum of terms <= 18") {
    // exhaustive over compositions
    std::vector<Int> terms;
    std::function<void()> rec = [&]() {
        if (!terms.empty()) {
            ContinuedFraction c(0, terms);
            auto types = convergent_types(c);
            for (size_t i = 0; i < terms.size(); ++i) {
                ContinuedFraction pre(0, std::vector<Int>(terms.begin(), terms.begin() + i + 1));
                CHECK(types[i] == classify_type(cf_value(pre)));
            }
        }
        Int used = 0;
        for (const Int& t : terms) used += t;
        for (Int a = 1; used + a <= 18; ++a) {
            terms.push_back(a);
            rec();
            terms.pop_back();
        }
    };
    rec();
}

TEST_CASE("Lemma 1.5 parity sweep, q <= 1000") {
    long long checked = 0;
    for (long long q = 2; q <= 1000; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            ContinuedFraction c = cf_expand(a, Parity::Even);
            bool n0_even = count_even_terms(c) % 2 == 0;
            auto [l, r] = parents(a); // (x/r, y/s) in the lemma's naming
            const Int& x = l.num;
            const Int& y = r.num;
            const Int& rd = l.den;
            const Int& sd = r.den;
            switch (classify_type(a)) {
                case ParityType::OneZero:
                    CHECK(n0_even == (parity_bit(x) == 0));
                    CHECK(!n0_even == (parity_bit(y) == 0));
                    break;
                case ParityType::OneOne:
                    CHECK(n0_even == (parity_bit(y) == 0));
                    CHECK(!n0_even == (parity_bit(x) == 0));
                    break;
                case ParityType::ZeroOne:
                    CHECK(parity_bit(x) == 1);
                    CHECK(parity_bit(y) == 1);
                    CHECK(n0_even == (parity_bit(sd) == 0));
                    CHECK(!n0_even == (parity_bit(rd) == 0));
                    break;
            }
            ++checked;
        }
    CHECK(checked > 300000);
}

TEST_CASE("neighbor stability under mediant") {
    for (long long q = 2; q <= 60; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            auto [l, r] = parents(a);
            CHECK(is_farey_neighbor(l, a));
            CHECK(is_farey_neighbor(a, r));
        }
}
