#include "doctest.h"

#include <algorithm>
#include <set>

#include "friezelink/frieze.hpp"

using namespace friezelink;

namespace {

// Rotations of a row compared as a cyclic sequence.
bool cyclic_equal(const std::vector<Int>& row, const std::vector<long long>& expect) {
    if (row.size() != expect.size()) return false;
    size_t n = row.size();
    for (size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (row[(s + i) % n] != expect[i]) ok = false;
        if (ok) return true;
    }
    return false;
}

// Every unit diamond b (top), a (left), d (right), c (bottom): ad - bc = 1.
void check_diamonds(const Frieze& f) {
    for (long long r = 0; r + 2 < f.row_count(); ++r)
        for (long long x = 0; x < 2 * f.order; ++x) {
            if (!f.defined_at(r, x)) continue;
            Int b = f.at(r, x);
            Int a = f.at(r + 1, x - 1);
            Int d = f.at(r + 1, x + 1);
            Int c = f.at(r + 2, x);
            CHECK(a * d - b * c == 1);
        }
}

} // namespace

TEST_CASE("figure-two frieze from LLRRL") {
    Frieze f = frieze_from_word("LLRRL");
    CHECK(f.order == 9);
    CHECK(f.interior_rows() == 6);
    CHECK(cyclic_equal(f.rows[0], {1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclic_equal(f.rows[1], {2, 4, 2, 2, 1, 4, 2, 3, 1}));
    CHECK(cyclic_equal(f.rows[2], {1, 7, 7, 3, 1, 3, 7, 5, 2}));
    CHECK(cyclic_equal(f.rows[3], {3, 12, 10, 1, 2, 5, 17, 3, 1}));
    CHECK(cyclic_equal(f.rows[4], {2, 5, 17, 3, 1, 3, 12, 10, 1}));
    CHECK(cyclic_equal(f.rows[5], {3, 7, 5, 2, 1, 7, 7, 3, 1}));
    CHECK(cyclic_equal(f.rows[6], {1, 4, 2, 3, 1, 2, 4, 2, 2}));
    CHECK(cyclic_equal(f.rows[7], {1, 1, 1, 1, 1, 1, 1, 1, 1}));

    MaxEntryInfo mx = max_entry_with_neighbors(f);
    CHECK(mx.q == 17);
    std::multiset<Int> around(mx.around.begin(), mx.around.end());
    CHECK(around == std::multiset<Int>{5, 7, 10, 12});
}

TEST_CASE("small friezes") {
    Frieze f12 = frieze_of(Fraction(1, 2));
    CHECK(f12.order == 4);
    MaxEntryInfo m12 = max_entry_with_neighbors(f12);
    CHECK(m12.q == 2);
    CHECK(std::multiset<Int>(m12.around.begin(), m12.around.end()) ==
          std::multiset<Int>{1, 1, 1, 1});

    Frieze f13 = frieze_of(Fraction(1, 3));
    CHECK(f13.order == 5);
    CHECK(max_entry_with_neighbors(f13).q == 3);

    Frieze f14 = frieze_of(Fraction(1, 4));
    MaxEntryInfo m14 = max_entry_with_neighbors(f14);
    CHECK(m14.q == 4);
    CHECK(std::multiset<Int>(m14.around.begin(), m14.around.end()) ==
          std::multiset<Int>{1, 1, 3, 3});
}

TEST_CASE("diamond rule holds for all words up to length 12") {
    for (int len = 0; len <= 12; ++len)
        for (unsigned long long bits = 0; bits < (1ULL << len); ++bits) {
            LRWord w;
            for (int i = 0; i < len; ++i) w.push_back((bits >> i) & 1 ? 'R' : 'L');
            Frieze f = frieze_from_word(w);
            CHECK(f.order == len + 4);
            check_diamonds(f);
        }
}

TEST_CASE("max entry equals denominator with orbit numerators around it, q <= 200") {
    for (long long q = 2; q <= 200; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            Orbit o = orbit_of(a);
            Frieze f = frieze_of(a);
            MaxEntryInfo mx = max_entry_with_neighbors(f);
            CHECK(mx.q == q);
            std::multiset<Int> around(mx.around.begin(), mx.around.end());
            std::multiset<Int> expect{o.alpha.num, o.i.num, o.r.num, o.ir.num};
            CHECK(around == expect);
        }
}

TEST_CASE("friezes of a word and its ir-image are equivalent, words up to length 10") {
    for (int len = 0; len <= 10; ++len)
        for (unsigned long long bits = 0; bits < (1ULL << len); ++bits) {
            LRWord w;
            for (int i = 0; i < len; ++i) w.push_back((bits >> i) & 1 ? 'R' : 'L');
            CHECK(friezes_equivalent(frieze_from_word(w), frieze_from_word(word_ir(w))));
        }
}

TEST_CASE("orbit members share one frieze, q <= 100") {
    for (long long q = 2; q <= 100; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction a(p, q);
            if (a.den != q) continue;
            Orbit o = orbit_of(a);
            Frieze f = frieze_of(a);
            for (const Fraction& m : {o.i, o.r, o.ir})
                CHECK(friezes_equivalent(f, frieze_of(m)));
        }
}

TEST_CASE("inequivalent friezes") {
    CHECK(friezes_equivalent(frieze_of(Fraction(7, 17)), frieze_of(Fraction(5, 17))));
    CHECK_FALSE(friezes_equivalent(frieze_of(Fraction(1, 3)), frieze_of(Fraction(1, 4))));
}

TEST_CASE("render formats") {
    Frieze f = frieze_of(Fraction(1, 3));
    std::string ascii = render_frieze(f, FriezeFormat::Ascii);
    CHECK(ascii.find('3') != std::string::npos);
    std::string marked = render_frieze(f, FriezeFormat::Ascii, true);
    CHECK(marked.find("[3]") != std::string::npos);
    std::string md = render_frieze(f, FriezeFormat::Markdown);
    CHECK(md.find('|') != std::string::npos);
    std::string js = render_frieze(f, FriezeFormat::Json);
    CHECK(js.find("\"order\":5") != std::string::npos);
    CHECK(js.find("\"rows\"") != std::string::npos);
    CHECK(js.find("\"offsets\"") != std::string::npos);
}
