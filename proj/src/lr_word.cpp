#include "friezelink/lr_word.hpp"

#include <algorithm>

namespace friezelink {

namespace {

void require_unit_interval(const Fraction& alpha, const char* who) {
    if (!in_open_unit_interval(alpha))
        throw out_of_range(std::string(who) + " needs alpha in (0,1), got " + alpha.str());
}

} // namespace

bool is_valid_word(const LRWord& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'L' || c == 'R'; });
}

LRWord word_of(const Fraction& alpha) {
    require_unit_interval(alpha, "word_of");
    LRWord w;
    Fraction cur = alpha;
    const Fraction half(1, 2);
    while (cur != half) {
        auto [left, right] = parents(cur);
        if (left.den < right.den) {
            w.push_back('L');
            cur = right;
        } else {
            w.push_back('R');
            cur = left;
        }
    }
    return w;
}

Fraction alpha_of(const LRWord& w) {
    if (!is_valid_word(w)) throw error("LR word may only contain L and R: " + w);
    // The descent path from 1/2 is the reversed word.
    Fraction lo(0, 1), hi(1, 1);
    Fraction v(1, 2);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == 'L') hi = v;
        else lo = v;
        v = Fraction(lo.num + hi.num, lo.den + hi.den);
    }
    return v;
}

LRWord word_i(const LRWord& w) {
    LRWord out = w;
    for (char& c : out) c = (c == 'L') ? 'R' : 'L';
    return out;
}

LRWord word_r(const LRWord& w) { return LRWord(w.rbegin(), w.rend()); }

LRWord word_ir(const LRWord& w) { return word_i(word_r(w)); }

Fraction op_i(const Fraction& alpha) {
    require_unit_interval(alpha, "op_i");
    return Fraction(alpha.den - alpha.num, alpha.den);
}

Fraction op_r(const Fraction& alpha) {
    require_unit_interval(alpha, "op_r");
    return Fraction(parents(alpha).first.den, alpha.den);
}

Fraction op_ir(const Fraction& alpha) {
    require_unit_interval(alpha, "op_ir");
    return Fraction(parents(alpha).second.den, alpha.den);
}

namespace {

// Drop a zero produced at position k by merging its neighbours:
// [..., x, 0, y, ...] = [..., x + y, ...].
ContinuedFraction normalize_zero_term(Int a0, std::vector<Int> t) {
    std::vector<Int> out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) {
            if (out.empty() || i + 1 >= t.size()) throw error("malformed expansion");
            Int merged = out.back() + t[i + 1];
            out.pop_back();
            out.push_back(merged);
            ++i;
        } else {
            out.push_back(t[i]);
        }
    }
    return ContinuedFraction(std::move(a0), std::move(out));
}

} // namespace

CfImages cf_of_images(const Fraction& alpha) {
    require_unit_interval(alpha, "cf_of_images");
    ContinuedFraction even = cf_expand(alpha, Parity::Even);
    ContinuedFraction canon = cf_expand(alpha, Parity::Any);

    CfImages out;
    {
        std::vector<Int> t;
        t.push_back(1);
        t.push_back(canon.terms[0] - 1);
        t.insert(t.end(), canon.terms.begin() + 1, canon.terms.end());
        out.i = normalize_zero_term(0, std::move(t));
    }
    {
        std::vector<Int> t;
        t.push_back(1);
        t.push_back(even.terms.back() - 1);
        for (auto it = even.terms.rbegin() + 1; it != even.terms.rend(); ++it) t.push_back(*it);
        out.r = normalize_zero_term(0, std::move(t));
    }
    {
        std::vector<Int> t(even.terms.rbegin(), even.terms.rend());
        out.ir = ContinuedFraction(0, std::move(t));
    }
    return out;
}

Orbit orbit_of(const Fraction& alpha) {
    require_unit_interval(alpha, "orbit_of");
    return Orbit{alpha, op_i(alpha), op_r(alpha), op_ir(alpha)};
}

std::vector<Fraction> Orbit::distinct() const {
    std::vector<Fraction> v{alpha, i, r, ir};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Fraction Orbit::canonical() const {
    Fraction best = alpha;
    for (const Fraction& f : {i, r, ir}) {
        if (f.num < best.num ||
            (f.num == best.num && op_i(f).num < op_i(best).num))
            best = f;
    }
    return best;
}

} // namespace friezelink
