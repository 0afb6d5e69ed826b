#include "friezelink/rational.hpp"

#include <algorithm>
#include <sstream>

namespace friezelink {

namespace {

Int gcd_int(Int a, Int b) {
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Fraction::Fraction(Int p, Int q) {
    if (p == 0 && q == 0) throw zero_over_zero();
    if (p < 0 || q < 0) throw negative_input("fraction components must be non-negative");
    Int g = gcd_int(p, q); // gcd(p, 0) = p reduces every p/0 to the formal 1/0
    num = p / g;
    den = q / g;
}

bool Fraction::operator<(const Fraction& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return num * o.den < o.num * den;
}

Fraction make_fraction(const Int& p, const Int& q, bool allow_signed) {
    if (p == 0 && q == 0) throw zero_over_zero();
    Int pp = p, qq = q;
    if (pp < 0 || qq < 0) {
        if (!allow_signed) throw negative_input("negative input in unsigned mode");
        // Sign moves to the numerator; only a net-positive value is representable.
        if (qq < 0) { qq = -qq; pp = -pp; }
        if (pp < 0) throw negative_input("negative rationals are not representable");
    }
    return Fraction(pp, qq);
}

Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    if (slash == std::string::npos) throw error("expected fraction of the form p/q: " + text);
    std::string ps = trim(text.substr(0, slash)), qs = trim(text.substr(slash + 1));
    if (ps.empty() || qs.empty()) throw error("expected fraction of the form p/q: " + text);
    for (const std::string& s : {ps, qs})
        for (char c : s)
            if (!isdigit(static_cast<unsigned char>(c)))
                throw error("expected non-negative integers in p/q: " + text);
    return Fraction(Int(ps), Int(qs));
}

int numerator_bit(ParityType t) { return t == ParityType::ZeroOne ? 0 : 1; }
int denominator_bit(ParityType t) { return t == ParityType::OneZero ? 0 : 1; }

const char* to_string(ParityType t) {
    switch (t) {
        case ParityType::OneOne: return "1/1";
        case ParityType::OneZero: return "1/0";
        case ParityType::ZeroOne: return "0/1";
    }
    return "?";
}

ParityType classify_type(const Fraction& alpha) {
    int nb = parity_bit(alpha.num), db = parity_bit(alpha.den);
    if (nb == 1 && db == 1) return ParityType::OneOne;
    if (nb == 1 && db == 0) return ParityType::OneZero;
    if (nb == 0 && db == 1) return ParityType::ZeroOne;
    throw error("even/even is impossible for an irreducible fraction");
}

bool in_open_unit_interval(const Fraction& alpha) {
    return !alpha.is_infinite() && alpha.num > 0 && alpha.num < alpha.den;
}

bool is_farey_neighbor(const Fraction& left, const Fraction& right) {
    if (left.is_infinite()) return false;
    return left.den * right.num - left.num * right.den == 1;
}

Fraction farey_sum(const Fraction& left, const Fraction& right) {
    if (!is_farey_neighbor(left, right))
        throw not_neighbors(left.str() + " and " + right.str() + " are not Farey neighbors");
    return Fraction(left.num + right.num, left.den + right.den);
}

namespace {

// x with a*x == 1 (mod m), 1 <= x <= m-1; requires gcd(a, m) == 1, m >= 2.
Int mod_inverse(Int a, const Int& m) {
    Int t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw error("not invertible");
    if (t < 0) t += m;
    return t;
}

} // namespace

std::pair<Fraction, Fraction> parents(const Fraction& alpha) {
    if (alpha == Fraction(0, 1) || alpha.is_infinite())
        throw no_parents(alpha.str() + " has no parents");
    const Int& p = alpha.num;
    const Int& q = alpha.den;
    if (q == 1) // p/1 = (p-1)/1 # 1/0
        return {Fraction(p - 1, 1), Fraction(1, 0)};
    Int k = p / q;
    Int p0 = p % q; // (p0/q in (0,1); shift back by k at the end
    // left = u/v with v*p0 - u*q = 1, right = w/z with q*w - p0*z = 1
    Int v = mod_inverse(p0, q);
    Int u = (v * p0 - 1) / q;
    Int z = q - v;
    Int w = (p0 * z + 1) / q;
    return {Fraction(u + k * v, v), Fraction(w + k * z, z)};
}

ContinuedFraction::ContinuedFraction(Int a0_, std::vector<Int> terms_)
    : a0(std::move(a0_)), terms(std::move(terms_)) {
    for (const Int& t : terms)
        if (t < 1) throw error("continued fraction terms must be >= 1");
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << "[" << a0;
    for (const Int& t : terms) os << "," << t;
    os << "]";
    return os.str();
}

ContinuedFraction cf_expand(const Fraction& alpha, Parity parity) {
    if (alpha.is_infinite()) throw infinite_input("cannot expand 1/0");
    Int p = alpha.num, q = alpha.den;
    std::vector<Int> quots; // a0, a1, ...
    while (q != 0) {
        quots.push_back(p / q);
        Int r = p % q;
        p = q;
        q = r;
    }
    ContinuedFraction cf;
    cf.a0 = quots[0];
    cf.terms.assign(quots.begin() + 1, quots.end());
    // Euclid yields the canonical form (last term >= 2 whenever n >= 1).
    bool want_odd = false;
    switch (parity) {
        case Parity::Any: return cf;
        case Parity::Even: want_odd = false; break;
        case Parity::Odd: want_odd = true; break;
    }
    if ((cf.n() % 2 == 1) == want_odd) return cf;
    if (!cf.terms.empty() && cf.terms.back() >= 2) {
        cf.terms.back() -= 1;
        cf.terms.push_back(1);
    } else if (!cf.terms.empty() && cf.terms.back() == 1) {
        cf.terms.pop_back();
        cf.terms.back() += 1;
    } else {
        // n == 0: [a0] = [a0-1, 1]
        cf.terms.push_back(1);
        cf.a0 -= 1;
    }
    return cf;
}

Fraction cf_value(const ContinuedFraction& cf) {
    // Back substitution over (num, den) pairs, starting from a_n/1.
    Int num = 1, den = 0; // value of the empty tail = infinity
    for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
        // value = a + 1/value
        Int nnum = *it * num + den;
        std::swap(den, num);
        num = nnum;
    }
    // a0 + 1/(...) handled by the same rule with the final a0:
    Int fnum = cf.a0 * num + den;
    if (fnum < 0) throw negative_input("continued fraction value is negative");
    return Fraction(fnum, num);
}

long long count_even_terms(const ContinuedFraction& cf) {
    long long c = 0;
    for (const Int& t : cf.terms)
        if (parity_bit(t) == 0) ++c;
    return c;
}

std::vector<std::pair<int, int>> convergent_parity_bits(const ContinuedFraction& cf) {
    if (cf.a0 != 0) throw error("convergent parities need a0 = 0");
    std::vector<std::pair<int, int>> bits;
    bits.reserve(cf.terms.size() + 1);
    bits.emplace_back(0, 1); // alpha_0 = 0/1
    int pn = 1, pd = 0;      // parities of the formal alpha_{-1} = 1/0
    for (const Int& a : cf.terms) {
        int ai = parity_bit(a);
        int nn = (ai * bits.back().first + pn) & 1;
        int nd = (ai * bits.back().second + pd) & 1;
        pn = bits.back().first;
        pd = bits.back().second;
        bits.emplace_back(nn, nd);
    }
    return bits;
}

std::vector<ParityType> convergent_types(const ContinuedFraction& cf) {
    auto bits = convergent_parity_bits(cf);
    std::vector<ParityType> out;
    out.reserve(bits.size() - 1);
    for (size_t i = 1; i < bits.size(); ++i) {
        auto [nb, db] = bits[i];
        if (nb == 1 && db == 1) out.push_back(ParityType::OneOne);
        else if (nb == 1 && db == 0) out.push_back(ParityType::OneZero);
        else if (nb == 0 && db == 1) out.push_back(ParityType::ZeroOne);
        else throw error("impossible convergent parity 0/0");
    }
    return out;
}

} // namespace friezelink
