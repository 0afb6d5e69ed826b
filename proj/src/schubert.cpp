#include "friezelink/schubert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
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

bool schubert_equivalent_unoriented(const Fraction& alpha, const Fraction& beta) {
    if (!in_open_unit_interval(alpha) || !in_open_unit_interval(beta))
        throw out_of_range("schubert check needs fractions in (0,1)");
    if (alpha.den != beta.den) return false;
    const Int& q = alpha.den;
    return (alpha.num * beta.num) % q == 1 % q || alpha.num == beta.num;
}

LinkClass orbit_class(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha) || alpha.den < 2)
        throw out_of_range("orbit_class needs alpha in (0,1) with q >= 2");
    Orbit o = orbit_of(alpha);
    LinkClass cls;
    cls.q = alpha.den;
    for (const Fraction& f : o.distinct()) cls.numerators.push_back(f.num);
    std::sort(cls.numerators.begin(), cls.numerators.end());
    return cls;
}

Fraction LinkClass::canonical() const { return Fraction(numerators.front(), q); }

std::vector<LinkClass> classify_denominator(const Int& q) {
    if (q < 2) throw invalid_q("classify_denominator needs q >= 2");
    std::vector<LinkClass> out;
    std::map<Int, bool> seen;
    for (Int p = 1; p < q; ++p) {
        if (gcd_int(p, q) != 1 || seen.count(p)) continue;
        LinkClass cls = orbit_class(Fraction(p, q));
        for (const Int& m : cls.numerators) seen[m] = true;
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<LinkClass> classify_denominator_by_congruence(const Int& q) {
    if (q < 2) throw invalid_q("classify_denominator needs q >= 2");
    std::vector<LinkClass> out;
    std::map<Int, bool> seen;
    for (Int p = 1; p < q; ++p) {
        if (gcd_int(p, q) != 1 || seen.count(p)) continue;
        LinkClass cls;
        cls.q = q;
        for (Int x = 1; x < q; ++x) {
            if (gcd_int(x, q) != 1) continue;
            Int px = (p * x) % q;
            bool same = (px == 1 % q) || (px == (q - 1) % q) || x == p || x + p == q;
            if (same) cls.numerators.push_back(x);
        }
        std::sort(cls.numerators.begin(), cls.numerators.end());
        cls.numerators.erase(std::unique(cls.numerators.begin(), cls.numerators.end()),
                             cls.numerators.end());
        for (const Int& m : cls.numerators) seen[m] = true;
        out.push_back(std::move(cls));
    }
    return out;
}

bool oriented_schubert_witness(const Fraction& alpha, const Fraction& beta) {
    if (!in_open_unit_interval(alpha) || !in_open_unit_interval(beta))
        throw out_of_range("oriented witness needs fractions in (0,1)");
    if (alpha.den != beta.den) return false;
    return (alpha.num * beta.num) % (2 * alpha.den) == 1;
}

std::string classes_csv(const Int& q) {
    std::ostringstream os;
    os << "q,members,size,canonical\n";
    for (const LinkClass& cls : classify_denominator(q)) {
        os << q.str() << ",\"";
        for (size_t i = 0; i < cls.numerators.size(); ++i) {
            if (i) os << " ";
            os << cls.numerators[i].str();
        }
        os << "\"," << cls.numerators.size() << "," << cls.canonical().str() << "\n";
    }
    return os.str();
}

} // namespace friezelink
