#pragma once

#include <vector>

#include "friezelink/core.hpp"

namespace friezelink {

/// Formal variable of a Laurent polynomial: the bracket variable A, or
/// S = t^(1/2) after the t = A^(-4) substitution.
enum class Var { A, THalf };

/// Integer-coefficient Laurent polynomial in one variable, dense between its
/// lowest and highest nonzero exponents.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Var v) : var_(v) {}

    static LaurentPoly zero(Var v = Var::A) { return LaurentPoly(v); }
    static LaurentPoly one(Var v = Var::A) { return monomial(1, 0, v); }
    static LaurentPoly monomial(Int c, long long e, Var v = Var::A);
    /// delta = -A^2 - A^(-2), the Kauffman loop value.
    static LaurentPoly loop_value();
    /// (-A^3)^k for any integer k.
    static LaurentPoly minus_a_cubed_pow(long long k);

    Var var() const { return var_; }
    bool is_zero() const { return coef_.empty(); }
    long long lowest() const;
    long long highest() const;
    Int coeff(long long e) const;
    long long term_count() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const; // arbitrary total order for sets

    LaurentPoly pow(long long k) const; // k >= 0
    /// Exponent negation (A <-> A^(-1), or t^(1/2) <-> t^(-1/2)).
    LaurentPoly conjugate() const;
    /// A-variable polynomial with all exponents even -> S-variable via e -> -e/2.
    LaurentPoly to_t_half() const;

    /// "c*A^e +- ..." in descending exponent order; "0" for zero.
    std::string str() const;
    /// THalf polynomials rendered as t^(k/2)*(...) with the symmetric midpoint
    /// factored out, matching how the worked values are displayed.
    std::string pretty() const;
    /// {"var": "A"|"t^(1/2)", "terms": [[exp, coeff], ...]} descending.
    std::string json() const;

  private:
    Var var_ = Var::A;
    long long lo_ = 0;
    std::vector<Int> coef_; // coef_[i] is the coefficient of x^(lo_+i)

    void trim();
    friend struct LaurentBuilder;
};

struct LaurentBuilder {
    Var var = Var::A;
    long long lo = 0;
    std::vector<Int> coef;
    LaurentPoly build() const;
};

} // namespace friezelink
