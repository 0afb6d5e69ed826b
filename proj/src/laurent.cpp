#include "friezelink/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace friezelink {

void LaurentPoly::trim() {
    size_t head = 0;
    while (head < coef_.size() && coef_[head] == 0) ++head;
    size_t tail = coef_.size();
    while (tail > head && coef_[tail - 1] == 0) --tail;
    if (head > 0 || tail < coef_.size()) {
        coef_ = std::vector<Int>(coef_.begin() + head, coef_.begin() + tail);
        lo_ += static_cast<long long>(head);
    }
    if (coef_.empty()) lo_ = 0;
}

LaurentPoly LaurentPoly::monomial(Int c, long long e, Var v) {
    LaurentPoly p(v);
    if (c != 0) {
        p.lo_ = e;
        p.coef_ = {std::move(c)};
    }
    return p;
}

LaurentPoly LaurentPoly::loop_value() {
    LaurentPoly p(Var::A);
    p.lo_ = -2;
    p.coef_ = {Int(-1), Int(0), Int(0), Int(0), Int(-1)};
    return p;
}

LaurentPoly LaurentPoly::minus_a_cubed_pow(long long k) {
    return monomial((k % 2 == 0) ? Int(1) : Int(-1), 3 * k, Var::A);
}

long long LaurentPoly::lowest() const {
    if (is_zero()) throw error("zero polynomial has no lowest exponent");
    return lo_;
}

long long LaurentPoly::highest() const {
    if (is_zero()) throw error("zero polynomial has no highest exponent");
    return lo_ + static_cast<long long>(coef_.size()) - 1;
}

Int LaurentPoly::coeff(long long e) const {
    if (is_zero() || e < lo_ || e > highest()) return 0;
    return coef_[static_cast<size_t>(e - lo_)];
}

long long LaurentPoly::term_count() const {
    long long n = 0;
    for (const Int& c : coef_)
        if (c != 0) ++n;
    return n;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (Int& c : p.coef_) c = -c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_ != b.var_) throw variable_mismatch();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long lo = std::min(a.lo_, b.lo_);
    long long hi = std::max(a.highest(), b.highest());
    LaurentPoly out(a.var_);
    out.lo_ = lo;
    out.coef_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
    for (size_t i = 0; i < a.coef_.size(); ++i) out.coef_[a.lo_ - lo + i] += a.coef_[i];
    for (size_t i = 0; i < b.coef_.size(); ++i) out.coef_[b.lo_ - lo + i] += b.coef_[i];
    out.trim();
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_ != b.var_) throw variable_mismatch();
    if (a.is_zero() || b.is_zero()) return LaurentPoly::zero(a.var_);
    LaurentPoly out(a.var_);
    out.lo_ = a.lo_ + b.lo_;
    out.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coef_.size(); ++i) {
        if (a.coef_[i] == 0) continue;
        for (size_t j = 0; j < b.coef_.size(); ++j)
            if (b.coef_[j] != 0) out.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
    out.trim();
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return var_ == o.var_ && lo_ == o.lo_ && coef_ == o.coef_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (var_ != o.var_) return var_ < o.var_;
    if (lo_ != o.lo_) return lo_ < o.lo_;
    if (coef_.size() != o.coef_.size()) return coef_.size() < o.coef_.size();
    for (size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != o.coef_[i]) return coef_[i] < o.coef_[i];
    return false;
}

LaurentPoly LaurentPoly::pow(long long k) const {
    if (k < 0) throw error("negative power of a general polynomial");
    LaurentPoly acc = one(var_);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::conjugate() const {
    if (is_zero()) return *this;
    LaurentPoly p(var_);
    p.lo_ = -highest();
    p.coef_.assign(coef_.rbegin(), coef_.rend());
    return p;
}

LaurentPoly LaurentPoly::to_t_half() const {
    if (var_ != Var::A) throw variable_mismatch();
    LaurentPoly p(Var::THalf);
    if (is_zero()) return p;
    for (long long e = lo_; e <= highest(); ++e)
        if (coeff(e) != 0 && (e % 2 != 0))
            throw odd_exponent("odd A-exponent " + std::to_string(e) +
                               " cannot be written in t^(1/2)");
    // e -> -e/2 reverses the order, so build from the top.
    p.lo_ = -highest() / 2;
    for (long long e = highest(); e >= lo_; e -= 2) p.coef_.push_back(coeff(e));
    p.trim();
    return p;
}

namespace {

// t^(e/2) printed with halves reduced: t, t^2, t^(1/2), t^(-3/2), ...
std::string t_power(long long e) {
    if (e == 2) return "t";
    if (e % 2 == 0) return "t^" + std::to_string(e / 2);
    std::string s = std::to_string(e) + "/2";
    return "t^(" + s + ")";
}

std::string a_power(long long e) { return e == 1 ? "A" : "A^" + std::to_string(e); }

std::string render_terms(const LaurentPoly& p, Var v, long long shift) {
    // Descending exponents; `shift` subtracts a factored-out monomial.
    std::ostringstream os;
    bool first = true;
    for (long long e = p.highest(); e >= p.lowest(); --e) {
        Int c = p.coeff(e);
        if (c == 0) continue;
        long long ee = e - shift;
        std::string mag = (c < 0 ? Int(-c) : c).str();
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (ee == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << (v == Var::A ? a_power(ee) : t_power(ee));
        }
    }
    return os.str();
}

} // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    return render_terms(*this, var_, 0);
}

std::string LaurentPoly::pretty() const {
    if (is_zero()) return "0";
    if (var_ == Var::A) return str();
    long long mid = (highest() + lowest()) / 2;
    if (mid == 0) return str();
    return t_power(mid) + "*(" + render_terms(*this, var_, mid) + ")";
}

std::string LaurentPoly::json() const {
    std::ostringstream os;
    os << "{\"var\":\"" << (var_ == Var::A ? "A" : "t^(1/2)") << "\",\"terms\":[";
    bool first = true;
    if (!is_zero()) {
        for (long long e = highest(); e >= lowest(); --e) {
            if (coeff(e) == 0) continue;
            if (!first) os << ",";
            first = false;
            os << "[" << e << "," << coeff(e).str() << "]";
        }
    }
    os << "]}";
    return os.str();
}

LaurentPoly LaurentBuilder::build() const {
    LaurentPoly p(var);
    p.lo_ = lo;
    p.coef_ = coef;
    p.trim();
    return p;
}

} // namespace friezelink
