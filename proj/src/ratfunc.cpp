#include "mbar/ratfunc.hpp"

#include "mbar/errors.hpp"

namespace mbar {

void RatFunc::assign(QPoly n, QPoly d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) {
        num_ = QPoly();
        den_ = QPoly(1);
        return;
    }
    QPoly g = poly_gcd(n, d);
    if (!g.is_one()) {
        n = QPoly::divmod(n, g).first;
        d = QPoly::divmod(d, g).first;
    }
    const BigRat lead = d.leading();
    num_ = n * (BigRat(1) / lead);
    den_ = d * (BigRat(1) / lead);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    RatFunc r(1), base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

RatFunc RatFunc::adams_q(int k) const {
    return RatFunc(num_.subst_pow(k), den_.subst_pow(k));
}

BigRat RatFunc::eval(const BigRat& v) const {
    const BigRat d = den_.eval(v);
    if (d == 0) throw PoleAtPoint(v.get_str());
    return num_.eval(v) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace mbar
