#ifndef MBAR_RATFUNC_HPP
#define MBAR_RATFUNC_HPP

#include <string>

#include "mbar/qpoly.hpp"

namespace mbar {

// Reduced rational function in q. Canonical form: gcd(num, den) = 1, den
// monic and nonzero, zero is 0/1. Equality is therefore structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const QPoly& n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    RatFunc(const BigRat& c) : num_(QPoly(c)), den_(1) {}
    RatFunc(long c) : num_(QPoly(c)), den_(1) {}
    RatFunc(const QPoly& n, const QPoly& d) { assign(n, d); }

    static RatFunc q() { return RatFunc(QPoly::q()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;  // e >= 0

    // q -> q^k on numerator and denominator; k >= 1.
    RatFunc adams_q(int k) const;

    BigRat eval(const BigRat& v) const;  // throws PoleAtPoint

    std::string str() const;

private:
    void assign(QPoly n, QPoly d);
    QPoly num_, den_;
};

}  // namespace mbar

#endif
