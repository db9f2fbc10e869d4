#ifndef MBAR_QPOLY_HPP
#define MBAR_QPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "mbar/rational.hpp"

namespace mbar {

// Sparse univariate polynomial in q over BigRat. No zero coefficients stored.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const BigRat& c) {
        if (c != 0) c_[0] = c;
    }
    QPoly(long c) : QPoly(BigRat(c)) {}  // NOLINT: implicit by design

    static QPoly monomial(int deg, const BigRat& c = BigRat(1)) {
        QPoly p;
        if (c != 0) p.c_[deg] = c;
        return p;
    }
    static QPoly q() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    // degree of the zero polynomial is -1
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    BigRat leading() const { return c_.empty() ? BigRat(0) : c_.rbegin()->second; }
    BigRat coeff(int deg) const {
        auto it = c_.find(deg);
        return it == c_.end() ? BigRat(0) : it->second;
    }
    const std::map<int, BigRat>& coeffs() const { return c_; }

    void add_term(int deg, const BigRat& c) {
        if (c == 0) return;
        auto [it, fresh] = c_.try_emplace(deg, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& [d, c] : r.c_) c = -c;
        return r;
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (const auto& [d, c] : b.c_) r.add_term(d, c);
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (const auto& [d, c] : b.c_) r.add_term(d, -c);
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [da, ca] : a.c_)
            for (const auto& [db, cb] : b.c_) r.add_term(da + db, ca * cb);
        return r;
    }
    QPoly operator*(const BigRat& s) const {
        QPoly r;
        if (s == 0) return r;
        for (const auto& [d, c] : c_) r.c_[d] = c * s;
        return r;
    }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Quotient and remainder of exact rational division.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

    QPoly monic() const {
        if (is_zero()) return *this;
        return *this * (BigRat(1) / leading());
    }

    // q -> q^k
    QPoly subst_pow(int k) const {
        QPoly r;
        for (const auto& [d, c] : c_) r.c_[d * k] = c;
        return r;
    }

    BigRat eval(const BigRat& v) const;

    std::string str() const;  // "c_d*q^d + ... + c_0"

private:
    std::map<int, BigRat> c_;
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

}  // namespace mbar

#endif
