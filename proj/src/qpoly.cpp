#include "mbar/qpoly.hpp"

#include <sstream>

#include "mbar/errors.hpp"

namespace mbar {

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    QPoly q, r = a;
    const int db = b.degree();
    const BigRat lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        const int d = r.degree() - db;
        const BigRat c = r.leading() / lb;
        q.add_term(d, c);
        r = r - b * QPoly::monomial(d, c);
    }
    return {q, r};
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = QPoly::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

BigRat QPoly::eval(const BigRat& v) const {
    // Horner over the sparse support.
    BigRat acc(0);
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0) {
            for (int i = 0; i < prev - it->first; ++i) acc *= v;
        }
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int i = 0; i < prev; ++i) acc *= v;
    return acc;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        BigRat c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        const int d = it->first;
        if (d == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "q";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace mbar
