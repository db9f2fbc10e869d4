#ifndef MBAR_RATIONAL_HPP
#define MBAR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace mbar {

// Arbitrary-precision rational, always canonical (gcd-reduced, positive
// denominator). GMP maintains the invariants; everything here is glue.
using BigRat = mpq_class;

inline BigRat rat(long num, long den = 1) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a", "-a", "a/b".
inline BigRat rat_from_string(const std::string& s) {
    BigRat r(s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigRat& r) { return r.get_str(); }

inline BigRat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRat(f);
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

}  // namespace mbar

#endif
