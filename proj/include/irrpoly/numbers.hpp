#ifndef IRRPOLY_NUMBERS_HPP
#define IRRPOLY_NUMBERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace irrpoly {

using Int = mpz_class;
using Rat = mpq_class;

/// C(n, k) for arbitrary (possibly negative) integer n and k >= 0.
inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

inline Int factorial(unsigned long m) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

/// Number of size-m multisets drawn from x objects: C(x+m-1, m).
/// Defined for any integer x (polynomial in x, integer-valued).
inline Int multiset_binomial(const Int& x, unsigned long m) {
    return binomial(Int(x + long(m) - 1), m);
}

/// Moebius function by trial factorization; n >= 1.
inline int mobius(unsigned long n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be positive");
    int r = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

/// The two-argument mpq constructor does not reduce; this one does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

/// Canonical rational rendering: "n" when the denominator is 1, else "n/d".
inline std::string to_string(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Fixed-point decimal rendering, truncated toward zero. Presentation only;
/// exact values are always carried alongside.
inline std::string decimal_string(const Rat& x, int digits = 6) {
    Rat c(x);
    c.canonicalize();
    Int num = c.get_num(), den = c.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip = num / den;
    Int rem = num % den;
    std::string s = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.get_str();
    if (digits > 0) {
        s += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            Int digit = rem / den;
            rem %= den;
            s += char('0' + digit.get_ui());
        }
    }
    return s;
}

} // namespace irrpoly

#endif
