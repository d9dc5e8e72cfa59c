#ifndef IRRPOLY_QPOLY_HPP
#define IRRPOLY_QPOLY_HPP

#include "irrpoly/numbers.hpp"

#include <map>
#include <string>

namespace irrpoly {

/// Exact polynomial in the indeterminate q with rational coefficients.
/// Stored sparsely; zero coefficients are never kept.
class QPoly {
  public:
    QPoly() = default;  // zero polynomial

    static QPoly constant(const Rat& c);
    static QPoly q_power(long e, const Rat& c = 1);
    static QPoly geometric(long len);  // 1 + q + ... + q^{len-1}

    bool is_zero() const { return c_.empty(); }
    /// Max exponent with nonzero coefficient; -1 for the zero polynomial.
    long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    const std::map<long, Rat>& coefficients() const { return c_; }
    Rat coefficient(long e) const;
    void set_coefficient(long e, const Rat& v);

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator-() const;
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly scaled(const Rat& s) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    Rat eval(const Rat& q) const;
    /// Evaluation that must land on an integer; throws std::domain_error otherwise.
    Int eval_int(const Int& q) const;

    /// Human-readable form, exponents descending: "q^5 + 1/2 q^4 - q^2 - 1/2 q".
    std::string to_string() const;

  private:
    std::map<long, Rat> c_;
};

/// Number of size-m multisets from "P objects": prod_{i=0}^{m-1}(P+i) / m!.
QPoly multiset_binomial(const QPoly& P, unsigned long m);

} // namespace irrpoly

#endif
