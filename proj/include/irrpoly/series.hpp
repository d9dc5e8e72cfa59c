#ifndef IRRPOLY_SERIES_HPP
#define IRRPOLY_SERIES_HPP

#include "irrpoly/numbers.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrpoly {

/// Raised when a subtraction the caller asserted to be a dimension count
/// goes negative (cokernel bookkeeping).
struct NegativeCoefficientError : std::runtime_error {
    int degree;
    explicit NegativeCoefficientError(int deg)
        : std::runtime_error("negative coefficient at degree " + std::to_string(deg)),
          degree(deg) {}
};

/// Dense integer power series in t, exact up to an explicit truncation order.
/// Reading past the truncation is a hard error, never a silent zero.
class Series {
  public:
    explicit Series(int trunc) : c_(size_t(trunc) + 1, Int(0)) {
        if (trunc < 0) throw std::invalid_argument("Series: trunc must be >= 0");
    }
    static Series unit(int trunc);                 // 1
    static Series monomial(int degree, int trunc); // t^degree

    int trunc() const { return int(c_.size()) - 1; }
    const Int& at(int k) const {
        if (k < 0 || k > trunc())
            throw std::out_of_range("Series: coefficient " + std::to_string(k) +
                                    " outside truncation " + std::to_string(trunc()));
        return c_[size_t(k)];
    }
    void set(int k, Int v) {
        if (k < 0 || k > trunc())
            throw std::out_of_range("Series::set: degree " + std::to_string(k) +
                                    " outside truncation " + std::to_string(trunc()));
        c_[size_t(k)] = std::move(v);
    }

    Series add(const Series& o) const;   // trunc = min
    Series sub(const Series& o) const;   // trunc = min; may go negative
    Series mul(const Series& o) const;   // trunc = min
    Series shifted(int s) const;         // s >= 0; trunc grows by s
    Series truncated(int T) const;       // T <= trunc

    std::optional<int> lowest_degree() const;  // nullopt: zero within truncation
    bool nonnegative() const;

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string() const;  // "t^2 + t^4 + 2 t^6"

  private:
    std::vector<Int> c_;
};

/// Pointwise target_k - source_{k-shift}; throws NegativeCoefficientError
/// (naming the first failing degree) if any coefficient would go negative.
Series subtract_dims(const Series& target, const Series& source, int shift_of_source);

/// Closed form t^shift / prod_i (1 - t^{k_i}).
struct RationalForm {
    int shift = 0;
    std::vector<int> denom_exponents;

    Series expand(int T) const;  // coefficientwise exact to order T
    std::string to_string() const;
};

} // namespace irrpoly

#endif
