#include "irrpoly/series.hpp"

#include <algorithm>

namespace irrpoly {

Series Series::unit(int trunc) {
    Series s(trunc);
    s.c_[0] = 1;
    return s;
}

Series Series::monomial(int degree, int trunc) {
    Series s(trunc);
    s.set(degree, 1);
    return s;
}

Series Series::add(const Series& o) const {
    Series r(std::min(trunc(), o.trunc()));
    for (int k = 0; k <= r.trunc(); ++k) r.c_[size_t(k)] = c_[size_t(k)] + o.c_[size_t(k)];
    return r;
}

Series Series::sub(const Series& o) const {
    Series r(std::min(trunc(), o.trunc()));
    for (int k = 0; k <= r.trunc(); ++k) r.c_[size_t(k)] = c_[size_t(k)] - o.c_[size_t(k)];
    return r;
}

Series Series::mul(const Series& o) const {
    Series r(std::min(trunc(), o.trunc()));
    int T = r.trunc();
    for (int i = 0; i <= std::min(trunc(), T); ++i) {
        if (c_[size_t(i)] == 0) continue;
        for (int j = 0; i + j <= T && j <= o.trunc(); ++j) {
            if (o.c_[size_t(j)] == 0) continue;
            r.c_[size_t(i + j)] += c_[size_t(i)] * o.c_[size_t(j)];
        }
    }
    return r;
}

Series Series::shifted(int s) const {
    if (s < 0) throw std::invalid_argument("Series::shifted: shift must be >= 0");
    Series r(trunc() + s);
    for (int k = 0; k <= trunc(); ++k) r.c_[size_t(k + s)] = c_[size_t(k)];
    return r;
}

Series Series::truncated(int T) const {
    if (T > trunc())
        throw std::out_of_range("Series::truncated: requested order " + std::to_string(T) +
                                " exceeds truncation " + std::to_string(trunc()));
    Series r(T);
    for (int k = 0; k <= T; ++k) r.c_[size_t(k)] = c_[size_t(k)];
    return r;
}

std::optional<int> Series::lowest_degree() const {
    for (int k = 0; k <= trunc(); ++k)
        if (c_[size_t(k)] != 0) return k;
    return std::nullopt;
}

bool Series::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v >= 0; });
}

std::string Series::to_string() const {
    std::string s;
    for (int k = 0; k <= trunc(); ++k) {
        const Int& v = c_[size_t(k)];
        if (v == 0) continue;
        Int a = v < 0 ? Int(-v) : v;
        if (s.empty())
            s += (v < 0) ? "-" : "";
        else
            s += (v < 0) ? " - " : " + ";
        bool unit = (a == 1);
        if (k == 0) {
            s += a.get_str();
        } else {
            if (!unit) s += a.get_str() + " ";
            s += (k == 1) ? "t" : "t^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

Series subtract_dims(const Series& target, const Series& source, int shift_of_source) {
    int T = std::min(target.trunc(), source.trunc() + shift_of_source);
    if (T < 0) throw std::invalid_argument("subtract_dims: no overlapping degrees");
    Series r(T);
    for (int k = 0; k <= T; ++k) {
        Int v = target.at(k);
        int ks = k - shift_of_source;
        if (ks >= 0) v -= source.at(ks);
        if (v < 0) throw NegativeCoefficientError(k);
        r.set(k, std::move(v));
    }
    return r;
}

Series RationalForm::expand(int T) const {
    if (T < 0) throw std::invalid_argument("RationalForm::expand: order must be >= 0");
    if (shift < 0) throw std::invalid_argument("RationalForm: shift must be >= 0");
    Series s(T);
    if (shift <= T) s.set(shift, 1);
    // multiply by 1/(1-t^k): running prefix sums with stride k
    std::vector<Int> c(size_t(T) + 1);
    for (int k = 0; k <= T; ++k) c[size_t(k)] = s.at(k);
    for (int k : denom_exponents) {
        if (k < 1) throw std::invalid_argument("RationalForm: denominator exponents must be >= 1");
        for (int i = k; i <= T; ++i) c[size_t(i)] += c[size_t(i - k)];
    }
    for (int k = 0; k <= T; ++k) s.set(k, c[size_t(k)]);
    return s;
}

std::string RationalForm::to_string() const {
    std::string s = "t^" + std::to_string(shift) + " / (";
    for (size_t i = 0; i < denom_exponents.size(); ++i) {
        if (i) s += " ";
        s += "(1 - t^" + std::to_string(denom_exponents[i]) + ")";
    }
    return s + ")";
}

} // namespace irrpoly
