#include "irrpoly/qpoly.hpp"

#include <stdexcept>

namespace irrpoly {

QPoly QPoly::constant(const Rat& c) {
    QPoly p;
    if (c != 0) p.c_[0] = c;
    return p;
}

QPoly QPoly::q_power(long e, const Rat& c) {
    if (e < 0) throw std::invalid_argument("QPoly::q_power: exponent must be >= 0");
    QPoly p;
    if (c != 0) p.c_[e] = c;
    return p;
}

QPoly QPoly::geometric(long len) {
    if (len < 0) throw std::invalid_argument("QPoly::geometric: length must be >= 0");
    QPoly p;
    for (long e = 0; e < len; ++e) p.c_[e] = 1;
    return p;
}

Rat QPoly::coefficient(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void QPoly::set_coefficient(long e, const Rat& v) {
    if (e < 0) throw std::invalid_argument("QPoly::set_coefficient: exponent must be >= 0");
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = v;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, v] : o.c_) {
        Rat& slot = c_[e];
        slot += v;
        if (slot == 0) c_.erase(e);
    }
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, v] : o.c_) {
        Rat& slot = c_[e];
        slot -= v;
        if (slot == 0) c_.erase(e);
    }
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            Rat& slot = r.c_[ea + eb];
            slot += va * vb;
        }
    for (auto it = r.c_.begin(); it != r.c_.end();)
        it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
    return r;
}

QPoly QPoly::scaled(const Rat& s) const {
    QPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
}

Rat QPoly::eval(const Rat& q) const {
    // sparse Horner, exponents descending
    Rat acc(0);
    long prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev < 0) {
            acc = it->second;
        } else {
            long gap = prev - it->first;
            for (long i = 0; i < gap; ++i) acc *= q;
            acc += it->second;
        }
        prev = it->first;
    }
    if (prev > 0)
        for (long i = 0; i < prev; ++i) acc *= q;
    acc.canonicalize();
    return acc;
}

Int QPoly::eval_int(const Int& q) const {
    Rat v = eval(Rat(q));
    if (v.get_den() != 1)
        throw std::domain_error("QPoly::eval_int: value " + irrpoly::to_string(v) +
                                " at q=" + q.get_str() + " is not an integer");
    return v.get_num();
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat v = it->second;
        bool neg = v < 0;
        if (neg) v = -v;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = (v == 1);
        long e = it->first;
        if (e == 0) {
            s += irrpoly::to_string(v);
        } else {
            if (!unit) s += irrpoly::to_string(v) + " ";
            s += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return s;
}

QPoly multiset_binomial(const QPoly& P, unsigned long m) {
    QPoly num = QPoly::constant(1);
    for (unsigned long i = 0; i < m; ++i) num *= P + QPoly::constant(Rat(long(i)));
    return num.scaled(Rat(1) / Rat(factorial(m)));
}

} // namespace irrpoly
