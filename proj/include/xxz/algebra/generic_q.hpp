#pragma once

#include "xxz/algebra/cyclotomic3.hpp"
#include "xxz/algebra/laurent.hpp"

#include <string>
#include <string_view>

namespace xxz {

// Element of Q[q, q^{-1}] localized at d = q - q^{-1}: num * d^e with e in Z.
// Canonical form keeps num not divisible by d, so equality is structural.
class GenericQ {
public:
    GenericQ() = default;
    GenericQ(long c) : num_(c) {}
    GenericQ(const Rational& c) : num_(c) {}
    GenericQ(Laurent num, int e = 0) : num_(std::move(num)), e_(e) { normalize(); }

    static GenericQ q() { return GenericQ(Laurent::var()); }
    static GenericQ q_pow(int k) { return GenericQ(Laurent::monomial(1, k)); }
    // q - q^{-1}
    static GenericQ delta() { return GenericQ(Laurent(1), 1); }

    const Laurent& numerator() const { return num_; }
    int delta_exponent() const { return e_; }
    bool is_zero() const { return num_.is_zero(); }

    GenericQ& operator+=(const GenericQ& o);
    GenericQ& operator-=(const GenericQ& o) { return *this += -o; }
    GenericQ& operator*=(const GenericQ& o);
    GenericQ& operator/=(const GenericQ& o);
    friend GenericQ operator+(GenericQ x, const GenericQ& y) { return x += y; }
    friend GenericQ operator-(GenericQ x, const GenericQ& y) { return x -= y; }
    friend GenericQ operator*(GenericQ x, const GenericQ& y) { return x *= y; }
    friend GenericQ operator/(GenericQ x, const GenericQ& y) { return x /= y; }
    GenericQ operator-() const { GenericQ r = *this; r.num_ = -r.num_; return r; }
    friend bool operator==(const GenericQ& x, const GenericQ& y) {
        return x.e_ == y.e_ && x.num_ == y.num_;
    }

    GenericQ pow(long k) const;
    // q -> q^{-1}
    GenericQ star() const;
    Cyclotomic3 at_omega() const;
    Rational at(const Rational& q) const;

    std::string str() const;
    static GenericQ parse(std::string_view text);

private:
    void normalize();

    Laurent num_;
    int e_ = 0;
};

inline std::string to_string(const GenericQ& g) { return g.str(); }

}  // namespace xxz
