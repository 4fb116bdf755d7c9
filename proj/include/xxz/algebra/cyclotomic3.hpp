#pragma once

#include "xxz/algebra/rational.hpp"

#include <string>
#include <string_view>

namespace xxz {

// a + b*w with w = e^{2 pi i/3}, so w^2 = -1 - w.
class Cyclotomic3 {
public:
    Cyclotomic3() = default;
    Cyclotomic3(long a) : a_(a) {}
    Cyclotomic3(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclotomic3 omega() { return {0, 1}; }
    // e^{i pi/3} = 1 + w, the square root of w used for twist phases.
    static Cyclotomic3 sqrt_omega() { return {1, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Cyclotomic3 conj() const { return {a_ - b_, -b_}; }
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    Cyclotomic3 inverse() const;
    Cyclotomic3 pow(long e) const;

    double real() const { return a_.get_d() - 0.5 * b_.get_d(); }
    double imag() const;

    Cyclotomic3& operator+=(const Cyclotomic3& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Cyclotomic3& operator-=(const Cyclotomic3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Cyclotomic3& operator*=(const Cyclotomic3& o);
    Cyclotomic3& operator/=(const Cyclotomic3& o) { return *this *= o.inverse(); }

    friend Cyclotomic3 operator+(Cyclotomic3 x, const Cyclotomic3& y) { return x += y; }
    friend Cyclotomic3 operator-(Cyclotomic3 x, const Cyclotomic3& y) { return x -= y; }
    friend Cyclotomic3 operator*(Cyclotomic3 x, const Cyclotomic3& y) { return x *= y; }
    friend Cyclotomic3 operator/(Cyclotomic3 x, const Cyclotomic3& y) { return x /= y; }
    Cyclotomic3 operator-() const { return {-a_, -b_}; }

    friend bool operator==(const Cyclotomic3& x, const Cyclotomic3& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;
    static Cyclotomic3 parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

inline std::string to_string(const Cyclotomic3& c) { return c.str(); }

}  // namespace xxz
