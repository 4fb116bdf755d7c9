#pragma once

#include "xxz/algebra/cyclotomic3.hpp"
#include "xxz/algebra/laurent.hpp"

#include <map>
#include <string>

namespace xxz {

// [n]_{t^step}! as a Laurent polynomial in t.
Laurent t_factorial(int n, int step = 1);
// [n]_t = 1 + t + ... + t^{n-1}
Laurent t_number(int n);

// The d-th cyclotomic polynomial in t.
const Laurent& cyclotomic_poly(int d);

// c * t^shift * prod_d Phi_d(t)^{m_d} with integer multiplicities.
// Products of t-numbers, t-factorials and binomials t^a - t^b stay exact in
// this form, and the t -> 1 limit is read off the multiplicities.
class CycloProduct {
public:
    CycloProduct() = default;
    CycloProduct(Cyclotomic3 c) : scalar_(std::move(c)) {}
    CycloProduct(long c) : scalar_(c) {}

    static CycloProduct t_power(int k);
    // t^d - 1, d != 0
    static CycloProduct t_pow_minus_one(int d);
    // t^a - t^b, a != b
    static CycloProduct binomial(int a, int b);
    static CycloProduct t_number(int n);
    static CycloProduct t_factorial(int n, int step = 1);

    const Cyclotomic3& scalar() const { return scalar_; }
    int shift() const { return shift_; }
    const std::map<int, int>& multiplicities() const { return mult_; }
    bool is_zero() const { return scalar_.is_zero(); }
    bool is_monomial() const { return mult_.empty() || scalar_.is_zero(); }

    CycloProduct& operator*=(const CycloProduct& o);
    CycloProduct& operator/=(const CycloProduct& o);
    friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
    friend CycloProduct operator/(CycloProduct a, const CycloProduct& b) { return a /= b; }
    CycloProduct operator-() const { CycloProduct r = *this; r.scalar_ = -r.scalar_; return r; }
    CycloProduct pow(int k) const;
    friend bool operator==(const CycloProduct& a, const CycloProduct& b);

    // Value at t = 1 exists iff Phi_1 has multiplicity zero.
    bool finite_at_one() const;
    Cyclotomic3 at_one() const;
    Cyclotomic3 at(const Rational& t) const;
    // Split into numerator / denominator Laurent polynomials (scalar kept apart).
    Laurent numerator() const;
    Laurent denominator() const;

    std::string str() const;

private:
    void clean();

    Cyclotomic3 scalar_{1};
    int shift_ = 0;
    std::map<int, int> mult_;
};

}  // namespace xxz
