#include "xxz/algebra/cyclo_product.hpp"

#include <mutex>
#include <vector>

namespace xxz {

Laurent t_number(int n) { return Laurent::geometric(n); }

Laurent t_factorial(int n, int step) {
    if (n < 0 || step <= 0) throw AlgebraError("t_factorial needs n >= 0, step > 0");
    Laurent r(1);
    for (int i = 1; i <= n; ++i) r *= Laurent::geometric(i, step);
    return r;
}

const Laurent& cyclotomic_poly(int d) {
    static std::mutex lock;
    static std::map<int, Laurent> cache;
    if (d <= 0) throw AlgebraError("cyclotomic index must be positive");
    std::lock_guard<std::mutex> guard(lock);
    std::vector<int> todo;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0 && !cache.count(e)) todo.push_back(e);
    for (int e : todo) {
        Laurent p = Laurent::monomial(1, e) - Laurent(1);
        for (int f = 1; f < e; ++f)
            if (e % f == 0) p = p.divide_exact(cache.at(f));
        cache.emplace(e, p);
    }
    return cache.at(d);
}

namespace {

// Phi_d(1): p if d is a power of the prime p, 1 otherwise (d > 1).
long cyclotomic_at_one(int d) {
    int p = 0;
    for (int f = 2; f <= d; ++f)
        if (d % f == 0) {
            p = f;
            break;
        }
    int m = d;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 1;
}

}  // namespace

void CycloProduct::clean() {
    std::erase_if(mult_, [](const auto& kv) { return kv.second == 0; });
    if (scalar_.is_zero()) {
        mult_.clear();
        shift_ = 0;
    }
}

CycloProduct CycloProduct::t_power(int k) {
    CycloProduct r;
    r.shift_ = k;
    return r;
}

CycloProduct CycloProduct::t_pow_minus_one(int d) {
    if (d == 0) return CycloProduct(0);
    CycloProduct r;
    if (d < 0) {
        // t^{-m} - 1 = -t^{-m} (t^m - 1)
        r = t_pow_minus_one(-d);
        r.scalar_ = -r.scalar_;
        r.shift_ += d;
        return r;
    }
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) r.mult_[e] += 1;
    return r;
}

CycloProduct CycloProduct::binomial(int a, int b) {
    if (a == b) return CycloProduct(0);
    if (a > b) return t_power(b) * t_pow_minus_one(a - b);
    return -(t_power(a) * t_pow_minus_one(b - a));
}

CycloProduct CycloProduct::t_number(int n) {
    if (n <= 0) throw AlgebraError("t_number needs n > 0");
    return t_pow_minus_one(n) / t_pow_minus_one(1);
}

CycloProduct CycloProduct::t_factorial(int n, int step) {
    CycloProduct r;
    for (int i = 1; i <= n; ++i) r *= t_pow_minus_one(step * i) / t_pow_minus_one(step);
    return r;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o) {
    scalar_ *= o.scalar_;
    shift_ += o.shift_;
    for (const auto& [d, m] : o.mult_) mult_[d] += m;
    clean();
    return *this;
}

CycloProduct& CycloProduct::operator/=(const CycloProduct& o) {
    if (o.is_zero()) throw DivisionByZero();
    scalar_ /= o.scalar_;
    shift_ -= o.shift_;
    for (const auto& [d, m] : o.mult_) mult_[d] -= m;
    clean();
    return *this;
}

CycloProduct CycloProduct::pow(int k) const {
    CycloProduct r;
    r.scalar_ = scalar_.pow(k);
    r.shift_ = shift_ * k;
    for (const auto& [d, m] : mult_) r.mult_[d] = m * k;
    r.clean();
    return r;
}

bool operator==(const CycloProduct& a, const CycloProduct& b) {
    return a.scalar_ == b.scalar_ && a.shift_ == b.shift_ && a.mult_ == b.mult_;
}

bool CycloProduct::finite_at_one() const { return !mult_.count(1) || mult_.at(1) >= 0; }

Cyclotomic3 CycloProduct::at_one() const {
    if (!finite_at_one()) throw DivisionByZero();
    if (mult_.count(1) && mult_.at(1) > 0) return 0;
    Rational v(1);
    for (const auto& [d, m] : mult_)
        if (d > 1) v *= xxz::pow(Rational(cyclotomic_at_one(d)), m);
    return scalar_ * Cyclotomic3(v);
}

Cyclotomic3 CycloProduct::at(const Rational& t) const {
    Rational v = xxz::pow(t, shift_);
    for (const auto& [d, m] : mult_) {
        Rational phi = cyclotomic_poly(d).eval(t);
        if (phi == 0 && m < 0) throw DivisionByZero();
        v *= xxz::pow(phi, m);
    }
    return scalar_ * Cyclotomic3(v);
}

Laurent CycloProduct::numerator() const {
    Laurent r = Laurent::monomial(1, shift_);
    for (const auto& [d, m] : mult_)
        if (m > 0) r *= cyclotomic_poly(d).pow(m);
    return r;
}

Laurent CycloProduct::denominator() const {
    Laurent r(1);
    for (const auto& [d, m] : mult_)
        if (m < 0) r *= cyclotomic_poly(d).pow(-m);
    return r;
}

std::string CycloProduct::str() const {
    std::string out = "(" + scalar_.str() + ")";
    if (shift_) out += "*t^" + std::to_string(shift_);
    for (const auto& [d, m] : mult_) out += "*Phi" + std::to_string(d) + "^" + std::to_string(m);
    return out;
}

}  // namespace xxz
