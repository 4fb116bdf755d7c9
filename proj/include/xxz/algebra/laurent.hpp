#pragma once

#include "xxz/algebra/errors.hpp"
#include "xxz/algebra/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace xxz {

// Univariate Laurent polynomial over Q, used for q and for t.
class Laurent {
public:
    using Terms = std::map<int, Rational>;

    Laurent() = default;
    Laurent(long c) { if (c) c_[0] = c; }
    Laurent(const Rational& c) { if (c != 0) c_[0] = c; }

    static Laurent monomial(const Rational& c, int e);
    static Laurent var() { return monomial(1, 1); }
    // 1 + x^s + ... + x^{s(n-1)}
    static Laurent geometric(int n, int step = 1);

    const Terms& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    int low() const;
    int high() const;
    Rational coeff(int e) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
    friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
    friend Laurent operator*(const Laurent& x, const Laurent& y) { Laurent r = x; return r *= y; }
    Laurent operator-() const;
    friend bool operator==(const Laurent& x, const Laurent& y) { return x.c_ == y.c_; }

    Laurent shifted(int k) const;
    // Negative exponents only for monomials.
    Laurent pow(long e) const;
    std::optional<Laurent> try_divide(const Laurent& d) const;
    Laurent divide_exact(const Laurent& d) const;
    // x -> 1/x
    Laurent star() const;

    Rational eval(const Rational& x) const;
    template <class T>
    T eval_in(const T& x) const {
        T result(0);
        for (const auto& [e, c] : c_) result += T(c) * x.pow(e);
        return result;
    }

    std::string str(std::string_view var = "q") const;
    static Laurent parse(std::string_view text, std::string_view var = "q");

private:
    Terms c_;
};

inline std::string to_string(const Laurent& l) { return l.str(); }

}  // namespace xxz
