#include "xxz/algebra/rational.hpp"

#include "xxz/algebra/errors.hpp"

namespace xxz {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-')
        throw ParseError("bad rational '" + s + "'");
    return make_rational(BigInt(num), BigInt(den));
}

BigInt factorial(long n) {
    if (n < 0) throw AlgebraError("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw DivisionByZero();
        return pow(Rational(1) / base, -e);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

}  // namespace xxz
