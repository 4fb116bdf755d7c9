#include "xxz/algebra/cyclotomic3.hpp"

#include "xxz/algebra/errors.hpp"

#include <cmath>

namespace xxz {

Cyclotomic3& Cyclotomic3::operator*=(const Cyclotomic3& o) {
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Cyclotomic3 Cyclotomic3::inverse() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero();
    Cyclotomic3 c = conj();
    return {c.a_ / n, c.b_ / n};
}

Cyclotomic3 Cyclotomic3::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic3 result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

double Cyclotomic3::imag() const { return b_.get_d() * std::sqrt(3.0) / 2.0; }

std::string Cyclotomic3::str() const {
    if (b_ == 0) return a_.get_str();
    std::string wpart = (b_ == 1 ? std::string() : (b_ == -1 ? std::string("-") : b_.get_str() + "*")) + "w";
    if (a_ == 0) return wpart;
    if (wpart[0] == '-') return a_.get_str() + wpart;
    return a_.get_str() + "+" + wpart;
}

// Accepts "a", "w", "b*w", "a+b*w", "a-b*w", "a+w".
Cyclotomic3 Cyclotomic3::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'w') return {parse_rational(s), 0};
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    std::string a_str = split == std::string::npos ? "0" : s.substr(0, split);
    std::string b_str = split == std::string::npos ? s : s.substr(split);
    if (b_str.empty() || b_str == "+") b_str = "1";
    if (b_str == "-") b_str = "-1";
    return {parse_rational(a_str), parse_rational(b_str)};
}

}  // namespace xxz
