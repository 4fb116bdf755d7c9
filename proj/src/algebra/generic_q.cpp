#include "xxz/algebra/generic_q.hpp"

namespace xxz {

namespace {

const Laurent& delta_poly() {
    static const Laurent d = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
    return d;
}

Laurent times_delta_pow(Laurent x, int k) {
    for (int i = 0; i < k; ++i) x *= delta_poly();
    return x;
}

bool vanishes_at_pm1(const Laurent& x) {
    Rational plus(0), minus(0);
    for (const auto& [e, c] : x.terms()) {
        plus += c;
        minus += (e % 2 == 0) ? c : Rational(-c);
    }
    return plus == 0 && minus == 0;
}

}  // namespace

void GenericQ::normalize() {
    if (num_.is_zero()) {
        e_ = 0;
        return;
    }
    while (vanishes_at_pm1(num_)) {
        num_ = num_.divide_exact(delta_poly());
        ++e_;
    }
}

GenericQ& GenericQ::operator+=(const GenericQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int m = std::min(e_, o.e_);
    num_ = times_delta_pow(std::move(num_), e_ - m) + times_delta_pow(o.num_, o.e_ - m);
    e_ = m;
    normalize();
    return *this;
}

GenericQ& GenericQ::operator*=(const GenericQ& o) {
    num_ *= o.num_;
    e_ += o.e_;
    normalize();
    return *this;
}

GenericQ& GenericQ::operator/=(const GenericQ& o) {
    if (o.is_zero()) throw DivisionByZero();
    num_ = num_.divide_exact(o.num_);
    e_ -= o.e_;
    normalize();
    return *this;
}

GenericQ GenericQ::pow(long k) const {
    if (k < 0) {
        if (!num_.is_monomial()) throw AlgebraError("negative power of non-unit " + str());
        GenericQ r;
        r.num_ = num_.pow(k);
        r.e_ = static_cast<int>(e_ * k);
        return r;
    }
    GenericQ r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

GenericQ GenericQ::star() const {
    GenericQ r;
    r.num_ = (e_ % 2 == 0) ? num_.star() : -num_.star();
    r.e_ = e_;
    return r;
}

Cyclotomic3 GenericQ::at_omega() const {
    const Cyclotomic3 w = Cyclotomic3::omega();
    return num_.eval_in(w) * (w - w * w).pow(e_);
}

Rational GenericQ::at(const Rational& q) const {
    return num_.eval(q) * xxz::pow(q - Rational(1) / q, e_);
}

std::string GenericQ::str() const {
    if (e_ == 0) return num_.str();
    std::string d = "(q-q^-1)";
    if (e_ != 1) d += "^" + std::to_string(e_);
    if (num_ == Laurent(1)) return d;
    return "(" + num_.str() + ")*" + d;
}

GenericQ GenericQ::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    const std::string d = "(q-q^-1)";
    auto dpos = s.rfind(d);
    if (dpos == std::string::npos) return GenericQ(Laurent::parse(s));
    int e = 1;
    std::string tail = s.substr(dpos + d.size());
    if (!tail.empty()) {
        if (tail[0] != '^') throw ParseError("bad generic-q scalar '" + s + "'");
        e = std::stoi(tail.substr(1));
    }
    std::string head = s.substr(0, dpos);
    Laurent num(1);
    if (!head.empty()) {
        if (head.size() < 3 || head.front() != '(' || head.substr(head.size() - 2) != ")*")
            throw ParseError("bad generic-q scalar '" + s + "'");
        num = Laurent::parse(head.substr(1, head.size() - 3));
    }
    return GenericQ(num, e);
}

}  // namespace xxz
