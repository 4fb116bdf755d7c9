#include "xxz/algebra/laurent.hpp"

#include <cctype>
#include <vector>

namespace xxz {

Laurent Laurent::monomial(const Rational& c, int e) {
    Laurent l;
    if (c != 0) l.c_[e] = c;
    return l;
}

Laurent Laurent::geometric(int n, int step) {
    Laurent l;
    for (int i = 0; i < n; ++i) l.c_[i * step] += 1;
    return l;
}

int Laurent::low() const {
    if (c_.empty()) throw AlgebraError("low() of zero Laurent polynomial");
    return c_.begin()->first;
}

int Laurent::high() const {
    if (c_.empty()) throw AlgebraError("high() of zero Laurent polynomial");
    return c_.rbegin()->first;
}

Rational Laurent::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        auto [it, fresh] = c_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
    Terms out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) out[e1 + e2] += c1 * c2;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    c_ = std::move(out);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + k, c);
    return r;
}

Laurent Laurent::pow(long e) const {
    if (e < 0) {
        if (!is_monomial()) throw AlgebraError("negative power of non-monomial Laurent polynomial");
        const auto& [k, c] = *c_.begin();
        return monomial(xxz::pow(c, e), static_cast<int>(k * e));
    }
    Laurent result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::optional<Laurent> Laurent::try_divide(const Laurent& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (is_zero()) return Laurent();
    // Shift both to genuine polynomials with nonzero constant term in d.
    int shift = low() - d.low();
    std::vector<Rational> num, den;
    for (const auto& [e, c] : c_) {
        std::size_t k = static_cast<std::size_t>(e - low());
        if (num.size() <= k) num.resize(k + 1);
        num[k] = c;
    }
    for (const auto& [e, c] : d.c_) {
        std::size_t k = static_cast<std::size_t>(e - d.low());
        if (den.size() <= k) den.resize(k + 1);
        den[k] = c;
    }
    if (num.size() < den.size()) return std::nullopt;
    std::vector<Rational> quot(num.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational f = num[i + den.size() - 1] / lead;
        quot[i] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    for (const auto& r : num)
        if (r != 0) return std::nullopt;
    Laurent q;
    for (std::size_t i = 0; i < quot.size(); ++i)
        if (quot[i] != 0) q.c_[static_cast<int>(i) + shift] = quot[i];
    return q;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
    auto q = try_divide(d);
    if (!q) throw InexactDivision(str() + " / (" + d.str() + ")");
    return *q;
}

Laurent Laurent::star() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Rational Laurent::eval(const Rational& x) const {
    Rational result(0);
    for (const auto& [e, c] : c_) result += c * xxz::pow(x, e);
    return result;
}

std::string Laurent::str(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.get_str();
        bool neg = cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        if (e == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Laurent Laurent::parse(std::string_view text, std::string_view var) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw ParseError("empty Laurent polynomial");
    Laurent result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^')) ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        Rational c(1);
        int e = 0;
        bool neg = false;
        if (term[0] == '+' || term[0] == '-') {
            neg = term[0] == '-';
            term.erase(term.begin());
        }
        auto vpos = term.find(var);
        if (vpos == std::string::npos) {
            c = parse_rational(term);
        } else {
            std::string cpart = term.substr(0, vpos);
            if (!cpart.empty()) {
                if (cpart.back() != '*') throw ParseError("bad Laurent term '" + term + "'");
                cpart.pop_back();
                c = parse_rational(cpart);
            }
            std::string epart = term.substr(vpos + var.size());
            if (epart.empty()) e = 1;
            else if (epart[0] == '^') e = std::stoi(epart.substr(1));
            else throw ParseError("bad Laurent term '" + term + "'");
        }
        result += monomial(neg ? Rational(-c) : c, e);
    }
    return result;
}

}  // namespace xxz
