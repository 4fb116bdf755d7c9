#pragma once

#include "xxz/algebra/errors.hpp"
#include "xxz/algebra/ring.hpp"

#include <array>
#include <climits>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xxz {

inline constexpr int kMaxVars = 24;

struct Monomial {
    std::array<std::int16_t, kMaxVars> e{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    bool is_one() const { return *this == Monomial{}; }
};

inline Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
    return r;
}

inline Monomial operator-(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
    return r;
}

using Roster = std::vector<std::string>;
using RosterPtr = std::shared_ptr<const Roster>;

RosterPtr make_roster(std::vector<std::string> names);
// {prefix+from, ..., prefix+to}
std::vector<std::string> numbered(std::string_view prefix, int from, int to);
std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b);

// Sparse multivariate Laurent polynomial. A null roster is allowed only for
// constants, which then combine with polynomials over any roster.
template <class C>
class MultiPoly {
public:
    using Coeff = C;
    using Terms = std::map<Monomial, C>;

    MultiPoly() = default;
    MultiPoly(const C& c) {
        if (!Ring<C>::is_zero(c)) terms_.emplace(Monomial{}, c);
    }
    MultiPoly(long c) : MultiPoly(C(c)) {}
    explicit MultiPoly(RosterPtr r) : roster_(std::move(r)) { check_roster(); }

    static MultiPoly constant(RosterPtr r, const C& c) {
        MultiPoly p(std::move(r));
        if (!Ring<C>::is_zero(c)) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static MultiPoly var(RosterPtr r, std::string_view name, int power = 1) {
        MultiPoly p(std::move(r));
        Monomial m;
        m.e[p.index_of(name)] = static_cast<std::int16_t>(power);
        p.terms_.emplace(m, Ring<C>::one());
        return p;
    }
    static MultiPoly monomial(RosterPtr r, const Monomial& m, const C& c) {
        MultiPoly p(std::move(r));
        if (!Ring<C>::is_zero(c)) p.terms_.emplace(m, c);
        return p;
    }

    const RosterPtr& roster() const { return roster_; }
    int nvars() const { return roster_ ? static_cast<int>(roster_->size()) : 0; }
    bool has_var(std::string_view name) const {
        if (!roster_) return false;
        for (const auto& v : *roster_)
            if (v == name) return true;
        return false;
    }
    int index_of(std::string_view name) const {
        if (roster_)
            for (std::size_t i = 0; i < roster_->size(); ++i)
                if ((*roster_)[i] == name) return static_cast<int>(i);
        throw AlgebraError("unknown variable '" + std::string(name) + "'");
    }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    C constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Ring<C>::zero() : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        roster_ = unify(*this, o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        roster_ = unify(*this, o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(unify(a, b));
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_) r.add_term(m1 + m2, c1 * c2);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly scaled(const C& s) const {
        if (Ring<C>::is_zero(s)) return MultiPoly(roster_);
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = c * s;
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        unify(a, b);
        return a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(roster_, Ring<C>::one()), base = *this;
        while (k) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
            k >>= 1;
        }
        return r;
    }

    // Lex-leading-term division. Quotient exponents are confined to the box
    // allowed by per-variable degree ranges, so the loop always terminates.
    std::optional<MultiPoly> try_divide(const MultiPoly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        RosterPtr r = unify(*this, d);
        MultiPoly quot(r);
        if (is_zero()) return quot;
        int nv = r ? static_cast<int>(r->size()) : 0;
        std::vector<int> lo(nv), hi(nv);
        for (int v = 0; v < nv; ++v) {
            lo[v] = min_degree(v) - d.min_degree(v);
            hi[v] = degree(v) - d.degree(v);
            if (lo[v] > hi[v]) return std::nullopt;
        }
        MultiPoly rem = *this;
        rem.roster_ = r;
        const auto& [dm, dc] = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.terms_.rbegin();
            Monomial qm = rm - dm;
            for (int v = 0; v < nv; ++v)
                if (qm.e[v] < lo[v] || qm.e[v] > hi[v]) return std::nullopt;
            C qc;
            try {
                qc = Ring<C>::divide(rc, dc);
            } catch (const InexactDivision&) {
                return std::nullopt;
            }
            for (const auto& [m, c] : d.terms_) rem.add_term(qm + m, -(qc * c));
            quot.add_term(qm, qc);
        }
        return quot;
    }
    MultiPoly divide_exact(const MultiPoly& d) const {
        auto q = try_divide(d);
        if (!q) throw InexactDivision(remainder_text(d));
        return *q;
    }

    // INT_MIN for the zero polynomial.
    int degree(int v) const {
        int best = INT_MIN;
        for (const auto& [m, c] : terms_) best = std::max<int>(best, m.e[v]);
        return best;
    }
    int min_degree(int v) const {
        if (terms_.empty()) return INT_MIN;
        int best = INT_MAX;
        for (const auto& [m, c] : terms_) best = std::min<int>(best, m.e[v]);
        return best;
    }
    int degree(std::string_view name) const { return degree(index_of(name)); }
    int min_degree(std::string_view name) const { return min_degree(index_of(name)); }
    bool has_negative_exponents() const {
        for (const auto& [m, c] : terms_)
            for (int v = 0; v < nvars(); ++v)
                if (m.e[v] < 0) return true;
        return false;
    }

    MultiPoly substitute(std::string_view name, const C& value) const {
        int v = index_of(name);
        MultiPoly r(without(v));
        std::map<int, C> powers;
        for (const auto& [m, c] : terms_) {
            int k = m.e[v];
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
            r.add_term(drop(m, v), c * it->second);
        }
        return r;
    }
    // name -> scale * target^power; name leaves the roster.
    MultiPoly substitute_var(std::string_view name, std::string_view target, const C& scale = C(1),
                             int power = 1) const {
        int v = index_of(name);
        int t = index_of(target);
        if (v == t) throw AlgebraError("substitute_var needs distinct variables");
        MultiPoly r(without(v));
        std::map<int, C> powers;
        for (const auto& [m, c] : terms_) {
            int k = m.e[v];
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, scale.pow(k)).first;
            Monomial nm = m;
            nm.e[t] = static_cast<std::int16_t>(nm.e[t] + power * k);
            r.add_term(drop(nm, v), c * it->second);
        }
        return r;
    }
    // name -> scale * name
    MultiPoly scale_var(std::string_view name, const C& scale) const {
        int v = index_of(name);
        MultiPoly r(roster_);
        std::map<int, C> powers;
        for (const auto& [m, c] : terms_) {
            int k = m.e[v];
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, scale.pow(k)).first;
            r.add_term(m, c * it->second);
        }
        return r;
    }
    MultiPoly invert_var(std::string_view name) const {
        int v = index_of(name);
        MultiPoly r(roster_);
        for (const auto& [m, c] : terms_) {
            Monomial nm = m;
            nm.e[v] = static_cast<std::int16_t>(-nm.e[v]);
            r.terms_.emplace(nm, c);
        }
        return r;
    }
    MultiPoly swap_vars(std::string_view a, std::string_view b) const {
        int i = index_of(a), j = index_of(b);
        MultiPoly r(roster_);
        for (const auto& [m, c] : terms_) {
            Monomial nm = m;
            std::swap(nm.e[i], nm.e[j]);
            r.terms_.emplace(nm, c);
        }
        return r;
    }
    // Coefficient of name^deg; name leaves the roster.
    MultiPoly coefficient(std::string_view name, int deg) const {
        int v = index_of(name);
        MultiPoly r(without(v));
        for (const auto& [m, c] : terms_)
            if (m.e[v] == deg) r.terms_.emplace(drop(m, v), c);
        return r;
    }
    // Rewrite over another roster. Variables are matched by name after the
    // optional renaming; a variable that actually occurs must exist in target.
    MultiPoly embed(RosterPtr target, const std::map<std::string, std::string>& rename = {}) const {
        MultiPoly r(target);
        std::vector<int> where(nvars(), -1);
        for (int v = 0; v < nvars(); ++v) {
            std::string name = (*roster_)[v];
            if (auto it = rename.find(name); it != rename.end()) name = it->second;
            for (std::size_t j = 0; j < target->size(); ++j)
                if ((*target)[j] == name) where[v] = static_cast<int>(j);
        }
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (int v = 0; v < nvars(); ++v) {
                if (m.e[v] == 0) continue;
                if (where[v] < 0)
                    throw RosterMismatch("variable '" + (*roster_)[v] + "' missing from target roster");
                nm.e[where[v]] = static_cast<std::int16_t>(nm.e[where[v]] + m.e[v]);
            }
            r.add_term(nm, c);
        }
        return r;
    }
    template <class D, class F>
    MultiPoly<D> map_coeffs(F&& f) const {
        MultiPoly<D> r(roster_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }
    MultiPoly star() const {
        MultiPoly r(roster_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, QRing<C>::star(c));
        return r;
    }
    C evaluate(const std::vector<C>& values) const {
        if (static_cast<int>(values.size()) != nvars()) throw AlgebraError("evaluate: wrong arity");
        C sum = Ring<C>::zero();
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (int v = 0; v < nvars(); ++v)
                if (m.e[v]) t = t * values[v].pow(m.e[v]);
            sum = sum + t;
        }
        return sum;
    }
    // Multiply by a single monomial (exponents may be negative).
    MultiPoly shifted(const Monomial& s) const {
        MultiPoly r(roster_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m + s, c);
        return r;
    }

    std::string str() const;

    // Expert access for kernels that build terms in bulk.
    void add_term(const Monomial& m, const C& c) {
        if (Ring<C>::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (Ring<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    void check_roster() const {
        if (roster_ && roster_->size() > static_cast<std::size_t>(kMaxVars))
            throw AlgebraError("too many variables");
    }
    static RosterPtr unify(const MultiPoly& a, const MultiPoly& b) {
        if (!a.roster_) {
            if (!a.is_constant()) throw RosterMismatch("polynomial without roster");
            return b.roster_;
        }
        if (!b.roster_ || a.roster_ == b.roster_ || *a.roster_ == *b.roster_) {
            if (!b.roster_ && !b.is_constant()) throw RosterMismatch("polynomial without roster");
            return a.roster_;
        }
        throw RosterMismatch("incompatible variable rosters");
    }
    RosterPtr without(int v) const {
        Roster names = *roster_;
        names.erase(names.begin() + v);
        return std::make_shared<const Roster>(std::move(names));
    }
    Monomial drop(const Monomial& m, int v) const {
        Monomial r;
        int j = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (i != v) r.e[j++] = m.e[i];
        return r;
    }
    std::string remainder_text(const MultiPoly& d) const;

    RosterPtr roster_;
    Terms terms_;
};

template <class C>
std::string MultiPoly<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = Ring<C>::str(c);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('*') != std::string::npos;
        std::string mono;
        for (int v = 0; v < nvars(); ++v) {
            if (!m.e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += (*roster_)[v];
            if (m.e[v] != 1) mono += "^" + std::to_string(m.e[v]);
        }
        std::string term;
        if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
        else if (cs == "1") term = mono;
        else if (cs == "-1") term = "-" + mono;
        else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

template <class C>
std::string MultiPoly<C>::remainder_text(const MultiPoly& d) const {
    // Reduce as far as possible and show what is left, for diagnostics.
    MultiPoly rem = *this;
    rem.roster_ = unify(*this, d);
    const auto& [dm, dc] = *d.terms_.rbegin();
    MultiPoly stuck(rem.roster_);
    for (int guard = 0; guard < 100000 && !rem.is_zero(); ++guard) {
        auto [rm, rc] = *rem.terms_.rbegin();
        bool ok = true;
        for (int v = 0; v < nvars(); ++v)
            if (rm.e[v] - dm.e[v] < min_degree(v) - d.min_degree(v)) ok = false;
        C qc;
        if (ok) {
            try {
                qc = Ring<C>::divide(rc, dc);
            } catch (const AlgebraError&) {
                ok = false;
            }
        }
        if (!ok) {
            stuck.add_term(rm, rc);
            rem.terms_.erase(std::prev(rem.terms_.end()));
            continue;
        }
        Monomial qm = rm - dm;
        for (const auto& [m, c] : d.terms_) rem.add_term(qm + m, -(qc * c));
    }
    return (stuck + rem).str();
}

using PolyQ = MultiPoly<GenericQ>;
using PolyW = MultiPoly<Cyclotomic3>;

template <class C>
struct Ring<MultiPoly<C>> {
    static constexpr bool is_field = false;
    static MultiPoly<C> zero() { return MultiPoly<C>(); }
    static MultiPoly<C> one() { return MultiPoly<C>(Ring<C>::one()); }
    static bool is_zero(const MultiPoly<C>& x) { return x.is_zero(); }
    static MultiPoly<C> divide(const MultiPoly<C>& x, const MultiPoly<C>& y) { return x.divide_exact(y); }
    static std::string str(const MultiPoly<C>& x) { return x.str(); }
};

}  // namespace xxz
