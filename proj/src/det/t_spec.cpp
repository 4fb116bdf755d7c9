#include "xxz/det/t_spec.hpp"

#include "xxz/efp/inhom.hpp"

namespace xxz {

namespace {

int prefactor_exp3(EfpFamily f, int n, int k) {
    return (family_size(f, n) % 2 == 0 ? -n * (n - 1) : -n * n) + k * (k - 1) / 2;
}

CycloProduct vandermonde_t(int count) {
    CycloProduct x(1);
    for (int i = 1; i <= count; ++i)
        for (int j = i + 1; j <= count; ++j) x *= CycloProduct::binomial(j - 1, i - 1);
    return x;
}

Rational vandermonde_at(int count, const Rational& t) {
    Rational x = 1;
    for (int i = 1; i <= count; ++i)
        for (int j = i + 1; j <= count; ++j) x *= detail::ipow(t, j - 1) - detail::ipow(t, i - 1);
    return x;
}

CycloProduct power_of_three(int e) { return CycloProduct(Cyclotomic3(3).pow(e)); }

}  // namespace

std::pair<int, int> staircase_pair(EfpFamily f) {
    switch (f) {
        case EfpFamily::even:
        case EfpFamily::odd_minus: return {0, 1};
        case EfpFamily::even_pseudo: return {0, 2};
        case EfpFamily::odd_plus: return {1, 2};
    }
    return {0, 1};
}

GExponents t_mapping(EfpFamily f, int n, int k, bool as_printed) {
    GExponents g;
    g.lam = 3;
    switch (f) {
        case EfpFamily::even:
            g.l = n, g.r = n - k, g.s = k, g.a1 = 1, g.a2 = 2;
            for (int i = 1; i <= n; ++i) g.v.push_back(3 * i - 3);
            break;
        case EfpFamily::even_pseudo:
            g.l = n, g.r = n - k, g.s = k, g.a1 = 0, g.a2 = 2;
            for (int i = 1; i <= n; ++i) g.v.push_back(3 * i - 2);
            break;
        case EfpFamily::odd_minus:
            g.l = n + 1, g.r = n - k, g.s = k, g.a1 = 1, g.a2 = 2;
            for (int i = 1; i <= n + 1; ++i) g.v.push_back(3 * i - 3);
            break;
        case EfpFamily::odd_plus:
            g.l = n, g.r = n - k + 1, g.s = k, g.a1 = 0, g.a2 = 1;
            for (int i = 1; i <= n; ++i) g.v.push_back(as_printed ? 3 * i - 2 : 3 * i - 1);
            break;
    }
    return g;
}

CycloProduct t_efp(EfpFamily f, int n, int k, bool as_printed) {
    const int N = family_size(f, n), m = N - k;
    CycloProduct x = power_of_three(prefactor_exp3(f, n, k)) * g_det_closed_t(t_mapping(f, n, k, as_printed));
    if (x.is_zero()) return x;
    return x / (vandermonde_t(m) * vandermonde_t(m + 2 * k));
}

Rational g_det_at(EfpFamily f, int n, int k, const Rational& t, bool as_printed) {
    return g_det_exact(t_mapping(f, n, k, as_printed).at(t));
}

Rational t_efp_exact_at(EfpFamily f, int n, int k, const Rational& t, bool as_printed) {
    const int N = family_size(f, n), m = N - k;
    Rational x = g_det_at(f, n, k, t, as_printed);
    x *= detail::ipow(Rational(3), prefactor_exp3(f, n, k));
    return x / (vandermonde_at(m, t) * vandermonde_at(m + 2 * k, t));
}

Rational m_det_at(EfpFamily f, int n, int k, const Rational& t) {
    const int N = family_size(f, n), m = N - k, w = N;
    auto [r1, r2] = staircase_pair(f);
    const auto rho = StaircaseSeq{r1}.first(w), sigma = StaircaseSeq{r2}.first(w);
    RingMatrix<Rational> mat(2 * w, 2 * w);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < w; ++j) {
            mat(i, j) = detail::ipow(t, i * rho[j]);
            mat(m + i, w + j) = detail::ipow(t, i * sigma[j]);
        }
    for (int a = 0; a < 2 * k; ++a)
        for (int j = 0; j < w; ++j) {
            mat(2 * m + a, j) = detail::ipow(t, (m + a) * rho[j]);
            mat(2 * m + a, w + j) = detail::ipow(t, (m + a) * sigma[j]);
        }
    return det_exact(mat);
}

PolyW to_poly_t(const CycloProduct& c, const RosterPtr& tr) {
    auto conv = [&](const Laurent& l) {
        PolyW p(tr);
        for (const auto& [e, q] : l.terms()) p += PolyW::var(tr, "t", e).scaled(Cyclotomic3(q));
        return p;
    };
    PolyW num = conv(c.numerator()).scaled(c.scalar());
    return num.divide_exact(conv(c.denominator()));
}

PolyW efp_core_at_t(EfpFamily f, int n, int k) {
    const int N = family_size(f, n), m = N - k;
    PolyW e = efp_core_at_omega(f, n, k);
    RosterPtr ro = make_roster(concat(*efp_roster(N, k), {"t"}));
    e = e.embed(ro);
    auto put = [&](const std::string& name, int power) {
        e = power == 0 ? e.substitute(name, Cyclotomic3(1)) : e.substitute_var(name, "t", Cyclotomic3(1), power);
    };
    for (int i = 1; i <= m; ++i) put(zname(i), i - 1);
    for (int j = 1; j <= 2 * k; ++j) put(yname(j), m + j - 1);
    return e;
}

std::string TEfpComparison::str() const {
    return "E^" + family_name(family) + "_" + std::to_string(family_size(family, n)) + "(" + std::to_string(k) +
           ";t) = [" + (monomial ? factor.str() : std::string("not a monomial")) + "] * t-closed form";
}

TEfpComparison compare_t_efp(EfpFamily f, int n, int k) {
    TEfpComparison c{f, n, k, false, {}};
    PolyW core = efp_core_at_t(f, n, k);
    CycloProduct closed = t_efp(f, n, k);
    RosterPtr tr = make_roster({"t"});
    auto num = [&](const Laurent& l) {
        PolyW p(tr);
        for (const auto& [e, q] : l.terms()) p += PolyW::var(tr, "t", e).scaled(Cyclotomic3(q));
        return p;
    };
    PolyW lhs = core.embed(tr) * num(closed.denominator());
    PolyW rhs = num(closed.numerator()).scaled(closed.scalar());
    if (auto r = monomial_ratio(lhs, rhs)) {
        c.monomial = true;
        c.factor = *r;
    }
    return c;
}

CycloProduct t_ratio(EfpFamily f, int n, int k) {
    if (k < 1 || k > n + (f == EfpFamily::odd_plus)) throw AlgebraError("t_ratio: need 1 <= k <= n");
    using CP = CycloProduct;
    auto F = [](int m, int step = 1) { return CP::t_factorial(m, step); };
    CP x = (CP::t_number(3) / CP(3)).pow(k - 1) * F(2 * k - 1, 3) * F(2 * k - 2, 3) / F(k - 1, 3);
    switch (f) {
        case EfpFamily::even:
            return x * F(2 * n + k - 1) * F(n - k, 3) / (F(2 * n - k) * F(n + k - 1, 3) * F(3 * k - 2));
        case EfpFamily::even_pseudo:
            return x * CP(-Cyclotomic3::omega()) * F(2 * n + k - 1) * F(n - k, 3) /
                   (F(2 * n - k) * F(n + k - 1, 3) * F(3 * k - 3) * CP::t_number(3 * k - 1));
        case EfpFamily::odd_minus:
            return x * F(2 * n + k) * F(n - k, 3) / (F(2 * n - k + 1) * F(n + k - 1, 3) * F(3 * k - 2));
        case EfpFamily::odd_plus:
            return x * F(2 * n + k) * F(n - k + 1, 3) / (F(2 * n - k + 1) * F(n + k, 3) * F(3 * k - 2));
    }
    return x;
}

std::string TRatioMeasurement::str() const {
    std::string out = "E^" + family_name(family) + "_" + std::to_string(family_size(family, n)) + "(" +
                      std::to_string(k - 1) + ";t)/E(" + std::to_string(k) + ";t) = ";
    if (!monomial) return out + "not a monomial times the t-factorial form";
    return out + "(" + scalar.str() + ") t^" + std::to_string(alpha) + " * t-factorial form";
}

TRatioMeasurement measure_t_ratio(EfpFamily f, int n, int k) {
    TRatioMeasurement m{f, n, k, false, Cyclotomic3(0), 0};
    CycloProduct q = t_efp(f, n, k - 1) / t_efp(f, n, k) / t_ratio(f, n, k);
    m.monomial = q.is_monomial();
    m.scalar = q.scalar();
    m.alpha = q.shift();
    return m;
}

Cyclotomic3 homogeneous_ratio_from_qkz(EfpFamily f, int n, int k) {
    auto at_one = [&](int kk) {
        PolyW e = efp_core_at_omega(f, n, kk);
        Cyclotomic3 ext = Cyclotomic3(f == EfpFamily::even_pseudo ? -3 : 3).pow(static_cast<long>(kk) * (kk - 1) / 2);
        return e.evaluate(std::vector<Cyclotomic3>(e.nvars(), Cyclotomic3(1))) * ext;
    };
    return at_one(k - 1) / at_one(k);
}

CycloProduct t_double_ratio(EfpFamily f, int k) {
    auto E = [&](int n) { return t_efp(f, n, n); };
    if (f == EfpFamily::odd_minus || f == EfpFamily::even_pseudo) return (E(k + 1) / E(k)) / (E(k) / E(k - 1));
    throw AlgebraError("t_double_ratio: only the - and e~ families");
}

CycloProduct t_double_ratio_closed(EfpFamily f, int k) {
    using CP = CycloProduct;
    if (f == EfpFamily::odd_minus)
        return CP::t_power(2 * k) * CP::t_pow_minus_one(3 * (k + 1)) / (CP(3) * CP::t_pow_minus_one(k + 1));
    if (f == EfpFamily::even_pseudo)
        return CP::t_power(2 * (k - 1)) * CP::t_pow_minus_one(3 * k) / (CP(3) * CP::t_pow_minus_one(k));
    throw AlgebraError("t_double_ratio_closed: only the - and e~ families");
}

}  // namespace xxz
