#include "xxz/closed/closed_forms.hpp"

#include <cmath>

namespace xxz {

namespace {

BigInt fact(long n) {
    if (n < 0) throw AlgebraError("factorial of a negative number");
    return factorial(n);
}

Rational frac(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

std::string tag(EfpFamily f) { return "efp" + family_name(f); }

void check_k(EfpFamily f, int n, int k, int lo) {
    if (n < 1 && !(n == 0 && k == 0)) throw AlgebraError("closed form: need n >= 1");
    if (k < lo || k > family_max_k(f, n))
        throw AlgebraError("closed form: k=" + std::to_string(k) + " out of range for family " + family_name(f) +
                           ", n=" + std::to_string(n));
}

}  // namespace

Rational ClosedFormValue::rational() const {
    if (!is_rational()) throw AlgebraError(family + " value is not rational");
    return value.a();
}

std::string ClosedFormValue::str() const {
    return family + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ") = " + value.str();
}

BigInt asm_count(int n) {
    if (n < 0) throw AlgebraError("asm_count: n >= 0");
    Rational x = 1;
    for (int j = 0; j < n; ++j) x *= frac(fact(3 * j + 1), fact(n + j));
    if (x.get_den() != 1) throw AlgebraError("asm_count: product not integral");
    return x.get_num();
}

BigInt aht_count(int N) {
    if (N < 1) throw AlgebraError("aht_count: N >= 1");
    Rational x = 1;
    if (N % 2) {
        const int n = (N - 1) / 2;
        for (int j = 1; j <= n; ++j)
            x *= frac(fact(j - 1) * fact(j) * fact(3 * j - 1) * fact(3 * j),
                      fact(2 * j - 1) * fact(2 * j - 1) * fact(2 * j) * fact(2 * j));
    } else {
        x = 1 / efp_value(EfpFamily::even, N / 2, N / 2).rational();
    }
    if (x.get_den() != 1) throw AlgebraError("aht_count: value not integral");
    return x.get_num();
}

ClosedFormValue efp_ratio_closed(EfpFamily f, int n, int k) {
    check_k(f, n, k, 1);
    ClosedFormValue v{tag(f), n, k, Cyclotomic3(0)};
    const BigInt common = fact(2 * k - 2) * fact(2 * k - 1);
    Rational x;
    switch (f) {
        case EfpFamily::odd_minus:
            x = frac(common * fact(2 * n + k) * fact(n - k),
                     fact(k - 1) * fact(3 * k - 2) * fact(2 * n - k + 1) * fact(n + k - 1));
            break;
        case EfpFamily::odd_plus:
            x = frac(common * fact(2 * n + k) * fact(n - k + 1),
                     fact(k - 1) * fact(3 * k - 2) * fact(2 * n - k + 1) * fact(n + k));
            break;
        case EfpFamily::even:
            x = frac(common * fact(2 * n + k - 1) * fact(n - k),
                     fact(k - 1) * fact(3 * k - 2) * fact(2 * n - k) * fact(n + k - 1));
            break;
        case EfpFamily::even_pseudo:
            x = frac(common * fact(2 * n + k - 1) * fact(n - k),
                     fact(k - 1) * fact(3 * k - 3) * BigInt(3 * k - 1) * fact(2 * n - k) * fact(n + k - 1));
            v.value = -Cyclotomic3::omega() * Cyclotomic3(x);
            return v;
    }
    v.value = Cyclotomic3(x);
    return v;
}

ClosedFormValue efp_value(EfpFamily f, int n, int k) {
    check_k(f, n, k, 0);
    ClosedFormValue v{tag(f), n, k, Cyclotomic3(1)};
    for (int j = 1; j <= k; ++j) v.value /= efp_ratio_closed(f, n, j).value;
    return v;
}

Rational cssc_product(int n, int k) {
    if (k < 0 || k > n) throw AlgebraError("cssc_product: need 0 <= k <= n");
    Rational x = 1;
    for (int j = 1; j <= n - k; ++j)
        x *= frac(fact(j - 1) * fact(j + 2 * k - 1) * fact(3 * j + 3 * k - 2) * fact(3 * j + 3 * k - 2),
                  fact(2 * j + k - 1) * fact(2 * j + k - 2) * fact(2 * j + 3 * k - 1) * fact(2 * j + 3 * k - 2));
    return x;
}

BigInt lgv_entry(int i, int j) {
    return 2 * binomial(i + j - 2, 2 * j - i - 2) + binomial(i + j - 2, 2 * j - i - 1);
}

RingMatrix<Rational> lgv_matrix(int n, int k) {
    if (k < 0 || k > n) throw AlgebraError("lgv_matrix: need 0 <= k <= n");
    RingMatrix<Rational> m(n - k, n - k);
    for (int i = 1; i <= n - k; ++i)
        for (int j = 1; j <= n - k; ++j) m(i - 1, j - 1) = Rational(lgv_entry(i + k, j + k));
    return m;
}

BigInt lgv_count(int n, int k) {
    Rational d = det_exact(lgv_matrix(n, k));
    if (d.get_den() != 1) throw AlgebraError("lgv_count: determinant not integral");
    return d.get_num();
}

Rational cssc_ratio_closed(int n, int k) {
    if (k < 1 || k > n) throw AlgebraError("cssc_ratio_closed: need 1 <= k <= n");
    return frac(fact(2 * k - 2) * fact(2 * k - 1) * fact(2 * n + k - 1) * fact(n - k),
                fact(k - 1) * fact(3 * k - 3) * BigInt(3 * k - 1) * fact(2 * n - k) * fact(n + k - 1));
}

CheckReport pseudo_ratio_link(int n, int k) {
    CheckReport rep;
    const Cyclotomic3 r = efp_ratio_closed(EfpFamily::even_pseudo, n, k).value;
    // r = -q x with x rational, so |r| = x
    const Rational modulus = (r / -Cyclotomic3::omega()).a();
    const Rational counts = cssc_product(n, k - 1) / cssc_product(n, k);
    const std::string at = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    rep.add("|pseudo ratio| = CSSCPP ratio " + at, modulus == counts, to_string(counts), to_string(modulus),
            Provenance::paper);
    const Rational lgv = Rational(lgv_count(n, k - 1)) / Rational(lgv_count(n, k));
    rep.add("CSSCPP ratio by determinants " + at, lgv == counts, to_string(counts), to_string(lgv),
            Provenance::derived);
    rep.add("CSSCPP ratio in factorial form " + at, cssc_ratio_closed(n, k) == counts, to_string(counts),
            to_string(cssc_ratio_closed(n, k)), Provenance::paper);
    return rep;
}

double thermo_limit(int k) {
    if (k < 0) throw AlgebraError("thermo_limit: k >= 0");
    double x = std::pow(std::sqrt(3.0) / 2.0, 3.0 * k * k);
    for (int j = 1; j <= k; ++j)
        x *= std::tgamma(j - 1.0 / 3) * std::tgamma(j + 1.0 / 3) / (std::tgamma(j - 0.5) * std::tgamma(j + 0.5));
    return x;
}

}  // namespace xxz
