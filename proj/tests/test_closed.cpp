#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xxz/closed/closed_forms.hpp"
#include "xxz/spin/ground_state.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

using namespace xxz;

namespace {

const Cyclotomic3 kw = Cyclotomic3::omega();

// All alternating sign matrices of size n, row by row: the running column sums
// stay in {0,1} and each row's nonzero entries alternate starting with +1.
std::vector<std::vector<std::vector<int>>> all_asms(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows;
    std::vector<int> col(n, 0);
    std::function<void(int)> next_row = [&](int depth) {
        if (depth == n) {
            out.push_back(rows);
            return;
        }
        std::vector<int> row(n, 0);
        std::function<void(int, int)> place = [&](int j, int want) {
            if (j == n) {
                if (want != -1) return;  // the last nonzero was +1
                rows.push_back(row);
                for (int c = 0; c < n; ++c) col[c] += row[c];
                next_row(depth + 1);
                for (int c = 0; c < n; ++c) col[c] -= row[c];
                rows.pop_back();
                return;
            }
            row[j] = 0;
            place(j + 1, want);
            int v = want;
            if (col[j] + v == 0 || col[j] + v == 1) {
                row[j] = v;
                place(j + 1, -want);
                row[j] = 0;
            }
        };
        place(0, 1);
    };
    next_row(0);
    return out;
}

bool half_turn_symmetric(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != a[n - 1 - i][n - 1 - j]) return false;
    return true;
}

int ups_for(EfpFamily f, int n) {
    switch (f) {
        case EfpFamily::odd_plus: return n + 1;
        default: return n;
    }
}

Cyclotomic3 brute_efp(EfpFamily f, int n, int k) {
    const Pairing p = f == EfpFamily::even_pseudo ? Pairing::bilinear : Pairing::conjugated;
    static std::map<std::pair<int, int>, StateVector> cache;
    const std::pair<int, int> key{family_size(f, n), ups_for(f, n)};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ground_state(key.first, key.second)).first;
    return efp_homogeneous(it->second, k, p);
}

void require_pass(const CheckReport& rep) {
    CHECK(!rep.items.empty());
    for (const auto& c : rep.items) {
        INFO(c.name << " expected " << c.expected << " got " << c.got);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("asm and half-turn counts against enumeration") {
    for (int n = 1; n <= 6; ++n) {
        auto asms = all_asms(n);
        INFO("n=" << n);
        CHECK(asm_count(n) == BigInt(static_cast<long>(asms.size())));
        long ht = 0;
        for (const auto& a : asms) ht += half_turn_symmetric(a);
        CHECK(aht_count(n) == BigInt(ht));
    }
    CHECK(asm_count(3) == 7);
    CHECK(aht_count(3) == 3);
    CHECK(aht_count(5) == 25);
    CHECK(aht_count(7) == 588);
}

TEST_CASE("half-turn counts against the product for even sizes") {
    // A_HT(2n) = prod_{i<n} (3i)!(3i+2)!/((n+i)!)^2
    for (int n = 1; n <= 10; ++n) {
        Rational x = 1;
        for (int i = 0; i < n; ++i)
            x *= make_rational(factorial(3 * i) * factorial(3 * i + 2), factorial(n + i) * factorial(n + i));
        INFO("N=" << 2 * n);
        CHECK(Rational(aht_count(2 * n)) == x);
        // A_HT(2n+1) = n!(3n)!/((2n)!)^2 A_HT(2n)
        CHECK(Rational(aht_count(2 * n + 1)) ==
              x * make_rational(factorial(n) * factorial(3 * n), factorial(2 * n) * factorial(2 * n)));
    }
}

TEST_CASE("ratio examples") {
    CHECK(efp_ratio_closed(EfpFamily::odd_minus, 2, 1).rational() == make_rational(5, 2));
    CHECK(efp_value(EfpFamily::odd_minus, 2, 1).rational() == make_rational(2, 5));
    CHECK(efp_ratio_closed(EfpFamily::even, 2, 2).rational() == 5);
    CHECK(efp_value(EfpFamily::even, 2, 2).rational() == make_rational(1, 10));
    CHECK(efp_ratio_closed(EfpFamily::odd_minus, 2, 2).rational() == 10);
    CHECK(efp_value(EfpFamily::odd_minus, 2, 2).rational() == make_rational(1, 25));
    CHECK(efp_value(EfpFamily::even, 2, 1).rational() == make_rational(1, 2));
    CHECK(!efp_ratio_closed(EfpFamily::even_pseudo, 2, 1).is_rational());
    CHECK_THROWS_AS(efp_ratio_closed(EfpFamily::odd_minus, 2, 3), AlgebraError);
    CHECK_THROWS_AS(efp_ratio_closed(EfpFamily::even, 2, 0), AlgebraError);
    CHECK_NOTHROW(efp_ratio_closed(EfpFamily::odd_plus, 2, 3));
}

TEST_CASE("telescoped values reach the counting constants") {
    for (int n = 1; n <= 10; ++n) {
        INFO("n=" << n);
        const Rational aht_odd = 1 / Rational(aht_count(2 * n + 1));
        const Rational aht_even = 1 / Rational(aht_count(2 * n));
        const Rational asm2 = 1 / Rational(asm_count(n) * asm_count(n));
        CHECK(efp_value(EfpFamily::odd_minus, n, n).rational() == aht_odd);
        CHECK(efp_value(EfpFamily::even, n, n).rational() == aht_even);
        CHECK(efp_value(EfpFamily::even_pseudo, n, n).value.norm() == asm2 * asm2);
        for (int k = 1; k <= n; ++k) {
            CHECK(efp_ratio_closed(EfpFamily::odd_minus, n, k).rational() > 0);
            CHECK(efp_ratio_closed(EfpFamily::odd_plus, n, k).rational() > 0);
            CHECK(efp_ratio_closed(EfpFamily::even, n, k).rational() > 0);
        }
    }
}

TEST_CASE("closed forms against brute-force ground states") {
    for (EfpFamily f : {EfpFamily::odd_minus, EfpFamily::odd_plus}) {
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= family_max_k(f, n); ++k) {
                INFO(family_name(f) << " n=" << n << " k=" << k);
                CHECK(brute_efp(f, n, k) == efp_value(f, n, k).value);
            }
    }
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            INFO("e n=" << n << " k=" << k);
            CHECK(brute_efp(EfpFamily::even, n, k) == efp_value(EfpFamily::even, n, k).value);
        }
}

TEST_CASE("pseudo family: moduli match, phase is the conjugate") {
    for (int n = 1; n <= 3; ++n) {
        INFO("n=" << n);
        const Rational asm2 = 1 / Rational(asm_count(n) * asm_count(n));
        const Cyclotomic3 top = brute_efp(EfpFamily::even_pseudo, n, n);
        CHECK(top.norm() == asm2 * asm2);
        for (int k = 1; k <= n; ++k) {
            INFO("k=" << k);
            const Cyclotomic3 ratio = brute_efp(EfpFamily::even_pseudo, n, k - 1) / brute_efp(EfpFamily::even_pseudo, n, k);
            const Cyclotomic3 closed = efp_ratio_closed(EfpFamily::even_pseudo, n, k).value;
            CHECK(ratio.norm() == closed.norm());
            CHECK(ratio == closed.conj());
            CHECK(ratio.norm() == (cssc_product(n, k - 1) / cssc_product(n, k)) * (cssc_product(n, k - 1) / cssc_product(n, k)));
        }
        // with ratio -q^{-1}, the value at k = n is (-q)^n / A_n^2
        Cyclotomic3 phase = 1;
        for (int i = 0; i < n; ++i) phase *= -kw;
        CHECK(top == phase * Cyclotomic3(asm2));
    }
}

TEST_CASE("CSSCPP: determinant and product paths") {
    CHECK(lgv_entry(2, 2) == 4);
    CHECK(lgv_count(2, 1) == 4);
    CHECK(lgv_count(2, 0) == 4);
    CHECK(lgv_count(2, 2) == 1);
    CHECK(lgv_count(1, 0) == 1);
    CHECK(lgv_count(1, 1) == 1);
    CHECK(lgv_entry(1, 3) == 0);
    for (int n = 0; n <= 8; ++n) {
        INFO("n=" << n);
        CHECK(Rational(lgv_count(n, 0)) == Rational(asm_count(n) * asm_count(n)));
        for (int k = 0; k <= n; ++k) {
            INFO("k=" << k);
            CHECK(Rational(lgv_count(n, k)) == cssc_product(n, k));
            if (k >= 1) CHECK(cssc_ratio_closed(n, k) == cssc_product(n, k - 1) / cssc_product(n, k));
        }
    }
}

TEST_CASE("pseudo ratio link") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) require_pass(pseudo_ratio_link(n, k));
    auto mod = [](int n, int k) {
        return efp_ratio_closed(EfpFamily::even_pseudo, n, k).value.norm();
    };
    CHECK(mod(2, 1) == 1);
    CHECK(mod(2, 2) == 16);
    CHECK(mod(1, 1) == 1);
}

TEST_CASE("thermodynamic limit") {
    CHECK(std::abs(thermo_limit(1) - 0.5) < 1e-12);
    CHECK(thermo_limit(0) == 1.0);
    for (int k = 1; k < 6; ++k) CHECK(thermo_limit(k + 1) < thermo_limit(k));
    for (EfpFamily f : {EfpFamily::odd_minus, EfpFamily::odd_plus}) {
        for (int k = 1; k <= 3; ++k) {
            double prev = 1e300;
            for (int N = 5; N <= 49; N += 4) {
                const int n = (N - 1) / 2;
                if (k > n) continue;
                const double e = efp_value(f, n, k).rational().get_d();
                const double gap = std::abs(e - thermo_limit(k));
                INFO(family_name(f) << " k=" << k << " N=" << N << " gap=" << gap);
                CHECK(gap < prev + 1e-9);
                prev = gap;
            }
            CHECK(prev < 5e-2);
        }
    }
}

TEST_CASE("seeded: telescoping is consistent with single ratios") {
    std::mt19937_64 rng(19);
    const EfpFamily fams[] = {EfpFamily::even, EfpFamily::even_pseudo, EfpFamily::odd_minus, EfpFamily::odd_plus};
    for (int it = 0; it < 100; ++it) {
        EfpFamily f = fams[rng() % 4];
        int n = 1 + static_cast<int>(rng() % 10);
        int k = 1 + static_cast<int>(rng() % family_max_k(f, n));
        INFO(family_name(f) << " n=" << n << " k=" << k);
        CHECK(efp_value(f, n, k - 1).value / efp_value(f, n, k).value == efp_ratio_closed(f, n, k).value);
    }
}
