#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xxz/algebra/cyclo_product.hpp"
#include "xxz/algebra/json_io.hpp"
#include "xxz/algebra/matrix.hpp"
#include "xxz/algebra/multipoly.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>

using namespace xxz;

namespace {

using cd = std::complex<double>;
const cd kOmega = std::polar(1.0, 2.0 * M_PI / 3.0);

cd as_complex(const Cyclotomic3& x) { return x.a().get_d() + x.b().get_d() * kOmega; }

Cyclotomic3 random_cyc(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

// Leibniz expansion, the slowest and most literal determinant.
long leibniz(const std::vector<std::vector<long>>& m) {
    std::vector<int> p(m.size());
    std::iota(p.begin(), p.end(), 0);
    long sum = 0;
    do {
        long term = 1;
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            term *= m[i][p[i]];
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inversions;
        }
        sum += (inversions % 2 ? -term : term);
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

}  // namespace

TEST_CASE("rational canonical text") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(parse_rational("-3/2") == make_rational(-3, 2));
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, -1) == 0);
    CHECK(binomial(2, 3) == 0);
}

TEST_CASE("cyclotomic examples") {
    const Cyclotomic3 w = Cyclotomic3::omega();
    CHECK(w * w == Cyclotomic3(-1, -1));
    CHECK(w.inverse() == Cyclotomic3(-1, -1));
    CHECK((Cyclotomic3(1) - w).inverse() == Cyclotomic3(make_rational(2, 3), make_rational(1, 3)));
    CHECK(w.pow(3) == Cyclotomic3(1));
    CHECK(Cyclotomic3::sqrt_omega() * Cyclotomic3::sqrt_omega() == w);
    CHECK_THROWS_AS(Cyclotomic3(0).inverse(), DivisionByZero);
    CHECK((w - w * w) == Cyclotomic3(1, 2));
}

TEST_CASE("cyclotomic field axioms on seeded elements") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        Cyclotomic3 x = random_cyc(rng), y = random_cyc(rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Cyclotomic3(1));
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        // floating oracle for the multiplication table and conj
        CHECK(std::abs(as_complex(x * y) - as_complex(x) * as_complex(y)) < 1e-9 * (1 + std::abs(as_complex(x * y))));
        CHECK(std::abs(as_complex(x.conj()) - std::conj(as_complex(x))) < 1e-9 * (1 + std::abs(as_complex(x))));
        CHECK(std::abs(x.norm().get_d() - std::norm(as_complex(x))) < 1e-9 * (1 + x.norm().get_d()));
    }
}

TEST_CASE("cyclotomic text round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Cyclotomic3 x = random_cyc(rng);
        CHECK(Cyclotomic3::parse(x.str()) == x);
    }
    CHECK(Cyclotomic3::parse("1/2+3/4*w") == Cyclotomic3(make_rational(1, 2), make_rational(3, 4)));
    CHECK(Cyclotomic3::parse("-w") == Cyclotomic3(0, -1));
    CHECK(Cyclotomic3(make_rational(1, 2), -1).str() == "1/2-w");
}

TEST_CASE("laurent arithmetic and star") {
    Laurent q = Laurent::var();
    Laurent d = q - q.pow(-1);
    CHECK((d * d).str() == "q^2-2+q^-2");
    CHECK(((q * q - 1) * (q + 2)).divide_exact(q + 2) == q * q - 1);
    CHECK_THROWS_AS((q + 1).divide_exact(q + 2), InexactDivision);
    CHECK(d.star() == -d);
    CHECK(Laurent::parse("3/2*q^-2-q+5") == Laurent::monomial(make_rational(3, 2), -2) - q + 5);
    CHECK(Laurent::parse(d.str()) == d);
}

TEST_CASE("generic q localization") {
    GenericQ q = GenericQ::q();
    GenericQ d = GenericQ::delta();
    CHECK(d == q - q.pow(-1));
    CHECK((GenericQ(1) / d) * d == GenericQ(1));
    // q^2 - q^{-2} = d (q + q^{-1}): stored with exponent 1
    GenericQ x = q.pow(2) - q.pow(-2);
    CHECK(x.delta_exponent() == 1);
    CHECK(x / d == q + q.pow(-1));
    CHECK(d.star() == -d);
    CHECK((x / d.pow(3)).star() == x.star() / d.star().pow(3));
    CHECK(d.at_omega() == Cyclotomic3(1, 2));
    CHECK(GenericQ::parse(x.str()) == x);
    GenericQ y = (q + 3) / d.pow(2);
    CHECK(GenericQ::parse(y.str()) == y);
    // a value of q away from the poles
    CHECK(y.at(2) == make_rational(5, 1) / make_rational(9, 4));
}

TEST_CASE("poly substitution examples") {
    RosterPtr r = make_roster({"z1", "z2"});
    PolyQ z1 = PolyQ::var(r, "z1"), z2 = PolyQ::var(r, "z2");
    GenericQ q = GenericQ::q();
    PolyQ s = (z1 + z2).substitute_var("z2", "z1", q.pow(2));
    CHECK(s == PolyQ::var(s.roster(), "z1").scaled(GenericQ(1) + q.pow(2)));
    CHECK(s.nvars() == 1);

    PolyQ lin = z1.scaled(q) - z2.scaled(q.pow(-1));
    GenericQ at_one = lin.substitute("z1", 1).substitute("z2", 1).constant_term();
    CHECK(at_one.at_omega() == Cyclotomic3(1, 2));

    PolyQ inv = (z1 * z2).invert_var("z1");
    CHECK(inv.terms().begin()->first.e[0] == -1);
    CHECK(inv.terms().begin()->first.e[1] == 1);
    CHECK_THROWS_AS(z1.substitute("z9", 1), AlgebraError);
}

TEST_CASE("poly exact division examples") {
    RosterPtr r = make_roster({"z1", "z2", "z3"});
    GenericQ q = GenericQ::q();
    PolyQ z1 = PolyQ::var(r, "z1"), z2 = PolyQ::var(r, "z2"), z3 = PolyQ::var(r, "z3");
    CHECK((z2 * z2 - z1 * z1).divide_exact(z2 - z1) == z1 + z2);
    PolyQ f = z1.scaled(q.pow(2)) - z3.scaled(q.pow(-2));
    CHECK(((z1 - z2) * f).divide_exact(z2 - z1) == -f);
    CHECK_THROWS_AS((z1 + z2).divide_exact(z1 - z2), InexactDivision);
    // coefficient-level inexactness is caught too
    CHECK_FALSE(z1.try_divide(z1.scaled(q + 1)).has_value());
}

TEST_CASE("poly exact division property on seeded products") {
    std::mt19937_64 rng(99);
    RosterPtr r = make_roster({"a", "b", "c"});
    std::uniform_int_distribution<int> e(-1, 2), c(-3, 3), nterms(1, 4);
    auto random_poly = [&] {
        PolyW p(r);
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            Monomial m;
            for (int v = 0; v < 3; ++v) m.e[v] = static_cast<std::int16_t>(e(rng));
            p.add_term(m, Cyclotomic3(c(rng), c(rng)));
        }
        return p;
    };
    for (int i = 0; i < 60; ++i) {
        PolyW a = random_poly(), d = random_poly();
        if (d.is_zero()) continue;
        PolyW prod = a * d;
        CHECK(prod.divide_exact(d) == a);
        PolyW other = random_poly();
        if (auto quot = (prod + other).try_divide(d)) CHECK(*quot * d == prod + other);
    }
}

TEST_CASE("leading coefficient") {
    RosterPtr r = make_roster({"z1", "z2"});
    PolyW z1 = PolyW::var(r, "z1"), z2 = PolyW::var(r, "z2");
    PolyW p = (z1 * z1 * z2).scaled(3) + z1;
    CHECK(p.coefficient("z1", 2) == PolyW::var(make_roster({"z2"}), "z2").scaled(3));
    CHECK((z1 + z2).coefficient("z1", 5).is_zero());
}

TEST_CASE("poly json round trip") {
    RosterPtr r = make_roster({"y1", "z1"});
    GenericQ q = GenericQ::q();
    PolyQ p = PolyQ::var(r, "y1").scaled(q / GenericQ::delta()) - PolyQ::var(r, "z1", -2).scaled(q + 5);
    CHECK(poly_from_json<GenericQ>(poly_to_json(p)) == p);
    PolyW w = p.map_coeffs<Cyclotomic3>([](const GenericQ& c) { return c.at_omega(); });
    CHECK(poly_from_json<Cyclotomic3>(poly_to_json(w)) == w);
}

TEST_CASE("determinant examples") {
    RingMatrix<Rational> id = RingMatrix<Rational>::identity(3);
    CHECK(det_exact(id) == 1);
    RingMatrix<Rational> v(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v(i, j) = xxz::pow(Rational(i + 1), j);
    CHECK(det_exact(v) == 2);
    CHECK(det_bareiss(v) == 2);
    CHECK(det_laplace(v) == 2);
    RingMatrix<Rational> rep = v;
    for (int j = 0; j < 3; ++j) rep(2, j) = rep(0, j);
    CHECK(det_exact(rep) == 0);
    CHECK(det_bareiss(rep) == 0);
}

TEST_CASE("Bareiss, Laplace, elimination and Leibniz agree on seeded integer matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + t % 6;
        std::vector<std::vector<long>> raw(n, std::vector<long>(n));
        RingMatrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                raw[i][j] = (t % 5 == 0 && i == 1) ? 0 : entry(rng);
                m(i, j) = raw[i][j];
            }
        Rational expected = leibniz(raw);
        CHECK(det_bareiss(m) == expected);
        CHECK(det_bareiss(m, Exec::parallel) == expected);
        CHECK(det_laplace(m) == expected);
        CHECK(det_elimination(m) == expected);
        if (n >= 2) CHECK(det_laplace_columns(m, {0, n - 1}, [](const auto& s) { return det_laplace(s); }) == expected);
    }
}

TEST_CASE("polynomial determinant paths agree") {
    RosterPtr r = make_roster({"x1", "x2", "x3"});
    RingMatrix<PolyW> vm(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) vm(i, j) = PolyW::var(r, "x" + std::to_string(i + 1), j);
    PolyW x1 = PolyW::var(r, "x1"), x2 = PolyW::var(r, "x2"), x3 = PolyW::var(r, "x3");
    PolyW expected = (x2 - x1) * (x3 - x1) * (x3 - x2);
    CHECK(det_bareiss(vm) == expected);
    CHECK(det_laplace(vm) == expected);
    CHECK(det_laplace_columns(vm, {1}, [](const auto& s) { return det_laplace(s); }) == expected);
}

TEST_CASE("kernel basis") {
    RingMatrix<Rational> zero(2, 2);
    CHECK(kernel_basis(zero).size() == 2);
    CHECK(kernel_basis(RingMatrix<Rational>::identity(3)).empty());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 2 + t % 3, cols = 3 + t % 4;
        RingMatrix<Cyclotomic3> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Cyclotomic3(entry(rng), entry(rng));
        if (t % 4 == 0)
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Cyclotomic3::omega();
        std::size_t rk = 0;
        auto basis = kernel_basis(m, &rk);
        CHECK(basis.size() == cols - rk);
        for (const auto& v : basis) {
            RingMatrix<Cyclotomic3> col(cols, 1);
            for (std::size_t j = 0; j < cols; ++j) col(j, 0) = v[j];
            CHECK((m * col).is_zero());
        }
    }
}

TEST_CASE("t numbers and factorials") {
    CHECK(t_number(3) == Laurent::parse("1+t+t^2", "t"));
    CHECK(t_factorial(2, 3) == Laurent::parse("1+t^3", "t"));
    CHECK(t_factorial(4).eval(1) == 24);
    for (int n = 0; n <= 8; ++n) {
        BigInt expected = 1;
        for (int i = 1; i <= n; ++i) expected *= (BigInt(1) << i) - 1;
        CHECK(t_factorial(n).eval(2) == Rational(expected));
    }
}

TEST_CASE("cyclotomic products") {
    CHECK(cyclotomic_poly(6) == Laurent::parse("t^2-t+1", "t"));
    CHECK(cyclotomic_poly(12).eval(1) == 1);
    for (int n = 1; n <= 9; ++n) {
        CycloProduct f = CycloProduct::t_factorial(n, 3);
        CHECK(f.numerator().divide_exact(f.denominator()) == t_factorial(n, 3));
        CHECK(f.at_one() == Cyclotomic3(Rational(factorial(n))));
        CHECK(f.at(make_rational(3, 2)) == Cyclotomic3(t_factorial(n, 3).eval(make_rational(3, 2))));
    }
    CycloProduct b = CycloProduct::binomial(2, 5);  // t^2 - t^5
    CHECK(b.at(2) == Cyclotomic3(4 - 32));
    CHECK_FALSE((CycloProduct(1) / CycloProduct::t_pow_minus_one(1)).finite_at_one());
    CHECK(CycloProduct::t_pow_minus_one(-2).at(2) == Cyclotomic3(make_rational(-3, 4)));
}
