#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xxz/qkz/verify.hpp"

using namespace xxz;

namespace {

const GenericQ kq = GenericQ::q();
const GenericQ kdelta = GenericQ::delta();

void require_pass(const CheckReport& rep) {
    for (const auto& c : rep.items) {
        INFO(c.name << " expected " << c.expected << " got " << c.got);
        CHECK(c.pass);
    }
}

PolyQ z(const RosterPtr& r, int i) { return PolyQ::var(r, "z" + std::to_string(i)); }

std::uint32_t cfg(const std::string& s) { return SpinConfig::parse(s).bits; }

}  // namespace

TEST_CASE("base components") {
    auto r = z_roster(3);
    CHECK(base_component<GenericQ>(Mu::e, 2, z_roster(2)) == PolyQ::constant(z_roster(2), 1));
    CHECK(base_component<GenericQ>(Mu::minus, 3, r) == (z(r, 2).scaled(kq) - z(r, 3).scaled(kq.pow(-1))).scaled(kdelta.pow(-1)));
    CHECK(base_component<GenericQ>(Mu::plus, 3, r) ==
          (z(r, 1).scaled(kq) - z(r, 2).scaled(kq.pow(-1))).scaled(kdelta.pow(-1)) * z(r, 3));
    CHECK_THROWS_AS(base_component<GenericQ>(Mu::e, 3, r), AlgebraError);
}

TEST_CASE("small solutions by hand") {
    auto e2 = solve_qkz<GenericQ>(Mu::e, 2);
    CHECK(e2.components.size() == 2);
    CHECK(e2.at(cfg("10")) == PolyQ::constant(e2.roster, 1));
    CHECK(e2.at(cfg("01")) == PolyQ::constant(e2.roster, -kq.pow(-1)));

    auto m3 = solve_qkz<GenericQ>(Mu::minus, 3);
    auto r = m3.roster;
    PolyQ expected = -(z(r, 1).scaled(kq.pow(2)) - z(r, 3).scaled(kq.pow(-2))).scaled(kdelta.pow(-1));
    CHECK(m3.at(cfg("010")) == expected);

    StateVector s = specialize_homogeneous(m3);
    CHECK(s.components.size() == 3);
    for (const auto& [b, v] : s.components) CHECK(v == Cyclotomic3(1));
}

TEST_CASE("structure checks at generic q") {
    for (auto [mu, N] : std::vector<std::pair<Mu, int>>{
             {Mu::e, 2}, {Mu::e, 4}, {Mu::e, 6}, {Mu::minus, 3}, {Mu::minus, 5}, {Mu::plus, 3}, {Mu::plus, 5}}) {
        CAPTURE(N);
        auto sol = solve_qkz<GenericQ>(mu, N);
        require_pass(verify_structure(sol));
    }
}

TEST_CASE("structure checks at q = w") {
    auto sol = solve_qkz<Cyclotomic3>(Mu::e, 6);
    require_pass(verify_structure(sol));
    CHECK(specialize_homogeneous(sol).components ==
          specialize_homogeneous(solve_qkz<GenericQ>(Mu::e, 6)).components);
}

TEST_CASE("rotation at the combinatorial point") {
    for (auto [mu, N] : std::vector<std::pair<Mu, int>>{
             {Mu::e, 2}, {Mu::e, 4}, {Mu::e, 6}, {Mu::minus, 3}, {Mu::minus, 5}, {Mu::plus, 3}, {Mu::plus, 5}}) {
        CAPTURE(N);
        require_pass(verify_rotation(solve_qkz<GenericQ>(mu, N)));
    }
}

TEST_CASE("serial and parallel construction agree") {
    SolveOptions serial{Exec::serial, true}, parallel{Exec::parallel, true};
    auto a = solve_qkz<GenericQ>(Mu::minus, 5, serial);
    auto b = solve_qkz<GenericQ>(Mu::minus, 5, parallel);
    CHECK(a.components == b.components);
}

TEST_CASE("recursion in the size") {
    for (Mu mu : {Mu::e, Mu::minus, Mu::plus}) {
        int N0 = mu == Mu::e ? 2 : 3;
        for (int N = N0 + 2; N <= N0 + 4; N += 2) {
            auto big = solve_qkz<GenericQ>(mu, N), small = solve_qkz<GenericQ>(mu, N - 2);
            for (int i = 1; i < N; ++i) {
                CAPTURE(N);
                CAPTURE(i);
                require_pass(verify_recursion(big, small, i));
            }
        }
    }
}

TEST_CASE("size links") {
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        require_pass(verify_size_links(solve_qkz<GenericQ>(Mu::plus, 2 * n + 1), solve_qkz<GenericQ>(Mu::e, 2 * n + 2),
                                       solve_qkz<GenericQ>(Mu::e, 2 * n), solve_qkz<GenericQ>(Mu::minus, 2 * n + 1)));
    }
}

TEST_CASE("homogeneous specialization matches the transfer-matrix kernel") {
    for (auto [mu, N] : std::vector<std::pair<Mu, int>>{{Mu::e, 2},
                                                        {Mu::e, 4},
                                                        {Mu::e, 6},
                                                        {Mu::minus, 3},
                                                        {Mu::minus, 5},
                                                        {Mu::plus, 3},
                                                        {Mu::plus, 5}}) {
        CAPTURE(N);
        require_pass(verify_kernel(solve_qkz<GenericQ>(mu, N)));
    }
}

TEST_CASE("corrupted component is caught and named") {
    auto sol = solve_qkz<GenericQ>(Mu::e, 4);
    std::uint32_t bad = cfg("0110");
    sol.components[bad] = sol.components[bad] + PolyQ::var(sol.roster, "z1");
    CheckReport rep = verify_structure(sol);
    CHECK_FALSE(rep.all_pass());
    std::string f = rep.first_failure();
    CHECK(f.find("exchange relation") != std::string::npos);
    CHECK(f.find("0110") != std::string::npos);
}

TEST_CASE("leading coefficient example") {
    auto sol = solve_qkz<GenericQ>(Mu::minus, 3);
    auto lead = sol.at(cfg("010")).coefficient("z1", 1).coefficient("z2", 0).coefficient("z3", 0);
    CHECK(lead.constant_term() == -kq.pow(2) * kdelta.pow(-1));
}

TEST_CASE("degree bounds per variable") {
    auto sol = solve_qkz<GenericQ>(Mu::plus, 5);
    for (const auto& [c, p] : sol.components)
        for (int v = 0; v < 5; ++v) CHECK(p.degree(v) <= 2);
    auto e6 = solve_qkz<GenericQ>(Mu::e, 6);
    for (const auto& [c, p] : e6.components)
        for (int v = 0; v < 6; ++v) CHECK(p.degree(v) <= 2);
}
