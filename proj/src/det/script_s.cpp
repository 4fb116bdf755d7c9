#include "xxz/det/script_s.hpp"

#include "xxz/efp/inhom.hpp"
#include "xxz/qkz/verify.hpp"

namespace xxz {

RosterPtr staircase_roster(int m, int k) {
    return make_roster(concat(numbered("y", 1, 2 * k), numbered("z", 1, m)));
}

PolyW staircase_script_s(int r1, int r2, int m, int k, const RosterPtr& ro, Exec exec) {
    return script_s_laplace<Cyclotomic3>(StaircaseSeq{r1}.first(m + k), StaircaseSeq{r2}.first(m + k), ro,
                                         numbered("z", 1, m), numbered("y", 1, 2 * k), exec);
}

CheckReport script_s_recursion_check(int r1, int r2, int m, int k) {
    if (m < 2) throw AlgebraError("script_s_recursion_check: m >= 2");
    CheckReport rep;
    RosterPtr ro = staircase_roster(m, k);
    PolyW s = staircase_script_s(r1, r2, m, k, ro);
    const Cyclotomic3 w = Cyclotomic3::omega();
    PolyW small = staircase_script_s(r1, r2, m - 2, k, staircase_roster(m - 2, k));
    const std::string tag = "S(" + std::to_string(r1) + "," + std::to_string(r2) + ";" + std::to_string(m) + "," +
                            std::to_string(k) + ")";
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            for (int e : {1, -1}) {
                PolyW lhs = s.substitute_var(zname(i), zname(j), w.pow(e));
                RosterPtr rr = lhs.roster();
                const Cyclotomic3 back = w.pow(-e);
                PolyW zj = PolyW::var(rr, zname(j));
                PolyW rhs = zj.scaled(-back).pow(r1 + r2);
                std::map<std::string, std::string> rename;
                int next = 1;
                for (int l = 1; l <= m; ++l) {
                    if (l == i || l == j) continue;
                    rhs *= (PolyW::var(rr, zname(l)) - zj.scaled(back)).pow(2);
                    rename[zname(next++)] = zname(l);
                }
                for (int a = 1; a <= 2 * k; ++a) rhs *= PolyW::var(rr, yname(a)) - zj.scaled(back);
                rhs *= small.embed(rr, rename);
                const bool ok = lhs == rhs;
                rep.add(tag + " at z" + std::to_string(i) + " = w^" + std::to_string(e) + " z" + std::to_string(j), ok,
                        ok ? "" : clip(rhs.str()), ok ? "" : clip(lhs.str()), Provenance::paper);
            }
        }
    return rep;
}

PolyW efp_det_rep(EfpFamily f, int n, int k, Exec exec) {
    const int N = family_size(f, n), m = N - k;
    if (k < 0 || m < 0) throw AlgebraError("efp_det_rep: need 0 <= k <= N");
    RosterPtr ro = efp_roster(N, k);
    int r1 = 0, r2 = 1;
    if (f == EfpFamily::even_pseudo) r2 = 2;
    if (f == EfpFamily::odd_plus) r1 = 1, r2 = 2;
    PolyW s = script_s_laplace<Cyclotomic3>(StaircaseSeq{r1}.first(m + k), StaircaseSeq{r2}.first(m + k), ro,
                                            numbered("z", 1, m), numbered("y", 1, 2 * k), exec);
    const int e3 = (N % 2 == 0 ? -n * (n - 1) : -n * n) + k * (k - 1) / 2;
    s = s.scaled(Cyclotomic3(3).pow(e3));
    if (f == EfpFamily::even_pseudo || f == EfpFamily::odd_plus) {
        Monomial inv;
        for (int j = 1; j <= m; ++j) inv.e[ro->size() - m + j - 1] = -1;
        s = s.shifted(inv);
    }
    return s;
}

PolyW efp_core_at_omega(EfpFamily f, int n, int k) {
    const int N = family_size(f, n);
    Mu mu = f == EfpFamily::odd_minus ? Mu::minus : f == EfpFamily::odd_plus ? Mu::plus : Mu::e;
    EfpKind kind = f == EfpFamily::even_pseudo ? EfpKind::pseudo : EfpKind::plain;
    return inhom_efp<Cyclotomic3>(mu, N, k, kind).poly;
}

std::string DetRepComparison::str() const {
    return "E^" + family_name(family) + "_" + std::to_string(family_size(family, n)) + "(" + std::to_string(k) +
           ") = [" + (monomial ? factor.str() : std::string("not a monomial")) + "] * det rep";
}

DetRepComparison compare_det_rep(EfpFamily f, int n, int k, Exec exec) {
    DetRepComparison c{f, n, k, false, {}};
    PolyW rep = efp_det_rep(f, n, k, exec);
    PolyW core = efp_core_at_omega(f, n, k);
    if (auto r = monomial_ratio(core, rep)) {
        c.monomial = true;
        c.factor = *r;
    }
    return c;
}

Cyclotomic3 det_rep_calibration(EfpFamily f, int n, int k) {
    const long pairs = static_cast<long>(k) * (k - 1) / 2;
    switch (f) {
        case EfpFamily::even: return Cyclotomic3(-3).pow(-pairs);
        case EfpFamily::odd_minus:
        case EfpFamily::odd_plus: return Cyclotomic3(k % 2 ? -1 : 1) * Cyclotomic3(-3).pow(-pairs);
        case EfpFamily::even_pseudo:
            return (-Cyclotomic3::omega().inverse()).pow(n - k) * Cyclotomic3(3).pow(-pairs);
    }
    return 0;
}

}  // namespace xxz
