#include "xxz/det/schur.hpp"

#include "xxz/qkz/solution.hpp"

namespace xxz {

CheckReport schur_staircase_recursion_check(int m, int r) {
    if (m < 2) throw AlgebraError("schur_staircase_recursion_check: m >= 2");
    CheckReport rep;
    RosterPtr full = z_roster(m);
    std::vector<std::string> xs;
    for (int i = 1; i <= m; ++i) xs.push_back(zname(i));
    PolyW s = schur<Cyclotomic3>(staircase_partition(m, r), full, xs);
    const Cyclotomic3 w = Cyclotomic3::omega();
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            for (int e : {1, -1}) {
                PolyW lhs = s.substitute_var(zname(i), zname(j), w.pow(e));
                RosterPtr rr = lhs.roster();
                Cyclotomic3 back = w.pow(-e);
                PolyW zj = PolyW::var(rr, zname(j));
                PolyW rhs = (zj.scaled(-back)).pow(r);
                std::vector<std::string> rest;
                for (int l = 1; l <= m; ++l) {
                    if (l == i || l == j) continue;
                    rhs *= PolyW::var(rr, zname(l)) - zj.scaled(back);
                    rest.push_back(zname(l));
                }
                rhs *= schur<Cyclotomic3>(staircase_partition(m - 2, r), rr, rest);
                bool ok = lhs == rhs;
                rep.add("S_lambda(" + std::to_string(m) + "," + std::to_string(r) + ") at z" + std::to_string(i) +
                            " = w^" + std::to_string(e) + " z" + std::to_string(j),
                        ok, ok ? "" : rhs.str(), ok ? "" : lhs.str(), Provenance::paper);
            }
        }
    return rep;
}

}  // namespace xxz
