#pragma once

#include "xxz/algebra/cyclotomic3.hpp"
#include "xxz/algebra/matrix.hpp"
#include "xxz/algebra/rational.hpp"
#include "xxz/efp/family.hpp"
#include "xxz/report/check.hpp"

#include <string>
#include <vector>

namespace xxz {

// An exact value; the pseudo family carries a phase, everything else is rational.
struct ClosedFormValue {
    std::string family;  // efp-e, efp-e~, efp-, efp+, asm, aht, csscpp
    int n = 0, k = 0;
    Cyclotomic3 value;

    bool is_rational() const { return value.b() == 0; }
    Rational rational() const;
    std::string str() const;
};

// A_n = prod_{j=0}^{n-1} (3j+1)!/(n+j)!
BigInt asm_count(int n);
// Odd N: the product formula. Even N: reciprocal of the telescoped e-family EFP at k = n.
BigInt aht_count(int N);

// E(k-1)/E(k) in factorial form; the e~ family carries the factor -q (q = w).
ClosedFormValue efp_ratio_closed(EfpFamily f, int n, int k);
// E(k) = prod_{j<=k} ratio(j)^{-1}, E(0) = 1.
ClosedFormValue efp_value(EfpFamily f, int n, int k);

// Product formula for the punctured cyclically symmetric self-complementary
// plane partitions, with the product index read as j.
Rational cssc_product(int n, int k);
// Q_{i,j} = 2 C(i+j-2, 2j-i-2) + C(i+j-2, 2j-i-1), out-of-range binomials zero.
BigInt lgv_entry(int i, int j);
RingMatrix<Rational> lgv_matrix(int n, int k);
BigInt lgv_count(int n, int k);
// CSSCPP(2n, k-1)/CSSCPP(2n, k) in factorial form.
Rational cssc_ratio_closed(int n, int k);

// |pseudo ratio| against the CSSCPP ratio.
CheckReport pseudo_ratio_link(int n, int k);

// (sqrt 3/2)^{3k^2} prod_{j<=k} G(j-1/3)G(j+1/3)/(G(j-1/2)G(j+1/2))
double thermo_limit(int k);

}  // namespace xxz
