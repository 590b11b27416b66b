#pragma once

#include <optional>
#include <vector>

#include "qrv/bivariate.hpp"
#include "qrv/phi.hpp"
#include "qrv/pochhammer.hpp"

namespace qrv {
namespace kr {

/* Selects one of the catalog triple sums H_1..H_11, or a raw linear exponent
 * form A(i,j,k) = ai*i + aj*j + ak*k on the quadratic-exponent family. */
struct HSeriesParams {
	int ell = 0; /* 1..11; 0 = raw mode */
	long ai = 0, aj = 0, ak = 0;

	static HSeriesParams catalog(int ell) { return {ell, 0, 0, 0}; }
	static HSeriesParams catalog_checked(int ell);
	static HSeriesParams raw(long ai, long aj, long ak);
};

/* H_l(x;q) with components for x^N, N <= xcap, each trusted below qprec.
 * extra_terms widens the internal summation cutoff (for truncation-stability
 * tests); it never changes the result below qprec. */
BivariateSeries H(const HSeriesParams& params, long xcap, long qprec, long extra_terms = 0);

/* H_l(q^s; q): evaluation at x = q^s (s >= 0) with an internally chosen
 * summation bound that is provably complete below qprec. */
LaurentSeries H_at_x_qpow(const HSeriesParams& params, long s, long qprec, long extra_terms = 0);
inline LaurentSeries H_at_x1(const HSeriesParams& params, long qprec, long extra_terms = 0) {
	return H_at_x_qpow(params, 0, qprec, extra_terms);
}

/* Generalized sums h_{c,d,N} with 2c and d integers; exact zero for N < 0. */
struct HCDParams {
	long two_c;
	long d;
	long N;
};
LaurentSeries h_cd(const HCDParams& p, long qprec);

/* All of h_{c,d,0..N_max} sharing one set of denominator tables. */
std::vector<LaurentSeries> h_cd_row(long two_c, long d, long N_max, long qprec);

/* Structure constants of H_l(x) = sum_N h_{c,d,N} q^{N^2 + mN} x^N. */
struct HStructure {
	long two_c;
	long d;
	long qlin; /* m in Q(N) = N^2 + mN */
};
HStructure h_structure(int ell); /* ell in 1..9 */

/* J_5(x) = H_5(x) - x q^3 H_5(x q^2), J_8(x) = H_8(x) - x q H_8(x q^2). */
BivariateSeries J5(long xcap, long qprec);
BivariateSeries J8(long xcap, long qprec);
LaurentSeries J5_at_x1(long qprec);
LaurentSeries J8_at_x1(long qprec);

/* Double-sum families with even x powers: J_10, J_11, J_{12,a} (a in {0,2,3}). */
enum class JFamily { J10, J11, J12_0, J12_2, J12_3 };
BivariateSeries J_even(JFamily fam, long xcap, long qprec);
LaurentSeries J_at_x1(JFamily fam, long qprec);

/* Coefficients j_{10,M}, j_{11,M}, j_{12,a,M} as the displayed finite k-sums. */
LaurentSeries j_coeff(JFamily fam, long M, long qprec);

/* q-exponent of x^{2M} in J_fam: 3M^2 + linear(fam)*M. */
long j_qexp(JFamily fam, long M);

/* Single-sum right side of Proposition 1, built termwise with the infinite
 * tail (q^{2b+a-2+4n};q^4)_inf absorbed into term n so the b = 1, a = 0 case
 * stays well-defined. closed_product is present exactly when a = 0. */
struct Prop1Result {
	LaurentSeries sum;
	std::optional<LaurentSeries> closed_product;
};
Prop1Result prop1_rhs(long a, long b, long qprec);

/* The bare sum of the Prop. 1 remark (requires 2b - 2 != 0). */
LaurentSeries prop1_remark_sum(long b, long qprec);
LaurentSeries prop1_remark_product(long b, long qprec);

/* Proposition 2 conclusion series. */
BivariateSeries prop2_rhs(long a, long b, long c, long alpha0, long alpha1, long xcap2,
                          long qprec);
LaurentSeries prop2_rhs_at_x1(long a, long b, long c, long alpha0, long alpha1, long qprec);

/* Theorem 2 right-hand sides. */
enum class Thm2 { H4, H5, H8, H9 };
LaurentSeries thm2_rhs(Thm2 which, long qprec);

/* Section 6 sum (raw-mode H with A = i - 3j - 3k) and Section 5 left side. */
BivariateSeries sec6_sum(long xcap, long qprec);
LaurentSeries sec6_sum_at_x1(long qprec);
LaurentSeries sec5_lhs_via_euler(long qprec);  /* (-q;q)_inf J_{12,0}(1) + ... */
LaurentSeries sec5_lhs_triple_sum(long qprec); /* the displayed triple sum */

/* EqH1Final and the McLaughlin-Sills inputs used for H_1 and H_3. */
LaurentSeries eqh1final_lhs(long qprec);
LaurentSeries eqh1final_rhs(long qprec);
LaurentSeries ms112_lhs(long qprec);
LaurentSeries ms112_rhs(long qprec);
LaurentSeries ms130_lhs(long qprec);
LaurentSeries ms130_rhs(long qprec);

}  // namespace kr
}  // namespace qrv
