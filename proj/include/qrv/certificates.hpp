#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrv/kr.hpp"
#include "qrv/report.hpp"

namespace qrv {
namespace wz {

/* A rational q-expression kept in factored form: sign * q^shift *
 * prod(numerator binomials and polynomials) / prod(denominator binomials),
 * where a binomial (e, s) stands for (1 + s q^e). Exponent-zero binomials
 * with s = -1 are exact zeros and are kept symbolic so that the k = M+1 and
 * k = M+2 certificate cells cancel them against the vanishing reciprocal
 * Pochhammer factors instead of dividing by zero.
 *
 * Cancellation follows the k-deformation limit: a vanishing factor whose
 * exponent moves with the summation variable k carries an orientation
 * (the sign it contributes when written as +-q^s(1 - q^{t eps})), and each
 * cancelled numerator/denominator pair multiplies the value by the product
 * of the two orientations. Reciprocal-ladder zeros always have orientation
 * -1; a monomial difference q^a - q^b has orientation -sign(d(a-b)/dk). */
struct QFactored {
	struct Binom {
		long e;
		int s;
		int orient; /* meaningful only for exact-zero factors */
	};

	int sign = +1;
	long shift = 0;
	std::vector<Binom> num_binoms;
	std::vector<Binom> den_binoms;
	std::vector<LaurentSeries> num_polys; /* exact Laurent polynomials */

	void mul_monomial_diff(long a, long b, bool denominator, int k_dir);
	void mul_poch_finite(long base, long step, long n, int arg_sign, bool denominator);

	/* Exact valuation; nullopt when the expression is exactly zero.
	 * Throws NonUnitLeading if a zero factor survives in the denominator. */
	std::optional<long> valuation() const;

	/* Expand to a Laurent series trusted below prec. */
	LaurentSeries eval(long prec) const;

private:
	/* +1/-1 overall orientation from cancelled zero pairs; nullopt = zero. */
	std::optional<int> cancelled_orientation() const;
};

enum class Family { J10, J11, J12_0, J12_2 };
Family family_from_string(const std::string& s);
std::string to_string(Family f);
kr::JFamily j_family(Family f);

/* The certificate pair and recurrence data for one family. */
QFactored f_term(Family fam, long k, long M);
QFactored g_cert(Family fam, long k, long M);

/* Recurrence coefficients in the certificate orientation:
 * c2(M) f(k,M+2) - c1(M) f(k,M+1) + c0 f(k,M) = g(k+1,M) - g(k,M). */
struct WZCoeffs {
	LaurentSeries c2, c1, c0;
};
WZCoeffs wz_coeffs(Family fam, long M);

/* Relation j_{fam,M} = prefactor * sum_k f(k,M): 1 for J10 and J12_0,
 * (1+q) for J11, (1+q)(1+q^2) for J12_2. */
LaurentSeries j_sum_prefactor(Family fam);

/* Cell-by-cell telescoping identity over 0 <= k <= k_max, 0 <= M <= M_max,
 * exactly below qprec; also asserts g(0,M) = 0. */
VerificationReport check_telescoping(Family fam, long k_max, long M_max, long qprec);

/* (i) the finite k-sum of f reproduces j_coeff; (ii) the telescoped sum
 * collapses, confirming the j-recurrence independently. */
VerificationReport check_summed_recurrence(Family fam, long M_max, long qprec);

/* Valuation growth of g(k,M) on k in [k_lo, k_hi] (exact, via the factored
 * form): nondecreasing, eventually at or above qprec, infinite at k = 0. */
VerificationReport check_vanishing_tail(Family fam, long M, long k_lo, long k_hi, long qprec);

}  // namespace wz
}  // namespace qrv
