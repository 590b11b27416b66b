#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrv/bivariate.hpp"
#include "qrv/kr.hpp"
#include "qrv/report.hpp"

namespace qrv {
namespace rec {

struct ParameterMismatch : SeriesError {
	using SeriesError::SeriesError;
};

enum class HRecFamily { LONG, D0, DM1, CD32 };

HRecFamily h_rec_family_from_string(const std::string& s);
std::string to_string(HRecFamily f);

/* Coefficients of (1 - q^{2N}) h_N = sum_i coeff[i] h_{N-i}, as exact
 * Laurent polynomials. */
std::vector<LaurentSeries> h_rec_coeffs(HRecFamily fam, long two_c, long d, long N);

/* Verify the chosen recurrence on directly computed h_{c,d,N} for all
 * 0 <= N <= N_max below qprec. Family constraints (d = 0, d = -1,
 * 2c = 2d+3) are enforced. */
VerificationReport check_h_recurrence(HRecFamily fam, long two_c, long d, long N_max, long qprec);

/* The three basic linear relations among the h's. */
VerificationReport check_basic_relations(long two_c, long d, long N_max, long qprec);

/* Exact symbolic check that iterating the three-term family recurrence
 * reproduces the four-term recurrence coefficient-by-coefficient. */
VerificationReport check_shift_closure(HRecFamily fam, long two_c, long d, long N_max);

/* Re-derive h_N from the family recurrence alone (initial conditions
 * h_0 = 1, h_N = 0 for N < 0) and compare against the direct sums. */
VerificationReport check_uniqueness(HRecFamily fam, long two_c, long d, long N_max, long qprec);

/* A q-difference functional equation F(x) = sum_i P_i(x,q) F(x q^{m_i}). */
struct FETermMono {
	long xdeg;
	long qexp;
	long coef;
};
struct FETerm {
	std::vector<FETermMono> poly;
	long shift;
};
struct FunctionalEquationSpec {
	std::string name;
	std::function<BivariateSeries(long xcap, long qprec)> family;
	std::vector<FETerm> terms;
};

VerificationReport check_functional_equation(const FunctionalEquationSpec& spec, long xcap,
                                             long qprec);

/* Every functional equation display: E:H1Rec, E:H3Rec..E:H9Rec, E:J10Rec,
 * E:J11Rec, E:H12J0Rec, E:H12J2Rec, plus the J5/J8/H5-shift equations used
 * on the way to Theorem 2. */
const std::vector<FunctionalEquationSpec>& functional_equations();
const FunctionalEquationSpec& functional_equation(const std::string& name);

/* Coefficient-level recurrences on the j_{.,M} sums. */
VerificationReport check_equivalence_reduction(kr::JFamily fam, long M_max, long qprec);

}  // namespace rec
}  // namespace qrv
