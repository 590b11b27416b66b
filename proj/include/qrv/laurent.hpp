#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrv {

using Int = mpz_class;

struct SeriesError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct NonUnitLeading : SeriesError {
	NonUnitLeading() : SeriesError("series inverse requires lowest coefficient +1 or -1") {}
	explicit NonUnitLeading(const std::string& what) : SeriesError(what) {}
};
struct ZeroSeries : SeriesError {
	ZeroSeries() : SeriesError("cannot invert a series that is zero below its precision") {}
	explicit ZeroSeries(const std::string& what) : SeriesError(what) {}
};

/* Truncated formal Laurent series in q with exact integer coefficients.
 * coeffs[i] is the coefficient of q^{offset+i}; the series is trusted for
 * all exponents strictly below prec. Exact polynomials carry prec = kInfPrec
 * so that min-propagation never discards knowledge. */
class LaurentSeries {
public:
	static constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;

	LaurentSeries() : offset_(0), prec_(0) {}

	static LaurentSeries zero(long prec) {
		LaurentSeries s;
		s.offset_ = prec;
		s.prec_ = prec;
		return s;
	}
	static LaurentSeries monomial(Int c, long exp, long prec = kInfPrec);
	static LaurentSeries one(long prec = kInfPrec) { return monomial(1, 0, prec); }

	/* Raw constructor from a coefficient window starting at q^offset. */
	LaurentSeries(long offset, std::vector<Int> coeffs, long prec);

	long offset() const { return offset_; }
	long prec() const { return prec_; }
	bool is_zero() const { return coeffs_.empty(); }
	size_t terms() const { return coeffs_.size(); }

	/* Coefficient of q^e; zero outside the stored window. Exponents at or
	 * above prec are not trusted and must not be queried. */
	const Int& coeff(long e) const;

	/* Valuation (smallest exponent with nonzero coefficient); nullopt if the
	 * series is zero below prec. */
	std::optional<long> valuation() const {
		if (coeffs_.empty()) return std::nullopt;
		return offset_;
	}

	LaurentSeries operator-() const;
	LaurentSeries operator+(const LaurentSeries& rhs) const;
	LaurentSeries operator-(const LaurentSeries& rhs) const;
	LaurentSeries operator*(const LaurentSeries& rhs) const;
	LaurentSeries& operator+=(const LaurentSeries& rhs) { return *this = *this + rhs; }
	LaurentSeries& operator-=(const LaurentSeries& rhs) { return *this = *this - rhs; }
	LaurentSeries& operator*=(const LaurentSeries& rhs) { return *this = *this * rhs; }

	/* Multiplication by q^m: shifts exponents and precision. */
	LaurentSeries shifted(long m) const;
	LaurentSeries scaled(const Int& c) const;

	/* Multiply/divide by the binomial (1 + sign*q^e), sign in {-1,+1}.
	 * These are O(length) streaming passes, the workhorse behind every
	 * Pochhammer symbol. e may be negative; e = 0 degenerates to scaling
	 * by 0 or 2 (division by either is an error). */
	LaurentSeries mul_binomial(long e, int sign) const;
	LaurentSeries div_binomial(long e, int sign) const;

	/* Multiplicative inverse. Requires a unit lowest coefficient. */
	LaurentSeries inverse() const;

	/* Lower precision to new_prec, dropping now-untrusted coefficients. */
	LaurentSeries truncated(long new_prec) const;

	/* The substitution q -> -q (negates odd-exponent coefficients). */
	LaurentSeries negate_q() const;

	/* Equality of all coefficients on [min offset, below) where
	 * below <= min(prec, rhs.prec) must hold. */
	bool equal_below(const LaurentSeries& rhs, long below) const;

	struct Mismatch {
		long exp;
		Int lhs;
		Int rhs;
	};
	/* First exponent in [min offset, below) where coefficients differ. */
	std::optional<Mismatch> first_mismatch(const LaurentSeries& rhs, long below) const;

	std::string str(size_t max_terms = 12) const;

private:
	void normalize();

	long offset_;
	long prec_;
	std::vector<Int> coeffs_;
};

inline LaurentSeries operator*(const Int& c, const LaurentSeries& s) { return s.scaled(c); }

}  // namespace qrv
