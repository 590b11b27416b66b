#pragma once

#include <map>

#include "qrv/laurent.hpp"

namespace qrv {

/* Polynomial in x whose coefficients are Laurent series in q: the value type
 * for functional-equation checks on H_l(x;q) and the J families. Trusted for
 * x-exponents <= xcap and q-exponents < qprec. */
class BivariateSeries {
public:
	BivariateSeries(long xcap, long qprec) : xcap_(xcap), qprec_(qprec) {}

	static BivariateSeries zero(long xcap, long qprec) { return BivariateSeries(xcap, qprec); }
	static BivariateSeries constant(LaurentSeries c, long xcap, long qprec) {
		BivariateSeries f(xcap, qprec);
		f.add_to(0, std::move(c));
		return f;
	}

	long xcap() const { return xcap_; }
	long qprec() const { return qprec_; }
	const std::map<long, LaurentSeries>& components() const { return components_; }

	/* Component at x^n (zero series if absent). */
	LaurentSeries component(long n) const;

	void add_to(long xexp, LaurentSeries s);
	void set(long xexp, LaurentSeries s);

	BivariateSeries operator+(const BivariateSeries& rhs) const;
	BivariateSeries operator-(const BivariateSeries& rhs) const;

	/* x -> x q^m: component at x^N picks up q^{mN}. */
	BivariateSeries substitute_x_qpow(long m) const;

	/* Multiply by a polynomial in x with Laurent coefficients; components
	 * past the joint xcap are dropped, the cap is recorded. */
	BivariateSeries mul_poly(const BivariateSeries& p) const;

	/* Multiply every component by the same Laurent series. */
	BivariateSeries scale_q(const LaurentSeries& s) const;

	/* Sum of all components: the evaluation at x = 1. The caller guarantees
	 * via a truncation bound that components above xcap only contribute at or
	 * above qprec. */
	LaurentSeries eval_x1() const;

	/* Lower the q-precision of every component. */
	BivariateSeries truncated_to(long qprec) const;

	bool equal_below(const BivariateSeries& rhs, long xcap, long below) const;

private:
	void trim();

	long xcap_;
	long qprec_;
	std::map<long, LaurentSeries> components_;
};

}  // namespace qrv
