#include "qrv/phi.hpp"

#include <algorithm>

namespace qrv {

namespace {

/* Slack below q^0 a term can reach: each parameter with nonpositive start
 * contributes finitely many negative-exponent factors. */
long negative_depth(const std::vector<QMono>& params, long step) {
	long depth = 0;
	for (const auto& p : params)
		for (long e = p.exp; e < 0; e += step) depth += -e;
	return depth;
}

}  // namespace

LaurentSeries phi(const std::vector<QMono>& upper, const std::vector<QMono>& lower, long step,
                  QMono arg, long prec) {
	if (step < 1) throw BadParameter("phi: step must be >= 1");
	for (const auto& l : lower)
		if (l.sign > 0 && l.exp <= 0 && l.exp % step == 0)
			throw BadParameter("phi: lower parameter hits q^0, terms divide by zero");

	/* Work below the nominal window by the worst negative depth of numerator
	 * factors plus inverse corrections from the denominator side. */
	long slack = negative_depth(upper, step) + negative_depth(lower, step);
	long work = prec + 2 * slack + 2;

	/* Past the burn-in every Pochhammer exponent is >= 1. */
	long burn_in = 0;
	auto note = [&](const QMono& p) {
		if (p.exp < 1) burn_in = std::max(burn_in, (1 - p.exp + step - 1) / step);
	};
	for (const auto& p : upper) note(p);
	for (const auto& p : lower) note(p);

	LaurentSeries acc = LaurentSeries::zero(work);
	LaurentSeries term = LaurentSeries::one(work);
	const long n_cap = 4 * (work + slack) + burn_in + 64;
	for (long n = 0;; ++n) {
		if (term.is_zero()) break;
		if (n >= burn_in) {
			if (arg.exp <= 0) throw DivergentTermOrder();
			auto val = term.valuation();
			if (val && *val >= prec) break;
		}
		if (n > n_cap) throw DivergentTermOrder();
		acc += term;
		/* term_{n+1} = term_n * arg * prod(1 - u q^{mn}) / prod(1 - l q^{mn}) / (1 - q^{m(n+1)}) */
		for (const auto& u : upper) term = term.mul_binomial(u.exp + step * n, -u.sign);
		for (const auto& l : lower) term = term.div_binomial(l.exp + step * n, -l.sign);
		term = term.div_binomial(step * (n + 1), -1);
		term = term.shifted(arg.exp).truncated(work);
		if (arg.sign < 0) term = -term;
	}
	return acc.truncated(prec);
}

LaurentSeries euler_theta(QMono arg, long step, long prec) {
	if (step < 1) throw BadParameter("euler_theta: step must be >= 1");
	long slack = std::max(0L, -arg.exp);
	/* valuation of term n is m n(n-1)/2 + n*arg.exp, minimized near n = -e/m + 1/2 */
	long work = prec + 2 + slack * slack / step + 2 * slack;
	LaurentSeries acc = LaurentSeries::zero(work);
	LaurentSeries term = LaurentSeries::one(work);
	for (long n = 0;; ++n) {
		long val_floor = step * n * (n - 1) / 2 + arg.exp * n;
		if (val_floor >= prec && step * (n - 1) + arg.exp >= 1) break;
		acc += term;
		term = term.div_binomial(step * (n + 1), -1);
		term = term.shifted(step * n + arg.exp).truncated(work);
		/* (-1)^n against the argument sign: the sum is (arg; q^m)_inf */
		if (arg.sign > 0) term = -term;
	}
	return acc.truncated(prec);
}

}  // namespace qrv
