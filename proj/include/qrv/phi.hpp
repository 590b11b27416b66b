#pragma once

#include <vector>

#include "qrv/laurent.hpp"

namespace qrv {

struct DivergentTermOrder : SeriesError {
	DivergentTermOrder()
	    : SeriesError("basic hypergeometric term valuations do not increase; no truncation bound") {}
};
struct BadParameter : SeriesError {
	using SeriesError::SeriesError;
};

/* A signed q-power monomial, sign*q^exp. All parameters the paper ever
 * specializes are of this shape. */
struct QMono {
	int sign = +1;
	long exp = 0;
};

/* Generic basic hypergeometric series
 *   sum_n [ (upper; q^m)_n / ((lower; q^m)_n (q^m; q^m)_n) ] * arg^n
 * with every parameter a signed q-power. Upper parameters are omitted for
 * the limit value 0 (their Pochhammer factor is 1). Terms are summed while
 * their valuation is below prec; once every Pochhammer exponent has turned
 * positive the term valuation moves by exactly arg.exp per step, so
 * arg.exp <= 0 with a nonzero running term is reported as divergent. */
LaurentSeries phi(const std::vector<QMono>& upper, const std::vector<QMono>& lower, long step,
                  QMono arg, long prec);

/* sum_n (-1)^n q^{m n(n-1)/2} arg^n / (q^m; q^m)_n = (arg; q^m)_inf, the
 * a -> inf limit of the q-binomial theorem. The quadratic exponent
 * guarantees a truncation bound for any argument. */
LaurentSeries euler_theta(QMono arg, long step, long prec);

}  // namespace qrv
