#pragma once

#include <vector>

#include "qrv/laurent.hpp"

namespace qrv {

struct IllFormedInfinite : SeriesError {
	IllFormedInfinite() : SeriesError("infinite q-Pochhammer symbol requires step >= 1") {}
};

constexpr long kInfiniteLength = -1;

/* Description of a q-shifted factorial (sign*q^base_exp; q^step)_length,
 * with factors (1 - sign*q^{base_exp + step*i}). length = kInfiniteLength
 * denotes the infinite product. arg_sign = -1 encodes arguments like -q^5
 * in (-q^5;q^6)_inf. */
struct PochhammerSpec {
	long base_exp = 1;
	long step = 1;
	long length = kInfiniteLength;
	int arg_sign = +1;

	static PochhammerSpec infinite(long base_exp, long step, int arg_sign = +1) {
		return {base_exp, step, kInfiniteLength, arg_sign};
	}
	static PochhammerSpec finite(long base_exp, long step, long length, int arg_sign = +1) {
		return {base_exp, step, length, arg_sign};
	}
};

/* (sign*q^a; q^m)_n truncated below prec. Infinite products multiply factors
 * until they are 1 modulo q^prec relative to the running offset. */
LaurentSeries poch(const PochhammerSpec& spec, long prec);

/* 1/(sign*q^a; q^m)_n extended by the reciprocal-zero convention: the exact
 * zero series for n < 0. */
LaurentSeries poch_recip_guarded(long base_exp, long step, long signed_length, long prec,
                                 int arg_sign = +1);

/* Product of poch(spec)^{exp_sign} over a factor list; exp_sign = -1 divides. */
struct ProductFactor {
	PochhammerSpec spec;
	int exp_sign = +1;
};
LaurentSeries product_side(const std::vector<ProductFactor>& factors, long prec);

/* Incremental table of 1/(sign*q^a; q^m)_n for n = 0..n_max at fixed prec;
 * the denominators of every sum side live here. */
class PochRecipTable {
public:
	PochRecipTable(long base_exp, long step, long prec, int arg_sign = +1);

	/* Reciprocal for n >= 0; exact zero for n < 0. */
	const LaurentSeries& operator()(long n) const;

	void ensure(long n_max) const;

private:
	long base_exp_;
	long step_;
	long prec_;
	int arg_sign_;
	mutable std::vector<LaurentSeries> table_;
	mutable LaurentSeries zero_;
};

}  // namespace qrv
