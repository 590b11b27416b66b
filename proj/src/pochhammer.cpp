#include "qrv/pochhammer.hpp"

namespace qrv {

LaurentSeries poch(const PochhammerSpec& spec, long prec) {
	if (spec.step < 1) throw IllFormedInfinite();
	/* Negative-exponent factors pull the window down; pad internally so the
	 * result is still trusted below the requested prec. */
	long depth = 0;
	for (long i = 0; spec.base_exp + spec.step * i < 0; ++i) {
		if (spec.length >= 0 && i >= spec.length) break;
		depth += -(spec.base_exp + spec.step * i);
	}
	long work = prec + depth;
	LaurentSeries acc = LaurentSeries::one(work);
	if (spec.length == 0) return acc.truncated(prec);
	int bsign = -spec.arg_sign; /* factor is 1 - sign*q^e */
	for (long i = 0; spec.length < 0 || i < spec.length; ++i) {
		long e = spec.base_exp + spec.step * i;
		if (acc.is_zero()) break;
		if (e >= 1 && e + acc.offset() >= work) break; /* remaining factors are 1 mod window */
		acc = acc.mul_binomial(e, bsign);
	}
	return acc.truncated(prec);
}

LaurentSeries poch_recip_guarded(long base_exp, long step, long signed_length, long prec,
                                 int arg_sign) {
	if (signed_length < 0) return LaurentSeries::zero(prec);
	return poch(PochhammerSpec::finite(base_exp, step, signed_length, arg_sign), prec).inverse()
	    .truncated(prec);
}

LaurentSeries product_side(const std::vector<ProductFactor>& factors, long prec) {
	/* Negative-offset factors can push contributions below the nominal
	 * window, so build with slack and truncate at the end. */
	long slack = 0;
	for (const auto& f : factors) {
		for (long i = 0; f.spec.base_exp + f.spec.step * i < 0; ++i) {
			if (f.spec.length >= 0 && i >= f.spec.length) break;
			slack += -(f.spec.base_exp + f.spec.step * i);
		}
	}
	long work = prec + 2 * slack;
	LaurentSeries acc = LaurentSeries::one(work);
	for (const auto& f : factors) {
		LaurentSeries p = poch(f.spec, work);
		acc = (f.exp_sign >= 0) ? acc * p : acc * p.inverse();
		acc = acc.truncated(work);
	}
	return acc.truncated(prec);
}

PochRecipTable::PochRecipTable(long base_exp, long step, long prec, int arg_sign)
    : base_exp_(base_exp), step_(step), prec_(prec), arg_sign_(arg_sign) {
	if (step_ < 1) throw IllFormedInfinite();
	table_.push_back(LaurentSeries::one(prec_));
	zero_ = LaurentSeries::zero(prec_);
}

const LaurentSeries& PochRecipTable::operator()(long n) const {
	if (n < 0) return zero_;
	ensure(n);
	return table_[static_cast<size_t>(n)];
}

void PochRecipTable::ensure(long n_max) const {
	int bsign = -arg_sign_;
	while (static_cast<long>(table_.size()) <= n_max) {
		long i = static_cast<long>(table_.size()) - 1;
		long e = base_exp_ + step_ * i;
		table_.push_back(table_.back().div_binomial(e, bsign).truncated(prec_));
	}
}

}  // namespace qrv
