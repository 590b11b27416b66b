#include "qrv/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qrv {

namespace {
const Int kZero = 0;

long min_prec(long a, long b) { return a < b ? a : b; }

/* prec + shift without overflowing the infinite sentinel. */
long shift_prec(long prec, long m) {
	if (prec >= LaurentSeries::kInfPrec) return LaurentSeries::kInfPrec;
	return prec + m;
}
}  // namespace

LaurentSeries::LaurentSeries(long offset, std::vector<Int> coeffs, long prec)
    : offset_(offset), prec_(prec), coeffs_(std::move(coeffs)) {
	normalize();
}

LaurentSeries LaurentSeries::monomial(Int c, long exp, long prec) {
	LaurentSeries s;
	s.prec_ = prec;
	if (c == 0 || exp >= prec) {
		s.offset_ = prec;
		return s;
	}
	s.offset_ = exp;
	s.coeffs_.push_back(std::move(c));
	return s;
}

void LaurentSeries::normalize() {
	long len = static_cast<long>(coeffs_.size());
	if (prec_ < kInfPrec && offset_ + len > prec_) {
		len = std::max(0L, prec_ - offset_);
		coeffs_.resize(len);
	}
	size_t lo = 0;
	while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
	size_t hi = coeffs_.size();
	while (hi > lo && coeffs_[hi - 1] == 0) --hi;
	if (lo == hi) {
		coeffs_.clear();
		offset_ = prec_;
		return;
	}
	if (lo > 0 || hi < coeffs_.size()) {
		std::vector<Int> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
		coeffs_ = std::move(trimmed);
	}
	offset_ += static_cast<long>(lo);
}

const Int& LaurentSeries::coeff(long e) const {
	if (e < offset_) return kZero;
	size_t i = static_cast<size_t>(e - offset_);
	if (i >= coeffs_.size()) return kZero;
	return coeffs_[i];
}

LaurentSeries LaurentSeries::operator-() const {
	LaurentSeries r = *this;
	for (auto& c : r.coeffs_) c = -c;
	return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& rhs) const {
	long prec = min_prec(prec_, rhs.prec_);
	if (coeffs_.empty() && rhs.coeffs_.empty()) return zero(prec);
	long lo = std::min(coeffs_.empty() ? rhs.offset_ : offset_,
	                   rhs.coeffs_.empty() ? offset_ : rhs.offset_);
	long hi_a = coeffs_.empty() ? lo : offset_ + static_cast<long>(coeffs_.size());
	long hi_b = rhs.coeffs_.empty() ? lo : rhs.offset_ + static_cast<long>(rhs.coeffs_.size());
	long hi = std::min(std::max(hi_a, hi_b), prec);
	if (hi <= lo) return zero(prec);
	std::vector<Int> out(static_cast<size_t>(hi - lo));
	for (size_t i = 0; i < coeffs_.size(); ++i) {
		long e = offset_ + static_cast<long>(i);
		if (e >= hi) break;
		out[static_cast<size_t>(e - lo)] = coeffs_[i];
	}
	for (size_t i = 0; i < rhs.coeffs_.size(); ++i) {
		long e = rhs.offset_ + static_cast<long>(i);
		if (e >= hi) break;
		out[static_cast<size_t>(e - lo)] += rhs.coeffs_[i];
	}
	return LaurentSeries(lo, std::move(out), prec);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& rhs) const { return *this + (-rhs); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
	/* A zero-below-prec factor has valuation >= prec, which the offset_ ==
	 * prec_ convention encodes, so the precision rule below covers it. */
	long prec = min_prec(shift_prec(prec_, rhs.offset_), shift_prec(rhs.prec_, offset_));
	if (coeffs_.empty() || rhs.coeffs_.empty()) return zero(prec);
	long lo = offset_ + rhs.offset_;
	if (lo >= prec) return zero(prec);
	long len = std::min(static_cast<long>(coeffs_.size() + rhs.coeffs_.size()) - 1, prec - lo);
	std::vector<Int> out(static_cast<size_t>(len));
	for (size_t i = 0; i < coeffs_.size(); ++i) {
		if (static_cast<long>(i) >= len) break;
		if (coeffs_[i] == 0) continue;
		const mpz_srcptr a = coeffs_[i].get_mpz_t();
		size_t jmax = std::min(rhs.coeffs_.size(), static_cast<size_t>(len) - i);
		for (size_t j = 0; j < jmax; ++j) {
			if (rhs.coeffs_[j] == 0) continue;
			mpz_addmul(out[i + j].get_mpz_t(), a, rhs.coeffs_[j].get_mpz_t());
		}
	}
	return LaurentSeries(lo, std::move(out), prec);
}

LaurentSeries LaurentSeries::shifted(long m) const {
	LaurentSeries r = *this;
	r.offset_ += m;
	r.prec_ = shift_prec(r.prec_, m);
	return r;
}

LaurentSeries LaurentSeries::scaled(const Int& c) const {
	if (c == 0) return zero(prec_);
	LaurentSeries r = *this;
	for (auto& x : r.coeffs_) x *= c;
	return r;
}

LaurentSeries LaurentSeries::mul_binomial(long e, int sign) const {
	if (e == 0) return sign < 0 ? zero(prec_) : scaled(2);
	if (e < 0) {
		/* (1 + s q^{-m}) = s q^{-m} (1 + s q^{m}) since s^2 = 1. */
		LaurentSeries r = mul_binomial(-e, sign).shifted(e);
		return sign < 0 ? -r : r;
	}
	if (coeffs_.empty()) return zero(min_prec(prec_, shift_prec(prec_, e)));
	long len = static_cast<long>(coeffs_.size()) + e;
	if (prec_ < kInfPrec) len = std::min(len, prec_ - offset_);
	std::vector<Int> out(static_cast<size_t>(std::max(0L, len)));
	for (size_t i = 0; i < coeffs_.size() && static_cast<long>(i) < len; ++i) out[i] = coeffs_[i];
	for (size_t i = 0; i + static_cast<size_t>(e) < out.size(); ++i) {
		if (coeffs_.size() <= i) break;
		if (sign > 0)
			out[i + static_cast<size_t>(e)] += coeffs_[i];
		else
			out[i + static_cast<size_t>(e)] -= coeffs_[i];
	}
	return LaurentSeries(offset_, std::move(out), prec_);
}

LaurentSeries LaurentSeries::div_binomial(long e, int sign) const {
	if (e == 0) {
		if (sign < 0) throw ZeroSeries("division by (1 - q^0) = 0");
		throw NonUnitLeading("division by (1 + q^0) = 2 is not integral");
	}
	if (e < 0) {
		LaurentSeries r = div_binomial(-e, sign).shifted(-e);
		return sign < 0 ? -r : r;
	}
	if (coeffs_.empty()) return *this;
	if (prec_ >= kInfPrec)
		throw SeriesError("division by a binomial requires finite precision");
	/* t[n] = c[n] - s t[n-e], filling upward from the offset. */
	long len = prec_ - offset_;
	std::vector<Int> out(static_cast<size_t>(len));
	for (long n = 0; n < len; ++n) {
		Int v = (static_cast<size_t>(n) < coeffs_.size()) ? coeffs_[static_cast<size_t>(n)] : Int(0);
		if (n >= e) {
			if (sign > 0)
				v -= out[static_cast<size_t>(n - e)];
			else
				v += out[static_cast<size_t>(n - e)];
		}
		out[static_cast<size_t>(n)] = std::move(v);
	}
	return LaurentSeries(offset_, std::move(out), prec_);
}

LaurentSeries LaurentSeries::inverse() const {
	if (coeffs_.empty()) throw ZeroSeries();
	const Int& lead = coeffs_.front();
	if (lead != 1 && lead != -1) throw NonUnitLeading();
	if (prec_ >= kInfPrec)
		throw SeriesError("series inverse requires finite precision");
	/* 1/a agrees with 1/(known window of a) below prec - 2*offset. */
	long out_prec = prec_ - 2 * offset_;
	long len = out_prec - (-offset_);
	if (len <= 0) return zero(out_prec);
	std::vector<Int> out(static_cast<size_t>(len));
	out[0] = lead; /* lead is +-1, its own inverse */
	for (long n = 1; n < len; ++n) {
		Int acc = 0;
		long kmax = std::min<long>(n, static_cast<long>(coeffs_.size()) - 1);
		for (long k = 1; k <= kmax; ++k) {
			if (coeffs_[static_cast<size_t>(k)] == 0) continue;
			mpz_addmul(acc.get_mpz_t(), coeffs_[static_cast<size_t>(k)].get_mpz_t(),
			           out[static_cast<size_t>(n - k)].get_mpz_t());
		}
		if (lead == 1)
			out[static_cast<size_t>(n)] = -acc;
		else
			out[static_cast<size_t>(n)] = acc;
	}
	return LaurentSeries(-offset_, std::move(out), out_prec);
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
	if (new_prec >= prec_) return *this;
	LaurentSeries r = *this;
	r.prec_ = new_prec;
	r.normalize();
	return r;
}

LaurentSeries LaurentSeries::negate_q() const {
	LaurentSeries r = *this;
	for (size_t i = 0; i < r.coeffs_.size(); ++i) {
		long e = r.offset_ + static_cast<long>(i);
		if (e % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
	}
	return r;
}

bool LaurentSeries::equal_below(const LaurentSeries& rhs, long below) const {
	return !first_mismatch(rhs, below).has_value();
}

std::optional<LaurentSeries::Mismatch> LaurentSeries::first_mismatch(const LaurentSeries& rhs,
                                                                     long below) const {
	if (below > prec_ || below > rhs.prec_)
		throw SeriesError("comparison window exceeds tracked precision");
	long lo = std::min(coeffs_.empty() ? below : offset_, rhs.coeffs_.empty() ? below : rhs.offset_);
	for (long e = lo; e < below; ++e) {
		const Int& a = coeff(e);
		const Int& b = rhs.coeff(e);
		if (a != b) return Mismatch{e, a, b};
	}
	return std::nullopt;
}

std::string LaurentSeries::str(size_t max_terms) const {
	std::ostringstream os;
	size_t printed = 0;
	bool first = true;
	for (size_t i = 0; i < coeffs_.size(); ++i) {
		if (coeffs_[i] == 0) continue;
		if (printed == max_terms) {
			os << " + ...";
			break;
		}
		long e = offset_ + static_cast<long>(i);
		Int c = coeffs_[i];
		if (first) {
			if (c < 0) os << "-";
		} else {
			os << (c < 0 ? " - " : " + ");
		}
		Int a = abs(c);
		if (a != 1 || e == 0) os << a.get_str();
		if (e != 0) {
			if (a != 1) os << "*";
			os << "q";
			if (e != 1) os << "^" << e;
		}
		first = false;
		++printed;
	}
	if (first) os << "0";
	if (prec_ < kInfPrec) os << " + O(q^" << prec_ << ")";
	return os.str();
}

}  // namespace qrv
