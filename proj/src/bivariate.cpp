#include "qrv/bivariate.hpp"

#include <algorithm>

namespace qrv {

LaurentSeries BivariateSeries::component(long n) const {
	auto it = components_.find(n);
	if (it == components_.end()) return LaurentSeries::zero(qprec_);
	return it->second;
}

void BivariateSeries::add_to(long xexp, LaurentSeries s) {
	if (xexp > xcap_ || xexp < 0) return;
	auto it = components_.find(xexp);
	if (it == components_.end())
		components_.emplace(xexp, std::move(s));
	else
		it->second += s;
}

void BivariateSeries::set(long xexp, LaurentSeries s) {
	if (xexp > xcap_ || xexp < 0) return;
	components_[xexp] = std::move(s);
}

void BivariateSeries::trim() {
	for (auto it = components_.begin(); it != components_.end();) {
		if (it->first > xcap_ || it->second.is_zero())
			it = components_.erase(it);
		else
			++it;
	}
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& rhs) const {
	BivariateSeries out(std::min(xcap_, rhs.xcap_), std::min(qprec_, rhs.qprec_));
	for (const auto& [n, s] : components_) out.add_to(n, s);
	for (const auto& [n, s] : rhs.components_) out.add_to(n, s);
	out.trim();
	return out;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& rhs) const {
	BivariateSeries out(std::min(xcap_, rhs.xcap_), std::min(qprec_, rhs.qprec_));
	for (const auto& [n, s] : components_) out.add_to(n, s);
	for (const auto& [n, s] : rhs.components_) out.add_to(n, -s);
	out.trim();
	return out;
}

BivariateSeries BivariateSeries::substitute_x_qpow(long m) const {
	BivariateSeries out(xcap_, qprec_);
	for (const auto& [n, s] : components_)
		out.set(n, s.shifted(m * n).truncated(qprec_));
	out.trim();
	return out;
}

BivariateSeries BivariateSeries::mul_poly(const BivariateSeries& p) const {
	BivariateSeries out(std::min(xcap_, p.xcap_), std::min(qprec_, p.qprec_));
	for (const auto& [n, s] : components_) {
		for (const auto& [k, t] : p.components_) {
			if (n + k > out.xcap_) continue;
			out.add_to(n + k, (s * t).truncated(out.qprec_));
		}
	}
	out.trim();
	return out;
}

BivariateSeries BivariateSeries::scale_q(const LaurentSeries& s) const {
	BivariateSeries out(xcap_, qprec_);
	for (const auto& [n, t] : components_) out.set(n, (t * s).truncated(qprec_));
	out.trim();
	return out;
}

BivariateSeries BivariateSeries::truncated_to(long qprec) const {
	BivariateSeries out(xcap_, std::min(qprec, qprec_));
	for (const auto& [n, s] : components_) out.set(n, s.truncated(out.qprec_));
	out.trim();
	return out;
}

LaurentSeries BivariateSeries::eval_x1() const {
	LaurentSeries acc = LaurentSeries::zero(qprec_);
	for (const auto& [n, s] : components_) acc += s.truncated(qprec_);
	return acc;
}

bool BivariateSeries::equal_below(const BivariateSeries& rhs, long xcap, long below) const {
	for (long n = 0; n <= xcap; ++n)
		if (!component(n).truncated(below).equal_below(rhs.component(n).truncated(below), below))
			return false;
	return true;
}

}  // namespace qrv
