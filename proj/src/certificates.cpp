#include "qrv/certificates.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace qrv {
namespace wz {

namespace {

using Clock = std::chrono::steady_clock;
long ms_since(Clock::time_point t0) {
	return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

LaurentSeries mono(long c, long e) { return LaurentSeries::monomial(c, e); }

bool is_zero_binom(const QFactored::Binom& b) { return b.e == 0 && b.s < 0; }

}  // namespace

void QFactored::mul_monomial_diff(long a, long b, bool denominator, int k_dir) {
	/* q^a - q^b = q^min(a,b) (1 - q^{|a-b|}), negated when a > b. */
	long lo = std::min(a, b);
	if (a > b) sign = -sign;
	if (denominator) {
		shift -= lo;
		den_binoms.push_back({std::labs(a - b), -1, -k_dir});
	} else {
		shift += lo;
		num_binoms.push_back({std::labs(a - b), -1, -k_dir});
	}
}

void QFactored::mul_poch_finite(long base, long step, long n, int arg_sign, bool denominator) {
	int bsign = -arg_sign; /* factors (1 - arg_sign q^e) = (1 + bsign q^e) */
	if (n >= 0) {
		for (long i = 0; i < n; ++i)
			(denominator ? den_binoms : num_binoms).push_back({base + step * i, bsign, -1});
	} else {
		/* (x;q)_{-n} = 1 / prod_{i=1..n} (1 - x q^{-i}); the ladder exponents
		 * decrease with the summation variable, orientation -1. */
		for (long i = 1; i <= -n; ++i)
			(denominator ? num_binoms : den_binoms).push_back({base - step * i, bsign, -1});
	}
}

std::optional<int> QFactored::cancelled_orientation() const {
	std::vector<int> num_or, den_or;
	for (const auto& b : num_binoms)
		if (is_zero_binom(b)) num_or.push_back(b.orient);
	for (const auto& b : den_binoms)
		if (is_zero_binom(b)) den_or.push_back(b.orient);
	if (den_or.size() > num_or.size())
		throw NonUnitLeading("zero denominator factor does not cancel");
	if (num_or.size() > den_or.size()) return std::nullopt; /* exactly zero */
	int mult = 1;
	for (size_t i = 0; i < num_or.size(); ++i) mult *= num_or[i] * den_or[i];
	return mult;
}

std::optional<long> QFactored::valuation() const {
	auto orient = cancelled_orientation();
	if (!orient) return std::nullopt;
	long v = shift;
	for (const auto& b : num_binoms)
		if (!is_zero_binom(b)) v += std::min(0L, b.e);
	for (const auto& b : den_binoms)
		if (!is_zero_binom(b)) v -= std::min(0L, b.e);
	for (const auto& p : num_polys) {
		auto pv = p.valuation();
		if (!pv) return std::nullopt;
		v += *pv;
	}
	return v;
}

LaurentSeries QFactored::eval(long prec) const {
	auto orient = cancelled_orientation();
	if (!orient || !valuation()) return LaurentSeries::zero(prec);
	long depth = 0;
	for (const auto& b : num_binoms) depth += std::max(0L, -b.e);
	for (const auto& b : den_binoms) depth += std::max(0L, -b.e);
	for (const auto& p : num_polys)
		if (auto pv = p.valuation()) depth += std::max(0L, -*pv);
	depth += std::max(0L, -shift);
	long W = prec + 2 * depth + 2;
	LaurentSeries acc = LaurentSeries::one(W);
	for (const auto& b : num_binoms) {
		if (is_zero_binom(b)) continue; /* cancelled against a denominator zero */
		acc = acc.mul_binomial(b.e, b.s);
	}
	for (const auto& b : den_binoms) {
		if (is_zero_binom(b)) continue;
		acc = acc.div_binomial(b.e, b.s);
	}
	for (const auto& p : num_polys) acc = (acc * p).truncated(acc.prec());
	acc = acc.shifted(shift);
	if (sign * *orient < 0) acc = -acc;
	return acc.truncated(prec);
}

Family family_from_string(const std::string& s) {
	if (s == "J10") return Family::J10;
	if (s == "J11") return Family::J11;
	if (s == "J12_0" || s == "J12,0") return Family::J12_0;
	if (s == "J12_2" || s == "J12,2") return Family::J12_2;
	throw BadParameter("unknown WZ family: " + s);
}

std::string to_string(Family f) {
	switch (f) {
		case Family::J10: return "J10";
		case Family::J11: return "J11";
		case Family::J12_0: return "J12_0";
		case Family::J12_2: return "J12_2";
	}
	return "?";
}

kr::JFamily j_family(Family f) {
	switch (f) {
		case Family::J10: return kr::JFamily::J10;
		case Family::J11: return kr::JFamily::J11;
		case Family::J12_0: return kr::JFamily::J12_0;
		case Family::J12_2: return kr::JFamily::J12_2;
	}
	throw BadParameter("unknown WZ family");
}

QFactored f_term(Family fam, long k, long M) {
	QFactored f;
	switch (fam) {
		case Family::J10:
			f.shift = 3 * k * (k + 1) / 2;
			f.mul_poch_finite(1, 1, 2 * M + k, -1, true);
			break;
		case Family::J11:
			f.shift = k * (3 * k + 1) / 2;
			f.mul_poch_finite(1, 1, 2 * M + k + 1, -1, true);
			break;
		case Family::J12_0:
			f.shift = k * (3 * k - 1) / 2;
			f.mul_poch_finite(1, 1, 2 * M + k, -1, true);
			break;
		case Family::J12_2:
			f.shift = k * (3 * k + 3) / 2;
			f.mul_poch_finite(1, 1, 2 * M + k + 2, -1, true);
			break;
	}
	f.mul_poch_finite(2, 2, M - k, +1, true);
	f.mul_poch_finite(3, 3, k, +1, true);
	return f;
}

QFactored g_cert(Family fam, long k, long M) {
	QFactored g = f_term(fam, k, M);
	g.num_binoms.push_back({3 * k, -1, +1}); /* (1 - q^{3k}), exponent grows with k */
	LaurentSeries P = LaurentSeries::zero(LaurentSeries::kInfPrec);
	switch (fam) {
		case Family::J10:
			g.shift += 6;
			P = mono(1, 4 * M + 2) - mono(1, 4 * M + 3 * k - 1) - mono(1, 4 * M + 3 * k) -
			    mono(1, 6 * M + 4 * k + 2) + mono(1, 6 * M + k + 3) + mono(1, 6 * M + k + 4) +
			    mono(1, 8 * M + 2 * k + 6) - mono(1, 8 * M + 2 * k + 8);
			g.den_binoms.push_back({2 * M + k + 3, +1, +1});
			g.den_binoms.push_back({2 * M + k + 2, +1, +1});
			g.den_binoms.push_back({2 * M + k + 1, +1, +1});
			g.mul_monomial_diff(2 * k, 2 * M + 2, true, +1);
			g.mul_monomial_diff(2 * M + 4, 2 * k, true, -1);
			break;
		case Family::J11:
			g.shift += 7;
			P = mono(1, 4 * M + 1) - mono(1, 4 * M + 3 * k) - mono(1, 4 * M + 3 * k + 2) -
			    mono(1, 6 * M + 4 * k + 4) + mono(1, 6 * M + k + 4) + mono(1, 6 * M + k + 5) +
			    mono(1, 8 * M + 2 * k + 8) - mono(1, 8 * M + 2 * k + 10);
			g.den_binoms.push_back({2 * M + k + 4, +1, +1});
			g.den_binoms.push_back({2 * M + k + 3, +1, +1});
			g.den_binoms.push_back({2 * M + k + 2, +1, +1});
			g.mul_monomial_diff(2 * k, 2 * M + 2, true, +1);
			g.mul_monomial_diff(2 * M + 4, 2 * k, true, -1);
			break;
		case Family::J12_0:
			g.shift += 10;
			P = mono(1, 2 * M + 2 * k - 6) - mono(1, 2 * M + 2 * k - 4) + mono(1, 4 * M) -
			    mono(1, 4 * M + 3 * k - 2) - mono(1, 4 * M + 3 * k - 1) + mono(1, 6 * M + k + 2) +
			    mono(1, 6 * M + k + 3) - mono(1, 6 * M + 4 * k);
			g.den_binoms.push_back({2 * M + k + 3, +1, +1});
			g.den_binoms.push_back({2 * M + k + 2, +1, +1});
			g.den_binoms.push_back({2 * M + k + 1, +1, +1});
			g.mul_monomial_diff(2 * k, 2 * M + 2, true, +1);
			g.mul_monomial_diff(2 * M + 4, 2 * k, true, -1);
			break;
		case Family::J12_2:
			g.shift += 6;
			P = mono(1, 4 * M + 2) - mono(1, 4 * M + 3 * k + 3) - mono(1, 4 * M + 3 * k + 4) +
			    mono(1, 6 * M + k + 6) + mono(1, 6 * M + k + 7) - mono(1, 6 * M + 4 * k + 8);
			g.den_binoms.push_back({2 * M + k + 5, +1, +1});
			g.den_binoms.push_back({2 * M + k + 4, +1, +1});
			g.den_binoms.push_back({2 * M + k + 3, +1, +1});
			g.mul_monomial_diff(2 * M + 2, 2 * k, true, -1);
			g.mul_monomial_diff(2 * k, 2 * M + 4, true, +1);
			break;
	}
	g.num_polys.push_back(std::move(P));
	return g;
}

WZCoeffs wz_coeffs(Family fam, long M) {
	auto binom2 = [](long e1, long e2) {
		return ((LaurentSeries::one() - mono(1, e1)) * (LaurentSeries::one() - mono(1, e2)));
	};
	switch (fam) {
		case Family::J10:
			return {binom2(6 * M + 10, 6 * M + 12),
			        LaurentSeries::one() + mono(1, 2) - mono(1, 6 * M + 7) - mono(1, 6 * M + 11),
			        mono(1, 2)};
		case Family::J11:
			return {binom2(6 * M + 12, 6 * M + 14),
			        LaurentSeries::one() + mono(1, 2) - mono(1, 6 * M + 9) - mono(1, 6 * M + 13),
			        mono(1, 2)};
		case Family::J12_0:
			return {binom2(6 * M + 10, 6 * M + 12),
			        LaurentSeries::one() + mono(1, 4) - mono(1, 6 * M + 9) - mono(1, 6 * M + 11),
			        mono(1, 4)};
		case Family::J12_2:
			return {binom2(6 * M + 12, 6 * M + 16),
			        LaurentSeries::one() + mono(1, 2) - mono(1, 6 * M + 11) - mono(1, 6 * M + 13),
			        mono(1, 2)};
	}
	throw BadParameter("unknown WZ family");
}

LaurentSeries j_sum_prefactor(Family fam) {
	switch (fam) {
		case Family::J10:
		case Family::J12_0: return LaurentSeries::one();
		case Family::J11: return LaurentSeries::one() + mono(1, 1);
		case Family::J12_2:
			return (LaurentSeries::one() + mono(1, 1)) * (LaurentSeries::one() + mono(1, 2));
	}
	throw BadParameter("unknown WZ family");
}

VerificationReport check_telescoping(Family fam, long k_max, long M_max, long qprec) {
	auto t0 = Clock::now();
	VerificationReport rep = VerificationReport::pass("WZ:" + to_string(fam) + ":telescoping", qprec);
	rep.detail = "0<=k<=" + std::to_string(k_max) + ", 0<=M<=" + std::to_string(M_max);
	std::map<std::pair<long, long>, LaurentSeries> fcache;
	auto f_at = [&](long k, long M) {
		auto key = std::make_pair(k, M);
		auto it = fcache.find(key);
		if (it == fcache.end()) it = fcache.emplace(key, f_term(fam, k, M).eval(qprec)).first;
		return it->second;
	};
	for (long M = 0; M <= M_max && rep.passed; ++M) {
		/* g(0,M) = 0 exactly: the (1 - q^{3k}) factor vanishes at k = 0 */
		if (g_cert(fam, 0, M).valuation().has_value()) {
			rep.passed = false;
			rep.detail = "g(0," + std::to_string(M) + ") is not exactly zero";
			break;
		}
		for (long k = 0; k <= k_max && rep.passed; ++k) {
			try {
				QFactored gk = g_cert(fam, k, M);
				QFactored gk1 = g_cert(fam, k + 1, M);
				auto all_above = [&](const QFactored& x) {
					auto v = x.valuation();
					return !v || *v >= qprec;
				};
				auto fval = [&](long kk, long MM) {
					auto v = f_term(fam, kk, MM).valuation();
					return !v || *v >= qprec;
				};
				if (all_above(gk) && all_above(gk1) && fval(k, M) && fval(k, M + 1) && fval(k, M + 2))
					continue; /* every participant is 0 below qprec */
				WZCoeffs c = wz_coeffs(fam, M);
				LaurentSeries lhs = (c.c2 * f_at(k, M + 2)).truncated(qprec) -
				                    (c.c1 * f_at(k, M + 1)).truncated(qprec) +
				                    (c.c0 * f_at(k, M)).truncated(qprec);
				LaurentSeries rhs = gk1.eval(qprec) - gk.eval(qprec);
				if (auto mm = lhs.first_mismatch(rhs, qprec))
					rep.note_mismatch(*mm, "cell k=" + std::to_string(k) + ", M=" + std::to_string(M));
			} catch (const NonUnitLeading& e) {
				rep.passed = false;
				rep.detail = "structural cancellation failure at k=" + std::to_string(k) +
				             ", M=" + std::to_string(M) + ": " + e.what();
			}
		}
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

VerificationReport check_summed_recurrence(Family fam, long M_max, long qprec) {
	auto t0 = Clock::now();
	VerificationReport rep = VerificationReport::pass("WZ:" + to_string(fam) + ":summed", qprec);
	rep.detail = "0<=M<=" + std::to_string(M_max);
	LaurentSeries pre = j_sum_prefactor(fam);
	/* S_M = sum_k f(k,M): finite, f vanishes for k > M */
	std::vector<LaurentSeries> S;
	for (long M = 0; M <= M_max; ++M) {
		LaurentSeries acc = LaurentSeries::zero(qprec);
		for (long k = 0; k <= M; ++k) {
			auto v = f_term(fam, k, M).valuation();
			if (v && *v < qprec) acc += f_term(fam, k, M).eval(qprec);
		}
		S.push_back(std::move(acc));
	}
	for (long M = 0; M <= M_max && rep.passed; ++M) {
		LaurentSeries want = kr::j_coeff(j_family(fam), M, qprec);
		LaurentSeries got = (pre * S[static_cast<size_t>(M)]).truncated(qprec);
		if (auto mm = got.first_mismatch(want, qprec))
			rep.note_mismatch(*mm, "j-sum relation at M=" + std::to_string(M));
	}
	/* Telescoped: the recurrence combination of the complete k-sums collapses
	 * to g(M+1, M-2) = 0 exactly, so it must vanish identically. */
	for (long M = 2; M <= M_max && rep.passed; ++M) {
		WZCoeffs c = wz_coeffs(fam, M - 2);
		LaurentSeries comb = (c.c2 * S[static_cast<size_t>(M)]).truncated(qprec) -
		                     (c.c1 * S[static_cast<size_t>(M - 1)]).truncated(qprec) +
		                     (c.c0 * S[static_cast<size_t>(M - 2)]).truncated(qprec);
		if (auto mm = comb.first_mismatch(LaurentSeries::zero(qprec), qprec))
			rep.note_mismatch(*mm, "collapsed recurrence at M=" + std::to_string(M));
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

VerificationReport check_vanishing_tail(Family fam, long M, long k_lo, long k_hi, long qprec) {
	auto t0 = Clock::now();
	VerificationReport rep =
	    VerificationReport::pass("WZ:" + to_string(fam) + ":tail:M=" + std::to_string(M), qprec);
	if (g_cert(fam, 0, M).valuation().has_value()) {
		rep.passed = false;
		rep.detail = "g(0,M) != 0";
		rep.elapsed_ms = ms_since(t0);
		return rep;
	}
	long prev_val = 0;
	bool has_prev = false;
	bool reached = false;
	for (long k = std::max(1L, k_lo); k <= k_hi; ++k) {
		auto v = g_cert(fam, k, M).valuation();
		if (!v) { /* exactly zero: treat as +infinity, which ends the finite ramp */
			reached = true;
			has_prev = false;
			continue;
		}
		if (has_prev && *v <= prev_val) {
			rep.passed = false;
			rep.detail = "valuation not increasing at k=" + std::to_string(k);
			break;
		}
		/* quadratic floor: val >= 3k(k-1)/2 - (4M + 2k + 14) */
		if (*v < 3 * k * (k - 1) / 2 - (4 * M + 2 * k + 14)) {
			rep.passed = false;
			rep.detail = "valuation below the quadratic floor at k=" + std::to_string(k);
			break;
		}
		if (*v >= qprec) reached = true;
		prev_val = *v;
		has_prev = true;
	}
	if (rep.passed && !reached) {
		rep.passed = false;
		rep.detail = "valuation never reached qprec on the checked tail";
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

}  // namespace wz
}  // namespace qrv
