#include "qrv/kr.hpp"

#include <algorithm>
#include <cmath>

namespace qrv {
namespace kr {

namespace {

struct ALin {
	long ai, aj, ak;
};

ALin a_poly(const HSeriesParams& p) {
	switch (p.ell) {
		case 1: return {1, 6, 6};
		case 2: return {2, 2, 6};
		case 3: return {4, 6, 12};
		case 4: return {1, 3, 3};
		case 5: return {2, -1, 3};
		case 6: return {1, 0, 0};
		case 7: return {2, 4, 6};
		case 8: return {1, 1, 3};
		case 9: return {3, 5, 9};
		case 10: return {1, 2, 4};
		case 11: return {2, 4, 5};
		default: return {p.ai, p.aj, p.ak};
	}
}

bool is_half_family(const HSeriesParams& p) { return p.ell == 10 || p.ell == 11; }

/* Exponent of the (i,j,k) term, N = i+2j+3k. */
long term_exp(const HSeriesParams& p, long i, long j, long k) {
	ALin a = a_poly(p);
	long n = i + 2 * j + 3 * k;
	long A = a.ai * i + a.aj * j + a.ak * k;
	if (is_half_family(p)) return n * (n - 1) / 2 + j * j + A;
	return n * (n - 1) + 3 * k * k + A;
}

long min_component_exp(const HSeriesParams& p, long n_max) {
	long m = 0;
	for (long k = 0; 3 * k <= n_max; ++k)
		for (long j = 0; 2 * j + 3 * k <= n_max; ++j)
			for (long n = 2 * j + 3 * k; n <= n_max; ++n)
				m = std::min(m, term_exp(p, n - 2 * j - 3 * k, j, k));
	return m;
}

/* Summation cutoff for x = q^s evaluations: complete below qprec. Uses the
 * conservative per-unit slope bound plus, for the quadratic family, the
 * N^2 - 4N floor. */
long x1_cutoff(const HSeriesParams& p, long qprec) {
	ALin a = a_poly(p);
	long c = std::max({0L, -a.ai, -a.aj, -a.ak});
	bool half = is_half_family(p);
	long n = 1;
	auto lb = [&](long v) { return (half ? v * (v - 1) / 2 : v * (v - 1)) - c * v; };
	while (lb(n) < qprec) ++n;
	if (!half) {
		long n2 = 1;
		while (n2 * n2 - 4 * n2 < qprec) ++n2;
		n = std::max(n, n2);
	}
	return n;
}

/* Components 0..n_max of the triple sum, each at working precision W and
 * without outer q-monomials applied. Separating the j-sum
 *   S(m) = sum_j q^{(j^2+)vj*j} Tj(j) Ti(m-2j)
 * turns the triple sum into two layers of single convolutions. */
std::vector<LaurentSeries> triple_components(const HSeriesParams& p, long n_max, long W) {
	ALin a = a_poly(p);
	bool half = is_half_family(p);
	long vj = a.aj - 2 * a.ai;
	long vk = a.ak - 3 * a.ai;
	PochRecipTable Ti(1, 1, W);
	PochRecipTable Tj(half ? 2 : 4, half ? 2 : 4, W);
	PochRecipTable Tk(half ? 3 : 6, half ? 3 : 6, W);
	std::vector<LaurentSeries> S;
	S.reserve(static_cast<size_t>(n_max) + 1);
	for (long m = 0; m <= n_max; ++m) {
		LaurentSeries acc = LaurentSeries::zero(W);
		for (long j = 0; 2 * j <= m; ++j) {
			long e = vj * j + (half ? j * j : 0);
			acc += (Tj(j) * Ti(m - 2 * j)).truncated(W).shifted(e).truncated(W);
		}
		S.push_back(std::move(acc));
	}
	std::vector<LaurentSeries> comps;
	comps.reserve(static_cast<size_t>(n_max) + 1);
	for (long n = 0; n <= n_max; ++n) {
		LaurentSeries acc = LaurentSeries::zero(W);
		for (long k = 0; 3 * k <= n; ++k) {
			long e = vk * k + (half ? 0 : 3 * k * k);
			LaurentSeries t = (Tk(k) * S[static_cast<size_t>(n - 3 * k)]).truncated(W).shifted(e)
			                      .truncated(W);
			if (!half && (k % 2) == 1) t = -t;
			acc += t;
		}
		comps.push_back(std::move(acc));
	}
	return comps;
}

/* Outer monomial exponent of component N: N(N-1)[/2] + ai*N. */
long outer_exp(const HSeriesParams& p, long n) {
	ALin a = a_poly(p);
	return (is_half_family(p) ? n * (n - 1) / 2 : n * (n - 1)) + a.ai * n;
}

/* Smallest n beyond which every listed (base, step) ladder has climbed
 * past q^0 and term valuations can only grow. */
long sum_burn_in(std::initializer_list<std::pair<long, long>> ladders) {
	long n1 = 1;
	for (auto [e, step] : ladders)
		while (e + step * (n1 - 1) < 1) ++n1;
	return n1;
}

/* Total negative depth of a (base, step) factor ladder. */
long ladder_depth(long base, long step) {
	long d = 0;
	for (long e = base; e < 0; e += step) d += -e;
	return d;
}

}  // namespace

HSeriesParams HSeriesParams::raw(long ai, long aj, long ak) {
	if (std::max({std::labs(ai), std::labs(aj), std::labs(ak)}) > 12)
		throw BadParameter("raw H series: |coefficients| must be <= 12");
	return {0, ai, aj, ak};
}

HSeriesParams HSeriesParams::catalog_checked(int ell) {
	if (ell < 1 || ell > 11) throw BadParameter("H series index must be 1..11");
	return catalog(ell);
}

BivariateSeries H(const HSeriesParams& params, long xcap, long qprec, long extra_terms) {
	(void)extra_terms; /* components are finite sums; no cutoff is involved */
	long slack = std::max(0L, -min_component_exp(params, xcap));
	long W = qprec + slack;
	auto comps = triple_components(params, xcap, W);
	BivariateSeries out(xcap, qprec);
	for (long n = 0; n <= xcap; ++n)
		out.set(n, comps[static_cast<size_t>(n)].shifted(outer_exp(params, n)).truncated(qprec));
	return out;
}

LaurentSeries H_at_x_qpow(const HSeriesParams& params, long s, long qprec, long extra_terms) {
	long n_max = x1_cutoff(params, qprec) + extra_terms;
	long slack = std::max(0L, -min_component_exp(params, n_max));
	long W = qprec + slack;
	auto comps = triple_components(params, n_max, W);
	LaurentSeries acc = LaurentSeries::zero(W);
	for (long n = 0; n <= n_max; ++n)
		acc += comps[static_cast<size_t>(n)].shifted(outer_exp(params, n) + s * n).truncated(W);
	return acc.truncated(qprec);
}

std::vector<LaurentSeries> h_cd_row(long two_c, long d, long N_max, long qprec) {
	long min_e = 0;
	for (long k = 0; 3 * k <= N_max; ++k)
		for (long j = 0; 2 * j + 3 * k <= N_max; ++j)
			min_e = std::min(min_e, 3 * k * k + (two_c - 1) * j + 3 * d * k);
	long W = qprec + std::max(0L, -min_e);
	PochRecipTable Ti(1, 1, W), Tj(4, 4, W), Tk(6, 6, W);
	std::vector<LaurentSeries> S;
	for (long m = 0; m <= N_max; ++m) {
		LaurentSeries acc = LaurentSeries::zero(W);
		for (long j = 0; 2 * j <= m; ++j)
			acc += (Tj(j) * Ti(m - 2 * j)).truncated(W).shifted((two_c - 1) * j).truncated(W);
		S.push_back(std::move(acc));
	}
	std::vector<LaurentSeries> row;
	for (long n = 0; n <= N_max; ++n) {
		LaurentSeries acc = LaurentSeries::zero(W);
		for (long k = 0; 3 * k <= n; ++k) {
			LaurentSeries t =
			    (Tk(k) * S[static_cast<size_t>(n - 3 * k)]).truncated(W)
			        .shifted(3 * k * k + 3 * d * k).truncated(W);
			if ((k % 2) == 1) t = -t;
			acc += t;
		}
		row.push_back(acc.truncated(qprec));
	}
	return row;
}

LaurentSeries h_cd(const HCDParams& p, long qprec) {
	if (p.N < 0) return LaurentSeries::zero(qprec);
	return h_cd_row(p.two_c, p.d, p.N, qprec).back();
}

HStructure h_structure(int ell) {
	switch (ell) {
		case 1: return {5, 1, 0};
		case 2: return {-1, 0, 1};
		case 3: return {-1, 0, 3};
		case 4: return {2, 0, 0};
		case 5: return {-4, -1, 1};
		case 6: return {-1, -1, 0};
		case 7: return {1, 0, 1};
		case 8: return {0, 0, 0};
		case 9: return {0, 0, 2};
		default: throw BadParameter("h_structure: ell must be 1..9");
	}
}

BivariateSeries J5(long xcap, long qprec) {
	BivariateSeries h5 = H(HSeriesParams::catalog(5), xcap, qprec + 3);
	BivariateSeries x_q3 = BivariateSeries::zero(xcap, qprec + 3);
	x_q3.set(1, LaurentSeries::monomial(1, 3));
	return (h5 - h5.substitute_x_qpow(2).mul_poly(x_q3)).truncated_to(qprec);
}

BivariateSeries J8(long xcap, long qprec) {
	BivariateSeries h8 = H(HSeriesParams::catalog(8), xcap, qprec + 1);
	BivariateSeries x_q = BivariateSeries::zero(xcap, qprec + 1);
	x_q.set(1, LaurentSeries::monomial(1, 1));
	return (h8 - h8.substitute_x_qpow(2).mul_poly(x_q)).truncated_to(qprec);
}

LaurentSeries J5_at_x1(long qprec) {
	HSeriesParams p5 = HSeriesParams::catalog(5);
	long xcap = x1_cutoff(p5, qprec) + 2;
	return J5(xcap, qprec).eval_x1();
}

LaurentSeries J8_at_x1(long qprec) {
	HSeriesParams p8 = HSeriesParams::catalog(8);
	long xcap = x1_cutoff(p8, qprec) + 2;
	return J8(xcap, qprec).eval_x1();
}

namespace {

struct JShape {
	long poch_base;   /* (-q^{base};q)_{2j+3k} */
	long cj, ck;      /* linear exponent coefficients on j and k */
	long lin;         /* q-exponent of x^{2M} is 3M^2 + lin*M */
	long kquad_a, kquad_b; /* k-sum exponent k(kquad_a*k + kquad_b)/2 */
};

JShape j_shape(JFamily fam) {
	switch (fam) {
		case JFamily::J10: return {1, 2, 4, 1, 3, 3};
		case JFamily::J11: return {2, 4, 5, 3, 3, 1};
		case JFamily::J12_0: return {1, 2, 2, 1, 3, -1};
		case JFamily::J12_2: return {3, 6, 8, 5, 3, 3};
		case JFamily::J12_3: return {4, 8, 11, 7, 3, 5};
	}
	throw BadParameter("unknown J family");
}

}  // namespace

long j_qexp(JFamily fam, long M) { return 3 * M * M + j_shape(fam).lin * M; }

BivariateSeries J_even(JFamily fam, long xcap, long qprec) {
	JShape sh = j_shape(fam);
	PochRecipTable Tm(sh.poch_base, 1, qprec, -1), T2(2, 2, qprec), T3(3, 3, qprec);
	BivariateSeries out(xcap, qprec);
	for (long M = 0; 2 * M <= xcap; ++M) {
		LaurentSeries acc = LaurentSeries::zero(qprec);
		for (long k = 0; k <= M; ++k) {
			long j = M - k;
			long m = 2 * j + 3 * k;
			long e = m * (m - 1) / 2 + j * j + sh.cj * j + sh.ck * k;
			if (e >= qprec) continue;
			acc += (Tm(m) * T2(j)).truncated(qprec).shifted(e).truncated(qprec) * T3(k);
		}
		out.set(2 * M, acc.truncated(qprec));
	}
	return out;
}

LaurentSeries J_at_x1(JFamily fam, long qprec) {
	JShape sh = j_shape(fam);
	long M_max = 0;
	while (3 * M_max * M_max + sh.lin * M_max < qprec) ++M_max;
	BivariateSeries f = J_even(fam, 2 * M_max, qprec);
	return f.eval_x1();
}

LaurentSeries j_coeff(JFamily fam, long M, long qprec) {
	if (M < 0) return LaurentSeries::zero(qprec);
	JShape sh = j_shape(fam);
	PochRecipTable Tm(sh.poch_base, 1, qprec, -1), T2(2, 2, qprec), T3(3, 3, qprec);
	LaurentSeries acc = LaurentSeries::zero(qprec);
	for (long k = 0; k <= M; ++k) {
		long e = k * (sh.kquad_a * k + sh.kquad_b) / 2;
		if (e >= qprec) break;
		acc += (Tm(2 * M + k) * T2(M - k)).truncated(qprec).shifted(e).truncated(qprec) * T3(k);
	}
	return acc.truncated(qprec);
}

Prop1Result prop1_rhs(long a, long b, long qprec) {
	/* term_n = (q^{3b-6};q^6)_n q^{n^2+(a+1)n} (q^{2b+a-2+4n};q^4)_inf
	 *          / ((q^{b-2};q^2)_n (q^2;q^2)_n), tail absorbed termwise. */
	long quad_dip = (a + 1 < 0) ? ((a + 1) * (a + 1) + 3) / 4 : 0;
	long slack = 2 + ladder_depth(3 * b - 6, 6) + ladder_depth(2 * b + a - 2, 4) + quad_dip;
	long W = qprec + slack;
	PochRecipTable Tb(b - 2, 2, W), T2(2, 2, W);
	long n1 = sum_burn_in({{3 * b - 6, 6}, {b - 2, 2}, {2 * b + a - 2, 4}}) +
	          std::max(0L, -(a + 1)) + 1;
	LaurentSeries acc = LaurentSeries::zero(W);
	for (long n = 0;; ++n) {
		LaurentSeries t = poch(PochhammerSpec::finite(3 * b - 6, 6, n), W);
		t = (t * poch(PochhammerSpec::infinite(2 * b + a - 2 + 4 * n, 4), W)).truncated(W);
		t = (t * Tb(n)).truncated(W) * T2(n);
		t = t.shifted(n * n + (a + 1) * n).truncated(W);
		auto val = t.valuation();
		if (n >= n1 && (!val || *val >= qprec)) break;
		acc += t;
	}
	Prop1Result r{acc.truncated(qprec), std::nullopt};
	if (a == 0) {
		std::vector<ProductFactor> fs = {{PochhammerSpec::infinite(3 * b, 12), +1},
		                                 {PochhammerSpec::infinite(2, 4), -1},
		                                 {PochhammerSpec::infinite(b, 4), -1}};
		r.closed_product = product_side(fs, qprec);
	}
	return r;
}

LaurentSeries prop1_remark_sum(long b, long qprec) {
	if (2 * b - 2 == 0) throw BadParameter("prop1 remark sum degenerates at b = 1");
	long W = qprec + 2 + ladder_depth(3 * b - 6, 6) + ladder_depth(2 * b - 2, 4);
	PochRecipTable Tb(b - 2, 2, W), T2(2, 2, W), T4(2 * b - 2, 4, W);
	long n1 = sum_burn_in({{3 * b - 6, 6}, {b - 2, 2}, {2 * b - 2, 4}}) + 1;
	LaurentSeries acc = LaurentSeries::zero(W);
	for (long n = 0;; ++n) {
		LaurentSeries t = poch(PochhammerSpec::finite(3 * b - 6, 6, n), W);
		t = (t * Tb(n)).truncated(W) * T2(n);
		t = (t * T4(n)).truncated(W).shifted(n * n + n).truncated(W);
		auto val = t.valuation();
		if (n >= n1 && (!val || *val >= qprec)) break;
		acc += t;
	}
	return acc.truncated(qprec);
}

LaurentSeries prop1_remark_product(long b, long qprec) {
	std::vector<ProductFactor> fs = {{PochhammerSpec::infinite(3 * b, 12), +1},
	                                 {PochhammerSpec::infinite(2, 4), -1},
	                                 {PochhammerSpec::infinite(b, 4), -1},
	                                 {PochhammerSpec::infinite(2 * b - 2, 4), -1}};
	return product_side(fs, qprec);
}

namespace {

/* One of the two sums in Prop. 2's conclusion, as coefficients of x^{2n}. */
std::vector<LaurentSeries> prop2_sum_coeffs(long a, long b, long c, long off, long n_cap, long W) {
	/* off = -5 for the alpha_0 sum (denominators (q^6, q^{a+6};q^6)_n),
	 * off = -2 for the alpha_1 sum (denominators (q^9, q^{a+9};q^6)_n). */
	long den0 = (off == -5) ? 6 : 9;
	PochRecipTable T6(den0, 6, W), Ta(a + den0, 6, W);
	std::vector<LaurentSeries> out;
	for (long n = 0; n <= n_cap; ++n) {
		LaurentSeries t = poch(PochhammerSpec::finite(b + off, 6, n), W);
		t = (t * poch(PochhammerSpec::finite(c + off, 6, n), W)).truncated(W);
		t = (t * T6(n)).truncated(W) * Ta(n);
		t = t.shifted(5 * n).truncated(W);
		if ((n % 2) == 1) t = -t;
		out.push_back(std::move(t));
	}
	return out;
}

long prop2_depth(long a, long b, long c) {
	long d = 0;
	for (long e : {b - 5, c - 5, b - 2, c - 2})
		for (long x = e; x < 0; x += 6) d += -x;
	(void)a;
	return d;
}

}  // namespace

BivariateSeries prop2_rhs(long a, long b, long c, long alpha0, long alpha1, long xcap2,
                          long qprec) {
	if (a <= -6 && (a % 3) == 0) throw BadParameter("prop2 requires a not in 3Z when a <= -6");
	long W = qprec + 2 * prop2_depth(a, b, c) + 4;
	BivariateSeries out(xcap2, qprec);
	if (alpha0 != 0) {
		auto s = prop2_sum_coeffs(a, b, c, -5, xcap2 / 2, W);
		for (long n = 0; 2 * n <= xcap2; ++n)
			out.add_to(2 * n, s[static_cast<size_t>(n)].scaled(alpha0).truncated(qprec));
	}
	if (alpha1 != 0) {
		auto t = prop2_sum_coeffs(a, b, c, -2, (xcap2 - 1) / 2, W);
		for (long n = 0; 2 * n + 1 <= xcap2; ++n)
			out.add_to(2 * n + 1, t[static_cast<size_t>(n)].scaled(alpha1).truncated(qprec));
	}
	/* (-x^2 q^5; q^6)_inf */
	for (long i = 0; 5 + 6 * i < qprec; ++i) {
		BivariateSeries f(xcap2, qprec);
		f.set(0, LaurentSeries::one(qprec));
		f.set(2, LaurentSeries::monomial(1, 5 + 6 * i, qprec));
		out = out.mul_poly(f);
	}
	return out;
}

LaurentSeries prop2_rhs_at_x1(long a, long b, long c, long alpha0, long alpha1, long qprec) {
	long depth = prop2_depth(a, b, c);
	long xcap2 = 2 * ((qprec + depth) / 5 + 2);
	return prop2_rhs(a, b, c, alpha0, alpha1, xcap2, qprec).eval_x1();
}

LaurentSeries thm2_rhs(Thm2 which, long qprec) {
	long W = qprec + 24;
	PochRecipTable T2(2, 2, W);
	LaurentSeries acc = LaurentSeries::zero(W);
	switch (which) {
		case Thm2::H4: {
			PochRecipTable T1(1, 2, W), T4(3, 4, W);
			for (long n = 0; n * n < qprec; ++n) {
				LaurentSeries t = poch(PochhammerSpec::finite(3, 6, n), W);
				t = (t * T1(n)).truncated(W) * T2(n);
				t = (t * T4(n)).truncated(W).shifted(n * n).truncated(W);
				acc += t;
			}
			return (acc * poch(PochhammerSpec::infinite(3, 4), W)).truncated(qprec);
		}
		case Thm2::H9: {
			PochRecipTable T1(1, 2, W), T4(5, 4, W);
			for (long n = 0; n * n + 2 * n < qprec; ++n) {
				LaurentSeries t = poch(PochhammerSpec::finite(3, 6, n), W);
				t = (t * T1(n)).truncated(W) * T2(n);
				t = (t * T4(n)).truncated(W).shifted(n * n + 2 * n).truncated(W);
				acc += t;
			}
			return (acc * poch(PochhammerSpec::infinite(5, 4), W)).truncated(qprec);
		}
		case Thm2::H5: {
			PochRecipTable T1(-1, 2, W), T4(3, 4, W);
			for (long n = 0; n * n + 4 * n - 4 < qprec; ++n) {
				LaurentSeries t = poch(PochhammerSpec::finite(-3, 6, n), W);
				LaurentSeries pre = LaurentSeries::one() + LaurentSeries::monomial(1, 2 * n - 4) +
				                    LaurentSeries::monomial(1, 2 * n - 1);
				t = (t * pre).truncated(W);
				t = (t * T1(n)).truncated(W) * T2(n);
				t = (t * T4(n)).truncated(W).div_binomial(2 * n + 2, -1);
				t = t.shifted(n * n + 4 * n + 3).truncated(W);
				acc += t;
			}
			acc = (acc * poch(PochhammerSpec::infinite(3, 4), W)).truncated(W);
			acc += poch(PochhammerSpec::infinite(-1, 4), W);
			return acc.truncated(qprec);
		}
		case Thm2::H8: {
			PochRecipTable T1(1, 2, W), T4(5, 4, W);
			for (long n = 0; n * n + 2 * n < qprec; ++n) {
				LaurentSeries t = poch(PochhammerSpec::finite(3, 6, n), W);
				LaurentSeries pre = LaurentSeries::one() + LaurentSeries::monomial(1, 2 * n) +
				                    LaurentSeries::monomial(1, 2 * n + 1);
				t = (t * pre).truncated(W);
				t = (t * T1(n)).truncated(W) * T2(n);
				t = (t * T4(n)).truncated(W).div_binomial(2 * n + 2, -1);
				t = t.shifted(n * n + 2 * n + 1).truncated(W);
				acc += t;
			}
			acc = (acc * poch(PochhammerSpec::infinite(5, 4), W)).truncated(W);
			acc += poch(PochhammerSpec::infinite(1, 4), W);
			return acc.truncated(qprec);
		}
	}
	throw BadParameter("unknown Theorem 2 case");
}

BivariateSeries sec6_sum(long xcap, long qprec) {
	return H(HSeriesParams::raw(1, -3, -3), xcap, qprec);
}

LaurentSeries sec6_sum_at_x1(long qprec) {
	return H_at_x1(HSeriesParams::raw(1, -3, -3), qprec);
}

LaurentSeries sec5_lhs_via_euler(long qprec) {
	LaurentSeries a = (poch(PochhammerSpec::infinite(1, 1, -1), qprec) * J_at_x1(JFamily::J12_0, qprec))
	                      .truncated(qprec);
	LaurentSeries b = (poch(PochhammerSpec::infinite(3, 1, -1), qprec) * J_at_x1(JFamily::J12_2, qprec))
	                      .truncated(qprec).shifted(2).truncated(qprec);
	LaurentSeries c = (poch(PochhammerSpec::infinite(4, 1, -1), qprec) * J_at_x1(JFamily::J12_3, qprec))
	                      .truncated(qprec).shifted(5).truncated(qprec);
	return (a + b - c).truncated(qprec);
}

LaurentSeries sec5_lhs_triple_sum(long qprec) {
	long n_max = 1;
	while (n_max * (n_max - 1) / 2 < qprec) ++n_max;
	PochRecipTable T1(1, 1, qprec), T2(2, 2, qprec), T3(3, 3, qprec);
	/* S(m) = sum_j q^{j^2} Tj(j) Ti(m-2j); exponent i + j^2 + 2j + 2k with
	 * A = (1,2,2), so vj = 0 and vk = -1 relative to the staircase. */
	std::vector<LaurentSeries> S;
	for (long m = 0; m <= n_max; ++m) {
		LaurentSeries acc = LaurentSeries::zero(qprec);
		for (long j = 0; 2 * j <= m; ++j)
			acc += (T2(j) * T1(m - 2 * j)).truncated(qprec).shifted(j * j).truncated(qprec);
		S.push_back(std::move(acc));
	}
	LaurentSeries total = LaurentSeries::zero(qprec);
	for (long n = 0; n <= n_max; ++n) {
		LaurentSeries comp = LaurentSeries::zero(qprec);
		for (long k = 0; 3 * k <= n; ++k)
			comp += (T3(k) * S[static_cast<size_t>(n - 3 * k)]).truncated(qprec).shifted(-k)
			            .truncated(qprec);
		/* prefactor (1 + q^{2n+2} - q^{3n+5}) and staircase q^{n(n-1)/2 + n} */
		LaurentSeries pre = LaurentSeries::one() + LaurentSeries::monomial(1, 2 * n + 2) -
		                    LaurentSeries::monomial(1, 3 * n + 5);
		comp = (comp * pre).truncated(qprec).shifted(n * (n - 1) / 2 + n).truncated(qprec);
		total += comp;
	}
	return total.truncated(qprec);
}

LaurentSeries eqh1final_lhs(long qprec) {
	long W = qprec + 4;
	PochRecipTable Todd(1, 1, W, -1); /* 1/(-q;q)_n */
	PochRecipTable T2m(2, 2, W, -1);  /* 1/(-q^2;q^2)_n */
	PochRecipTable T2(2, 2, W);
	LaurentSeries acc = LaurentSeries::one(W);
	for (long r = 1; r * r + 2 * r < qprec; ++r) {
		/* (-1;q^6)_r / (-1;q)_{2r} = (-q^6;q^6)_{r-1} / (-q;q)_{2r-1} */
		LaurentSeries t = poch(PochhammerSpec::finite(6, 6, r - 1, -1), W);
		t = (t * Todd(2 * r - 1)).truncated(W);
		t = (t * T2m(r)).truncated(W) * T2(r);
		t = t.shifted(r * r + 2 * r).truncated(W);
		if ((r % 2) == 1) t = -t;
		acc += t;
	}
	return acc.truncated(qprec);
}

LaurentSeries eqh1final_rhs(long qprec) {
	std::vector<ProductFactor> fs = {
	    {PochhammerSpec::infinite(1, 2), +1},   {PochhammerSpec::infinite(2, 12), +1},
	    {PochhammerSpec::infinite(10, 12), +1}, {PochhammerSpec::infinite(12, 12), +1},
	    {PochhammerSpec::infinite(2, 2), -1},   {PochhammerSpec::infinite(1, 12), -1},
	    {PochhammerSpec::infinite(11, 12), -1}};
	return product_side(fs, qprec);
}

LaurentSeries ms112_lhs(long qprec) {
	long W = qprec + 4;
	PochRecipTable T2m(2, 2, W, -1); /* 1/(-q^2;q^2)_n */
	PochRecipTable T22(2, 2, W);     /* 1/(q^2;q^2)_n */
	LaurentSeries acc = LaurentSeries::one(W);
	for (long r = 1; r * r + 2 * r < qprec; ++r) {
		/* (-1;q^6)_r / (-1;q^2)_r = (-q^6;q^6)_{r-1} / (-q^2;q^2)_{r-1} */
		LaurentSeries t = poch(PochhammerSpec::finite(6, 6, r - 1, -1), W);
		t = (t * poch(PochhammerSpec::finite(1, 2, r, -1), W)).truncated(W);
		t = (t * T2m(r - 1)).truncated(W);
		t = (t * T22(2 * r)).truncated(W);
		t = t.shifted(r * r + 2 * r).truncated(W);
		acc += t;
	}
	return acc.truncated(qprec);
}

LaurentSeries ms112_rhs(long qprec) {
	std::vector<ProductFactor> fs = {
	    {PochhammerSpec::infinite(1, 2, -1), +1}, {PochhammerSpec::infinite(1, 12), +1},
	    {PochhammerSpec::infinite(11, 12), +1},   {PochhammerSpec::infinite(12, 12), +1},
	    {PochhammerSpec::infinite(10, 24), +1},   {PochhammerSpec::infinite(14, 24), +1},
	    {PochhammerSpec::infinite(2, 2), -1}};
	return product_side(fs, qprec);
}

LaurentSeries ms130_lhs(long qprec) {
	long W = qprec + 2;
	PochRecipTable T1(1, 2, W), T22(2, 2, W);
	LaurentSeries acc = LaurentSeries::zero(W);
	for (long n = 0; n * n + 3 * n < qprec; ++n) {
		LaurentSeries t = poch(PochhammerSpec::finite(2, 2, n, -1), W);
		t = (t * poch(PochhammerSpec::finite(3, 6, n), W)).truncated(W);
		t = (t * T1(n)).truncated(W);
		t = (t * T22(2 * n + 1)).truncated(W);
		t = t.shifted(n * n + 3 * n).truncated(W);
		acc += t;
	}
	return acc.mul_binomial(2, -1).truncated(qprec); /* (1 - q^2) prefactor */
}

LaurentSeries ms130_rhs(long qprec) {
	std::vector<ProductFactor> fs = {
	    {PochhammerSpec::infinite(4, 12), -1}, {PochhammerSpec::infinite(5, 12), -1},
	    {PochhammerSpec::infinite(6, 12), -1}, {PochhammerSpec::infinite(6, 12), -1},
	    {PochhammerSpec::infinite(7, 12), -1}, {PochhammerSpec::infinite(8, 12), -1},
	    {PochhammerSpec::infinite(10, 12), -1}, {PochhammerSpec::infinite(14, 12), -1}};
	return product_side(fs, qprec);
}

}  // namespace kr
}  // namespace qrv
