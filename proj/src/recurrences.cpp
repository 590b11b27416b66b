#include "qrv/recurrences.hpp"

#include <algorithm>
#include <chrono>

namespace qrv {
namespace rec {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
	return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

LaurentSeries mono(long coef, long exp) { return LaurentSeries::monomial(coef, exp); }

void require_family(HRecFamily fam, long two_c, long d) {
	switch (fam) {
		case HRecFamily::LONG: return;
		case HRecFamily::D0:
			if (d != 0) throw ParameterMismatch("D0 recurrence requires d = 0");
			return;
		case HRecFamily::DM1:
			if (d != -1) throw ParameterMismatch("DM1 recurrence requires d = -1");
			return;
		case HRecFamily::CD32:
			if (two_c != 2 * d + 3) throw ParameterMismatch("CD32 recurrence requires 2c = 2d + 3");
			return;
	}
	(void)two_c;
}

long min_exp_of(const std::vector<LaurentSeries>& polys) {
	long m = 0;
	for (const auto& p : polys)
		if (auto v = p.valuation()) m = std::min(m, *v);
	return m;
}

/* The three-term data (A1(N), A2(N), q^a) of E:hgenrec for each family. */
struct GenRec {
	LaurentSeries A1, A2;
	long a;
};
GenRec gen_rec(HRecFamily fam, long two_c, long d, long N) {
	switch (fam) {
		case HRecFamily::D0:
			return {mono(1, 0) + mono(1, 2 * N - 1), mono(1, two_c - 1) + mono(1, 2 * N - 2),
			        two_c - 1};
		case HRecFamily::DM1:
			return {mono(1, 1) + mono(1, 2 * N - 2), mono(1, two_c - 1) + mono(1, 2 * N - 4), two_c};
		case HRecFamily::CD32:
			return {mono(1, 0) + mono(1, 1) - mono(1, d + 1) + mono(1, 2 * N - 1 + d),
			        mono(-1, 1) + mono(1, d + 1) + mono(1, d + 2) + mono(1, 2 * N - 2 + 2 * d), d + 2};
		case HRecFamily::LONG: break;
	}
	throw ParameterMismatch("LONG has no three-term form");
}

}  // namespace

HRecFamily h_rec_family_from_string(const std::string& s) {
	if (s == "LONG") return HRecFamily::LONG;
	if (s == "D0") return HRecFamily::D0;
	if (s == "DM1") return HRecFamily::DM1;
	if (s == "CD32") return HRecFamily::CD32;
	throw ParameterMismatch("unknown recurrence family: " + s);
}

std::string to_string(HRecFamily f) {
	switch (f) {
		case HRecFamily::LONG: return "LONG";
		case HRecFamily::D0: return "D0";
		case HRecFamily::DM1: return "DM1";
		case HRecFamily::CD32: return "CD32";
	}
	return "?";
}

std::vector<LaurentSeries> h_rec_coeffs(HRecFamily fam, long two_c, long d, long N) {
	switch (fam) {
		case HRecFamily::LONG:
			return {mono(1, 0) + mono(1, 1), mono(1, two_c - 1) - mono(1, 1),
			        -(mono(1, two_c - 1) + mono(1, two_c) + mono(1, 2 * N - 3 + 3 * d)),
			        mono(1, two_c)};
		case HRecFamily::D0:
		case HRecFamily::DM1:
		case HRecFamily::CD32: {
			GenRec g = gen_rec(fam, two_c, d, N);
			return {g.A1, g.A2, mono(-1, g.a)};
		}
	}
	throw ParameterMismatch("unknown family");
}

VerificationReport check_h_recurrence(HRecFamily fam, long two_c, long d, long N_max, long qprec) {
	auto t0 = Clock::now();
	require_family(fam, two_c, d);
	long pad = 0;
	for (long N = 0; N <= N_max; ++N) pad = std::max(pad, -min_exp_of(h_rec_coeffs(fam, two_c, d, N)));
	auto row = kr::h_cd_row(two_c, d, N_max, qprec + pad);
	auto at = [&](long N) {
		return N >= 0 ? row[static_cast<size_t>(N)] : LaurentSeries::zero(qprec + pad);
	};
	VerificationReport rep = VerificationReport::pass(
	    "RECUR:" + to_string(fam) + ":c=" + std::to_string(two_c) + "/2,d=" + std::to_string(d),
	    qprec);
	for (long N = 0; N <= N_max; ++N) {
		auto coeffs = h_rec_coeffs(fam, two_c, d, N);
		LaurentSeries lhs = at(N).mul_binomial(2 * N, -1);
		LaurentSeries rhs = LaurentSeries::zero(qprec + pad);
		for (size_t i = 0; i < coeffs.size(); ++i)
			rhs += (coeffs[i] * at(N - 1 - static_cast<long>(i))).truncated(qprec + pad);
		if (auto mm = lhs.first_mismatch(rhs, qprec)) {
			rep.note_mismatch(*mm, "N=" + std::to_string(N));
			break;
		}
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

VerificationReport check_basic_relations(long two_c, long d, long N_max, long qprec) {
	auto t0 = Clock::now();
	/* q^{2c-1} in relation 3 and q^{3d+3} in relation 2 may sit below q^0 */
	long pad = std::max({0L, 1 - two_c, -(3 * d + 3)});
	long W = qprec + pad;
	auto base = kr::h_cd_row(two_c, d, N_max, W);
	auto shift_cd = kr::h_cd_row(two_c - 2, d - 1, N_max, W);
	auto shift_d2 = kr::h_cd_row(two_c, d + 2, N_max, W);
	auto shift_c2 = kr::h_cd_row(two_c + 4, d, N_max, W);
	auto at = [&](const std::vector<LaurentSeries>& r, long N) {
		return N >= 0 ? r[static_cast<size_t>(N)] : LaurentSeries::zero(W);
	};
	VerificationReport rep = VerificationReport::pass(
	    "BASICREL:c=" + std::to_string(two_c) + "/2,d=" + std::to_string(d), qprec);
	for (long N = 0; N <= N_max && rep.passed; ++N) {
		/* h_{c,d,N} - h_{c,d,N-1} = q^N h_{c-1,d-1,N} */
		LaurentSeries l1 = base[static_cast<size_t>(N)] - at(base, N - 1);
		LaurentSeries r1 = at(shift_cd, N).shifted(N).truncated(W);
		if (auto mm = l1.first_mismatch(r1, qprec)) {
			rep.note_mismatch(*mm, "relation 1, N=" + std::to_string(N));
			break;
		}
		/* h_{c,d,N} - h_{c,d+2,N} = -q^{3d+3} h_{c,d+2,N-3} */
		LaurentSeries l2 = base[static_cast<size_t>(N)] - at(shift_d2, N);
		LaurentSeries r2 = -at(shift_d2, N - 3).shifted(3 * d + 3).truncated(W);
		if (auto mm = l2.first_mismatch(r2, qprec)) {
			rep.note_mismatch(*mm, "relation 2, N=" + std::to_string(N));
			break;
		}
		/* h_{c,d,N} - h_{c+2,d,N} = q^{2c-1} h_{c,d,N-2} */
		LaurentSeries l3 = base[static_cast<size_t>(N)] - at(shift_c2, N);
		LaurentSeries r3 = at(base, N - 2).shifted(two_c - 1).truncated(W);
		if (auto mm = l3.first_mismatch(r3, qprec)) {
			rep.note_mismatch(*mm, "relation 3, N=" + std::to_string(N));
			break;
		}
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

VerificationReport check_shift_closure(HRecFamily fam, long two_c, long d, long N_max) {
	auto t0 = Clock::now();
	if (fam == HRecFamily::LONG) throw ParameterMismatch("shift closure applies to D0/DM1/CD32");
	require_family(fam, two_c, d);
	VerificationReport rep = VerificationReport::pass(
	    "SHIFTCLOSURE:" + to_string(fam) + ":c=" + std::to_string(two_c) + "/2,d=" + std::to_string(d),
	    N_max);
	for (long N = 1; N <= N_max && rep.passed; ++N) {
		GenRec g = gen_rec(fam, two_c, d, N);
		GenRec gm = gen_rec(fam, two_c, d, N - 1);
		long e = two_c - g.a; /* q^{2c-a} */
		std::vector<LaurentSeries> iter = {
		    g.A1 + (LaurentSeries::one() - mono(1, 2 * N - 2)).shifted(e),
		    g.A2 - gm.A1.shifted(e),
		    -(mono(1, g.a) + gm.A2.shifted(e)),
		    mono(1, two_c)};
		auto expect = h_rec_coeffs(HRecFamily::LONG, two_c, d, N);
		for (size_t i = 0; i < 4; ++i) {
			if (!(iter[i] - expect[i]).is_zero()) {
				rep.passed = false;
				rep.detail = "coefficient " + std::to_string(i + 1) + " differs at N=" + std::to_string(N);
				break;
			}
		}
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

VerificationReport check_uniqueness(HRecFamily fam, long two_c, long d, long N_max, long qprec) {
	auto t0 = Clock::now();
	require_family(fam, two_c, d);
	long pad = 0;
	for (long N = 0; N <= N_max; ++N) pad = std::max(pad, -min_exp_of(h_rec_coeffs(fam, two_c, d, N)));
	long W = qprec + pad * (N_max + 1);
	auto direct = kr::h_cd_row(two_c, d, N_max, qprec);
	std::vector<LaurentSeries> derived = {LaurentSeries::one(W)};
	VerificationReport rep = VerificationReport::pass(
	    "UNIQUE:" + to_string(fam) + ":c=" + std::to_string(two_c) + "/2,d=" + std::to_string(d),
	    qprec);
	for (long N = 1; N <= N_max; ++N) {
		auto coeffs = h_rec_coeffs(fam, two_c, d, N);
		LaurentSeries rhs = LaurentSeries::zero(W);
		for (size_t i = 0; i < coeffs.size(); ++i) {
			long idx = N - 1 - static_cast<long>(i);
			if (idx < 0) continue;
			rhs += coeffs[i] * derived[static_cast<size_t>(idx)];
		}
		derived.push_back(rhs.div_binomial(2 * N, -1));
		auto cmp = std::min(qprec, derived.back().prec());
		if (auto mm = derived.back().first_mismatch(direct[static_cast<size_t>(N)].truncated(cmp), cmp)) {
			rep.note_mismatch(*mm, "N=" + std::to_string(N));
			break;
		}
		if (cmp < qprec) {
			rep.passed = false;
			rep.detail = "derived precision fell below the requested order at N=" + std::to_string(N);
			break;
		}
	}
	rep.order_checked = qprec;
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

VerificationReport check_functional_equation(const FunctionalEquationSpec& spec, long xcap,
                                             long qprec) {
	auto t0 = Clock::now();
	long pad = 0;
	for (const auto& t : spec.terms)
		for (const auto& m : t.poly) pad = std::max(pad, -m.qexp);
	long W = qprec + pad;
	BivariateSeries F = spec.family(xcap, W);
	BivariateSeries rhs(xcap, W);
	for (const auto& t : spec.terms) {
		BivariateSeries poly(xcap, W);
		for (const auto& m : t.poly)
			poly.add_to(m.xdeg, LaurentSeries::monomial(m.coef, m.qexp, W));
		rhs = rhs + F.substitute_x_qpow(t.shift).mul_poly(poly);
	}
	VerificationReport rep = VerificationReport::pass("FUNCEQ:" + spec.name, qprec);
	for (long n = 0; n <= xcap && rep.passed; ++n) {
		if (auto mm = F.component(n).first_mismatch(rhs.component(n), qprec))
			rep.note_mismatch(*mm, "x^" + std::to_string(n));
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

namespace {

FunctionalEquationSpec arec_spec(std::string name, int ell) {
	/* E:Arec-shaped equations for the quadratic family. */
	struct ABShape {
		long p2c, p4a, p4b1, p4b2, p6a, p6b;
	};
	/* F(x) = (1+x q^{p2c}) F(xq^2) + (x q^{p4a} + x^2 q^{p4b...}) F(xq^4)
	 *        + (x^2 q^{p6a} - x^3 q^{p6b}) F(xq^6), from the displays. */
	FunctionalEquationSpec s;
	s.name = std::move(name);
	s.family = [ell](long xcap, long qprec) {
		return kr::H(kr::HSeriesParams::catalog(ell), xcap, qprec);
	};
	auto add3 = [&s](std::vector<FETermMono> p2, std::vector<FETermMono> p4,
	                 std::vector<FETermMono> p6) {
		s.terms = {{std::move(p2), 2}, {std::move(p4), 4}, {std::move(p6), 6}};
	};
	switch (ell) {
		case 1:
			add3({{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, -1}},
			     {{1, 3, 1}, {2, 5, -1}, {2, 6, 1}, {2, 7, 1}}, {{2, 8, 1}, {3, 12, -1}});
			break;
		case 3:
			add3({{0, 0, 1}, {1, 4, 1}}, {{1, 5, 1}, {2, 8, 1}}, {{2, 12, 1}, {3, 16, -1}});
			break;
		case 4:
			add3({{0, 0, 1}, {1, 1, 1}}, {{1, 2, 1}, {2, 5, 1}}, {{2, 6, 1}, {3, 10, -1}});
			break;
		case 5:
			add3({{0, 0, 1}, {1, 3, 1}}, {{1, 2, 1}, {2, 1, 1}}, {{2, 6, 1}, {3, 8, -1}});
			break;
		case 6:
			add3({{0, 0, 1}, {1, 2, 1}}, {{1, 1, 1}, {2, 2, 1}}, {{2, 4, 1}, {3, 8, -1}});
			break;
		case 7:
			add3({{0, 0, 1}, {1, 2, 1}}, {{1, 3, 1}, {2, 6, 1}}, {{2, 8, 1}, {3, 12, -1}});
			break;
		case 8:
			add3({{0, 0, 1}, {1, 1, 1}}, {{1, 2, 1}, {2, 3, 1}}, {{2, 6, 1}, {3, 8, -1}});
			break;
		case 9:
			add3({{0, 0, 1}, {1, 3, 1}}, {{1, 4, 1}, {2, 7, 1}}, {{2, 10, 1}, {3, 14, -1}});
			break;
		default: throw ParameterMismatch("no Arec display for this index");
	}
	return s;
}

FunctionalEquationSpec jrec_spec(std::string name, kr::JFamily fam, long inv_pow,
                                 std::vector<FETermMono> p3, std::vector<FETermMono> p6) {
	(void)inv_pow;
	FunctionalEquationSpec s;
	s.name = std::move(name);
	s.family = [fam](long xcap, long qprec) { return kr::J_even(fam, xcap, qprec); };
	s.terms = {{std::move(p3), 3}, {std::move(p6), 6}};
	return s;
}

std::vector<FunctionalEquationSpec> make_functional_equations() {
	std::vector<FunctionalEquationSpec> out;
	out.push_back(arec_spec("E:H1Rec", 1));
	out.push_back(arec_spec("E:H3Rec", 3));
	out.push_back(arec_spec("E:H4Rec", 4));
	out.push_back(arec_spec("E:H5Rec", 5));
	out.push_back(arec_spec("E:H6Rec", 6));
	out.push_back(arec_spec("E:H7Rec", 7));
	out.push_back(arec_spec("E:H8Rec", 8));
	out.push_back(arec_spec("E:H9Rec", 9));
	/* J10(x) = q^{-2}(1+q^2)(1+x^2q^6) J10(xq^3)
	 *          - q^{-2}(1+x^2q^7)(1+x^2q^{11}) J10(xq^6) */
	out.push_back(jrec_spec("E:J10Rec", kr::JFamily::J10, 0,
	                        {{0, -2, 1}, {0, 0, 1}, {2, 4, 1}, {2, 6, 1}},
	                        {{0, -2, -1}, {2, 5, -1}, {2, 9, -1}, {4, 16, -1}}));
	out.push_back(jrec_spec("E:J11Rec", kr::JFamily::J11, 0,
	                        {{0, 0, 1}, {0, 2, 1}, {2, 6, 1}, {2, 8, 1}},
	                        {{0, 2, -1}, {2, 9, -1}, {2, 13, -1}, {4, 20, -1}}));
	out.push_back(jrec_spec("E:H12J0Rec", kr::JFamily::J12_0, 0,
	                        {{0, -2, 1}, {0, 0, 1}, {2, 4, 1}, {2, 8, 1}},
	                        {{0, -2, -1}, {2, 7, -1}, {2, 9, -1}, {4, 18, -1}}));
	out.push_back(jrec_spec("E:H12J2Rec", kr::JFamily::J12_2, 0,
	                        {{0, 0, 1}, {0, 4, 1}, {2, 8, 1}, {2, 10, 1}},
	                        {{0, 4, -1}, {2, 13, -1}, {2, 15, -1}, {4, 24, -1}}));
	/* The J5/J8 equations and the shifted-H5 equation behind Theorem 2. */
	{
		FunctionalEquationSpec s;
		s.name = "E:J5Rec";
		s.family = [](long xcap, long qprec) { return kr::J5(xcap, qprec); };
		s.terms = {{{{0, 0, 1}, {1, 5, 1}}, 2},
		           {{{1, 2, 1}, {2, 1, 1}}, 4},
		           {{{2, 6, 1}, {3, 10, -1}}, 6}};
		out.push_back(std::move(s));
	}
	{
		FunctionalEquationSpec s;
		s.name = "E:J8Rec";
		s.family = [](long xcap, long qprec) { return kr::J8(xcap, qprec); };
		s.terms = {{{{0, 0, 1}, {1, 3, 1}}, 2},
		           {{{1, 2, 1}, {2, 3, 1}}, 4},
		           {{{2, 6, 1}, {3, 10, -1}}, 6}};
		out.push_back(std::move(s));
	}
	{
		FunctionalEquationSpec s;
		s.name = "E:H5ShiftRec";
		s.family = [](long xcap, long qprec) {
			return kr::H(kr::HSeriesParams::catalog(5), xcap, qprec).substitute_x_qpow(2);
		};
		s.terms = {{{{0, 0, 1}, {1, 5, 1}}, 2},
		           {{{1, 4, 1}, {2, 5, 1}}, 4},
		           {{{2, 10, 1}, {3, 14, -1}}, 6}};
		out.push_back(std::move(s));
	}
	return out;
}

}  // namespace

const std::vector<FunctionalEquationSpec>& functional_equations() {
	static const std::vector<FunctionalEquationSpec> specs = make_functional_equations();
	return specs;
}

const FunctionalEquationSpec& functional_equation(const std::string& name) {
	for (const auto& s : functional_equations())
		if (s.name == name) return s;
	throw ParameterMismatch("unknown functional equation: " + name);
}

VerificationReport check_equivalence_reduction(kr::JFamily fam, long M_max, long qprec) {
	auto t0 = Clock::now();
	/* LHS factors (1-q^{6M+u})(1-q^{6M+v}); RHS (1+q^w - q^{6M+y} - q^{6M+z}) j_{M-1}
	 * - q^w j_{M-2}. */
	long u, v, w, y, z;
	std::string name;
	switch (fam) {
		case kr::JFamily::J10: u = 0, v = -2, w = 2, y = -5, z = -1, name = "E:j10rec"; break;
		case kr::JFamily::J11: u = 0, v = 2, w = 2, y = -3, z = 1, name = "E:j11rec"; break;
		case kr::JFamily::J12_0: u = -2, v = 0, w = 4, y = -3, z = -1, name = "E:j120rec"; break;
		case kr::JFamily::J12_2: u = 0, v = 4, w = 2, y = -1, z = 1, name = "E:j122rec"; break;
		default: throw ParameterMismatch("no coefficient recurrence for this family");
	}
	long pad = 8;
	long W = qprec + pad;
	std::vector<LaurentSeries> j;
	for (long M = 0; M <= M_max; ++M) j.push_back(kr::j_coeff(fam, M, W));
	auto at = [&](long M) { return M >= 0 ? j[static_cast<size_t>(M)] : LaurentSeries::zero(W); };
	VerificationReport rep = VerificationReport::pass(name, qprec);
	for (long M = 0; M <= M_max && rep.passed; ++M) {
		LaurentSeries lhs = at(M).mul_binomial(6 * M + u, -1).mul_binomial(6 * M + v, -1);
		LaurentSeries c1 = LaurentSeries::one() + mono(1, w) - mono(1, 6 * M + y) - mono(1, 6 * M + z);
		LaurentSeries rhs = (c1 * at(M - 1)).truncated(W) - at(M - 2).shifted(w).truncated(W);
		if (auto mm = lhs.first_mismatch(rhs, qprec)) rep.note_mismatch(*mm, "M=" + std::to_string(M));
	}
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

}  // namespace rec
}  // namespace qrv
