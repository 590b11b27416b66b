#include "qrv/classical.hpp"

#include <chrono>

#include "qrv/pochhammer.hpp"

namespace qrv {
namespace classical {

namespace {

LaurentSeries inf_prod(std::vector<PochhammerSpec> num, std::vector<PochhammerSpec> den,
                       long prec) {
	std::vector<ProductFactor> fs;
	for (auto& s : num) fs.push_back({s, +1});
	for (auto& s : den) fs.push_back({s, -1});
	return product_side(fs, prec);
}

void add_qbinomial(std::vector<ClassicalIdentity>& out, long alpha, long beta) {
	out.push_back(
	    {"CLASSICAL:qbinomial:a" + std::to_string(alpha) + ":x" + std::to_string(beta),
	     [=](long p) { return phi({{+1, alpha}}, {}, 1, {+1, beta}, p); },
	     [=](long p) {
		     return inf_prod({PochhammerSpec::infinite(alpha + beta, 1)},
		                     {PochhammerSpec::infinite(beta, 1)}, p);
	     }});
}

void add_euler1(std::vector<ClassicalIdentity>& out, long beta) {
	out.push_back({"CLASSICAL:euler1:x" + std::to_string(beta),
	               [=](long p) { return phi({}, {}, 1, {+1, beta}, p); },
	               [=](long p) { return inf_prod({}, {PochhammerSpec::infinite(beta, 1)}, p); }});
}

void add_euler2(std::vector<ClassicalIdentity>& out, int sign, long beta) {
	std::string id =
	    "CLASSICAL:euler2:x" + std::string(sign < 0 ? "negq" : "") + std::to_string(beta);
	out.push_back({id, [=](long p) { return euler_theta({sign, beta}, 1, p); },
	               [=](long p) { return poch(PochhammerSpec::infinite(beta, 1, sign), p); }});
}

void add_heine(std::vector<ClassicalIdentity>& out, long a, long b, long c, long x, int idx) {
	out.push_back(
	    {"CLASSICAL:heine:grid" + std::to_string(idx),
	     [=](long p) { return phi({{+1, a}, {+1, b}}, {{+1, c}}, 1, {+1, x}, p); },
	     [=](long p) {
		     LaurentSeries pre = inf_prod({PochhammerSpec::infinite(b, 1),
		                                   PochhammerSpec::infinite(a + x, 1)},
		                                  {PochhammerSpec::infinite(c, 1),
		                                   PochhammerSpec::infinite(x, 1)},
		                                  p);
		     LaurentSeries tail = phi({{+1, c - b}, {+1, x}}, {{+1, a + x}}, 1, {+1, b}, p);
		     return (pre * tail).truncated(p);
	     }});
}

/* Bailey-Daum at base q^m: 2phi1[q^a, q^b; q^{a+m-b}; q^m, -q^{m-b}] equals
 * (q^{a+m}, q^{a+2m-2b}, q^{2m}; q^{2m})_inf /
 * ((-q^{m-b}, q^{a+m-b}, q^m; q^m)_inf). */
void add_kummer(std::vector<ClassicalIdentity>& out, long a, long b, long m) {
	out.push_back(
	    {"CLASSICAL:baileydaum:m" + std::to_string(m) + ":a" + std::to_string(a) + ":b" +
	         std::to_string(b),
	     [=](long p) { return phi({{+1, a}, {+1, b}}, {{+1, a + m - b}}, m, {-1, m - b}, p); },
	     [=](long p) {
		     return inf_prod({PochhammerSpec::infinite(a + m, 2 * m),
		                      PochhammerSpec::infinite(a + 2 * m - 2 * b, 2 * m),
		                      PochhammerSpec::infinite(2 * m, 2 * m)},
		                     {PochhammerSpec::infinite(m - b, m, -1),
		                      PochhammerSpec::infinite(a + m - b, m),
		                      PochhammerSpec::infinite(m, m)},
		                     p);
	     }});
}

void add_hall(std::vector<ClassicalIdentity>& out, long a, long b, long c, long d, long e,
              int idx) {
	long w = d + e - a - b - c; /* argument de/(abc) */
	out.push_back(
	    {"CLASSICAL:hall:grid" + std::to_string(idx),
	     [=](long p) {
		     return phi({{+1, a}, {+1, b}, {+1, c}}, {{+1, d}, {+1, e}}, 1, {+1, w}, p);
	     },
	     [=](long p) {
		     LaurentSeries pre = inf_prod({PochhammerSpec::infinite(b, 1),
		                                   PochhammerSpec::infinite(d + e - a - b, 1),
		                                   PochhammerSpec::infinite(d + e - b - c, 1)},
		                                  {PochhammerSpec::infinite(d, 1),
		                                   PochhammerSpec::infinite(e, 1),
		                                   PochhammerSpec::infinite(w, 1)},
		                                  p);
		     LaurentSeries tail = phi({{+1, d - b}, {+1, e - b}, {+1, w}},
		                              {{+1, d + e - a - b}, {+1, d + e - b - c}}, 1, {+1, b}, p);
		     return (pre * tail).truncated(p);
	     }});
}

std::vector<ClassicalIdentity> make_identities() {
	std::vector<ClassicalIdentity> out;
	for (long alpha : {-1L, 0L, 1L, 2L, 3L, 5L})
		for (long beta : {1L, 2L, 3L}) add_qbinomial(out, alpha, beta);
	for (long beta : {1L, 2L, 3L, 5L}) add_euler1(out, beta);
	for (long beta : {-1L, 0L, 1L, 2L, 3L, 5L}) add_euler2(out, +1, beta);
	add_euler2(out, -1, 1);
	add_euler2(out, -1, 2);
	/* Heine grid: requires c >= 1, x >= 1, b >= 1, a + x >= 1. */
	int gi = 0;
	for (auto [a, b, c, x] : std::initializer_list<std::array<long, 4>>{
	         {1, 1, 1, 1}, {0, 1, 1, 1}, {-1, 1, 2, 2}, {2, 1, 1, 1}, {1, 2, 3, 1},
	         {2, 3, 2, 1}, {1, 1, 2, 2}, {3, 2, 1, 1}, {5, 1, 2, 1}, {-1, 2, 1, 2}})
		add_heine(out, a, b, c, x, ++gi);
	/* Bailey-Daum: the paper's base-q^6 instances, plus base-q points where
	 * b = q^beta with beta <= 0 terminates the series. */
	add_kummer(out, -1, 1, 6);
	add_kummer(out, 3, 1, 6);
	add_kummer(out, 0, 0, 1);
	add_kummer(out, 1, 0, 1);
	add_kummer(out, 2, -1, 1);
	add_kummer(out, 3, -2, 1);
	add_kummer(out, 5, -1, 1);
	/* Hall grid: d, e >= 1 and every derived parameter exponent >= 1. */
	gi = 0;
	for (auto [a, b, c, d, e] : std::initializer_list<std::array<long, 5>>{
	         {1, 1, 1, 2, 2}, {0, 1, 1, 2, 3}, {1, 2, 1, 3, 2}, {2, 1, 3, 3, 5}, {1, 1, 2, 2, 3}})
		add_hall(out, a, b, c, d, e, ++gi);
	return out;
}

}  // namespace

const std::vector<ClassicalIdentity>& classical_identities() {
	static const std::vector<ClassicalIdentity> ids = make_identities();
	return ids;
}

std::vector<VerificationReport> classical_checks(long order) {
	std::vector<VerificationReport> out;
	for (const auto& ci : classical_identities()) {
		auto t0 = std::chrono::steady_clock::now();
		VerificationReport rep = VerificationReport::pass(ci.id, order);
		rep.status = "classical";
		if (auto mm = ci.lhs(order).first_mismatch(ci.rhs(order), order)) rep.note_mismatch(*mm);
		rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
		                     std::chrono::steady_clock::now() - t0)
		                     .count();
		out.push_back(std::move(rep));
	}
	return out;
}

}  // namespace classical
}  // namespace qrv
