#include <doctest.h>

#include <random>

#include "qrv/laurent.hpp"

using namespace qrv;

namespace {

LaurentSeries geom(long prec) { return LaurentSeries::one(prec).div_binomial(1, -1); }

std::mt19937_64 rng(0x5eed);

LaurentSeries random_series(bool unit_leading = false) {
	std::uniform_int_distribution<long> off(-3, 3), len(0, 6), coef(-9, 9), pad(0, 3);
	long o = off(rng);
	long n = len(rng);
	std::vector<Int> cs;
	for (long i = 0; i < n; ++i) cs.emplace_back(coef(rng));
	if (unit_leading) {
		if (cs.empty()) cs.emplace_back(1);
		cs.front() = (coef(rng) % 2 == 0) ? 1 : -1;
	}
	long stored = static_cast<long>(cs.size());
	return LaurentSeries(o, cs, o + stored + pad(rng));
}

}  // namespace

TEST_CASE("addition follows the examples") {
	auto a = LaurentSeries::one(10).mul_binomial(1, -1); /* 1 - q */
	auto b = LaurentSeries::monomial(1, 1, 10);
	auto s = a + b;
	CHECK(s.coeff(0) == 1);
	CHECK(s.coeff(1) == 0);
	CHECK(s.prec() == 10);
	CHECK(s.terms() == 1);

	auto z = LaurentSeries::zero(10);
	CHECK((z + a).equal_below(a, 10));

	auto c = LaurentSeries::monomial(1, -1, 5) + LaurentSeries::one(3);
	CHECK(c.prec() == 3);
	CHECK(c.coeff(-1) == 1);
	CHECK(c.coeff(0) == 1);
}

TEST_CASE("multiplication truncates by the min rule") {
	auto a = LaurentSeries::one(4).mul_binomial(1, -1);
	auto b = LaurentSeries(0, {Int(1), Int(1), Int(1), Int(1)}, 4);
	auto p = a * b; /* telescopes to 1 - q^4 = 1 below q^4 */
	CHECK(p.prec() == 4);
	CHECK(p.terms() == 1);
	CHECK(p.coeff(0) == 1);

	auto one = LaurentSeries::one(50);
	auto r = random_series();
	CHECK((r * one).equal_below(r, r.prec()));

	/* (1-q)(1-q^2) against the directly expanded polynomial */
	auto f = LaurentSeries::one(20).mul_binomial(1, -1).mul_binomial(2, -1);
	auto expect = LaurentSeries(0, {Int(1), Int(-1), Int(-1), Int(1)}, 20);
	CHECK(f.equal_below(expect, 20));
}

TEST_CASE("inverse") {
	auto g = geom(5);
	CHECK(g.coeff(0) == 1);
	CHECK(g.coeff(4) == 1);
	CHECK(g.prec() == 5);

	/* inv(-q^{-1}(1-q)) = -q(1+q+...) */
	auto a = (LaurentSeries::monomial(-1, -1, 8) + LaurentSeries::one(8));
	auto b = a.inverse();
	CHECK(b.offset() == 1);
	CHECK(b.coeff(1) == -1);
	CHECK(b.coeff(2) == -1);
	auto back = (a * b);
	CHECK(back.equal_below(LaurentSeries::one(back.prec()), back.prec()));

	auto two = LaurentSeries(0, {Int(2), Int(-1)}, 10);
	CHECK_THROWS_AS(two.inverse(), NonUnitLeading);
	CHECK_THROWS_AS(LaurentSeries::zero(10).inverse(), ZeroSeries);
}

TEST_CASE("shift") {
	auto m = LaurentSeries::one(10).shifted(3);
	CHECK(m.offset() == 3);
	CHECK(m.prec() == 13);
	CHECK(LaurentSeries::monomial(1, -1, 5).shifted(1).coeff(0) == 1);
	auto r = random_series();
	CHECK(r.shifted(4).shifted(-4).equal_below(r, r.prec()));
}

TEST_CASE("negate_q flips odd exponents and is an involution") {
	auto r = random_series();
	auto n = r.negate_q();
	CHECK(n.negate_q().equal_below(r, r.prec()));
	for (long e = r.offset(); e < r.prec(); ++e)
		CHECK(n.coeff(e) == ((e % 2 != 0) ? Int(-r.coeff(e)) : r.coeff(e)));
}

TEST_CASE("ring axioms on 1000 random triples") {
	for (int trial = 0; trial < 1000; ++trial) {
		auto a = random_series(), b = random_series(), c = random_series();
		auto assoc_l = (a + b) + c, assoc_r = a + (b + c);
		CHECK(assoc_l.equal_below(assoc_r, std::min(assoc_l.prec(), assoc_r.prec())));
		auto comm_l = a * b, comm_r = b * a;
		CHECK(comm_l.equal_below(comm_r, std::min(comm_l.prec(), comm_r.prec())));
		auto dist_l = a * (b + c), dist_r = a * b + a * c;
		CHECK(dist_l.equal_below(dist_r, std::min(dist_l.prec(), dist_r.prec())));
	}
}

TEST_CASE("inversion round-trip on 1000 random unit-leading series") {
	for (int trial = 0; trial < 1000; ++trial) {
		auto a = random_series(true);
		auto p = a * a.inverse();
		CHECK(p.equal_below(LaurentSeries::one(p.prec()), p.prec()));
	}
}

TEST_CASE("precision soundness: higher precision truncates to the lower result") {
	for (int trial = 0; trial < 40; ++trial) {
		std::uniform_int_distribution<int> which(0, 3);
		auto lo = random_series(true);
		auto hi = LaurentSeries(lo.offset(), [&] {
			std::vector<Int> cs;
			for (long e = lo.offset(); e < lo.offset() + static_cast<long>(lo.terms()); ++e)
				cs.push_back(lo.coeff(e));
			return cs;
		}(), lo.prec() + 10);
		auto other = random_series(true);
		for (int step = 0; step < 4; ++step) {
			switch (which(rng)) {
				case 0:
					lo = lo + other;
					hi = hi + other;
					break;
				case 1:
					lo = (lo * other).truncated(lo.prec());
					hi = (hi * other).truncated(hi.prec());
					break;
				case 2:
					lo = lo.shifted(2);
					hi = hi.shifted(2);
					break;
				default:
					lo = lo.mul_binomial(1, -1);
					hi = hi.mul_binomial(1, -1);
					break;
			}
		}
		CHECK(hi.truncated(lo.prec()).equal_below(lo, lo.prec()));
	}
}

TEST_CASE("binomial division inverts binomial multiplication") {
	for (int trial = 0; trial < 200; ++trial) {
		auto a = random_series();
		std::uniform_int_distribution<long> ed(-4, 6);
		long e = ed(rng);
		if (e == 0) continue;
		int s = (trial % 2) ? 1 : -1;
		auto round = a.mul_binomial(e, s).div_binomial(e, s);
		CHECK(round.equal_below(a, round.prec()));
	}
}
