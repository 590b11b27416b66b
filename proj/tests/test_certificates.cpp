#include <doctest.h>

#include "qrv/certificates.hpp"
#include "qrv/recurrences.hpp"

using namespace qrv;
using namespace qrv::wz;

namespace {
const Family kFamilies[] = {Family::J10, Family::J11, Family::J12_0, Family::J12_2};
}

TEST_CASE("f vanishes for k > M via the reciprocal-zero guard") {
	for (auto fam : kFamilies) {
		CHECK(!f_term(fam, 3, 2).valuation().has_value());
		CHECK(!f_term(fam, 7, 0).valuation().has_value());
		CHECK(f_term(fam, 2, 2).valuation().has_value());
	}
}

TEST_CASE("g(0, M) = 0 exactly") {
	for (auto fam : kFamilies)
		for (long M = 0; M <= 6; ++M) CHECK(!g_cert(fam, 0, M).valuation().has_value());
}

TEST_CASE("g is exactly zero past k = M + 2") {
	for (auto fam : kFamilies) {
		CHECK(!g_cert(fam, 5, 1).valuation().has_value());
		CHECK(g_cert(fam, 2, 1).valuation().has_value()); /* the k = M+1 pole cell cancels */
		CHECK(g_cert(fam, 3, 1).valuation().has_value()); /* and the k = M+2 cell */
	}
}

TEST_CASE("factored evaluation matches direct series assembly") {
	long p = 60;
	long k = 2, M = 4;
	/* f_{10,k,M} = q^{3k(k+1)/2} / ((-q;q)_{2M+k} (q^2;q^2)_{M-k} (q^3;q^3)_k) */
	auto den = (poch(PochhammerSpec::finite(1, 1, 2 * M + k, -1), p) *
	            poch(PochhammerSpec::finite(2, 2, M - k), p))
	               .truncated(p) *
	           poch(PochhammerSpec::finite(3, 3, k), p);
	auto direct = den.truncated(p).inverse().truncated(p).shifted(3 * k * (k + 1) / 2)
	                  .truncated(p);
	CHECK(f_term(Family::J10, k, M).eval(p).equal_below(direct, p));
}

TEST_CASE("telescoping identity cell-by-cell, poles included") {
	for (auto fam : kFamilies) {
		auto rep = check_telescoping(fam, 8, 6, 120);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
}

TEST_CASE("summed recurrence and the j-sum relation") {
	for (auto fam : kFamilies) {
		auto rep = check_summed_recurrence(fam, 8, 120);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
}

TEST_CASE("vanishing tails") {
	for (auto fam : kFamilies) {
		auto rep = check_vanishing_tail(fam, 0, 1, 20, 120);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
		auto rep5 = check_vanishing_tail(fam, 5, 6, 25, 120);
		CHECK(rep5.passed);
	}
}

TEST_CASE("f valuation grows quadratically") {
	for (auto fam : kFamilies) {
		std::optional<long> prev;
		for (long k = 1; k <= 12; ++k) {
			auto v = f_term(fam, k, 12).valuation();
			REQUIRE(v.has_value());
			CHECK(*v >= k * (3 * k - 1) / 2 - 2 * k);
			if (prev) CHECK(*v > *prev);
			prev = v;
		}
	}
}

TEST_CASE("certificate consistency with the coefficient recurrence") {
	/* passing telescoping + tails implies the module-recurrences check */
	for (auto fam : kFamilies) {
		auto tele = check_telescoping(fam, 10, 6, 100);
		auto tail = check_vanishing_tail(fam, 3, 4, 20, 100);
		auto redv = rec::check_equivalence_reduction(j_family(fam), 6, 100);
		CHECK(tele.passed);
		CHECK(tail.passed);
		CHECK(redv.passed);
	}
}

TEST_CASE("a surviving zero denominator is a structural error") {
	QFactored broken;
	broken.den_binoms.push_back({0, -1, -1});
	CHECK_THROWS_AS(broken.valuation(), NonUnitLeading);
	CHECK_THROWS_AS(broken.eval(10), NonUnitLeading);
}

TEST_CASE("QFactored eval handles negative shifts and Laurent factors") {
	QFactored x;
	x.sign = -1;
	x.shift = -3;
	x.num_binoms.push_back({-2, -1, -1}); /* (1 - q^{-2}) */
	x.den_binoms.push_back({1, +1, -1});  /* 1/(1+q) */
	auto v = x.valuation();
	REQUIRE(v.has_value());
	CHECK(*v == -5);
	auto s = x.eval(20);
	CHECK(s.offset() == -5);
	CHECK(s.prec() >= 20);
	/* eval agrees with assembling by hand */
	auto manual = (LaurentSeries::one(30).mul_binomial(-2, -1).div_binomial(1, +1))
	                  .shifted(-3).scaled(-1).truncated(20);
	CHECK(s.equal_below(manual, 20));
}
