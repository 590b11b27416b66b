#include <doctest.h>

#include "qrv/oracle.hpp"
#include "qrv/pochhammer.hpp"

using namespace qrv;

namespace {

/* Direct polynomial expansion, the oracle for finite Pochhammer products. */
std::vector<long> expand_poch(long base, long step, long n) {
	std::vector<long> p = {1};
	for (long i = 0; i < n; ++i) {
		long e = base + step * i;
		std::vector<long> out(p.size() + static_cast<size_t>(e), 0);
		for (size_t j = 0; j < p.size(); ++j) {
			out[j] += p[j];
			out[j + static_cast<size_t>(e)] -= p[j];
		}
		p = std::move(out);
	}
	return p;
}

}  // namespace

TEST_CASE("finite Pochhammer symbols") {
	CHECK(poch(PochhammerSpec::finite(1, 1, 0), 10).equal_below(LaurentSeries::one(10), 10));

	auto p2 = poch(PochhammerSpec::finite(1, 1, 2), 10);
	auto expect = expand_poch(1, 1, 2);
	for (size_t i = 0; i < expect.size(); ++i) CHECK(p2.coeff(static_cast<long>(i)) == expect[i]);

	auto neg = poch(PochhammerSpec::finite(-1, 4, 1), 10);
	CHECK(neg.coeff(0) == 1);
	CHECK(neg.coeff(-1) == -1);
	CHECK(neg.terms() == 2);

	for (long n : {3L, 5L}) {
		auto got = poch(PochhammerSpec::finite(2, 3, n), 100);
		auto want = expand_poch(2, 3, n);
		for (size_t i = 0; i < want.size(); ++i)
			CHECK(got.coeff(static_cast<long>(i)) == want[i]);
	}
}

TEST_CASE("guarded reciprocal") {
	CHECK(poch_recip_guarded(1, 1, -1, 10).is_zero());
	CHECK(poch_recip_guarded(1, 1, 0, 10).equal_below(LaurentSeries::one(10), 10));
	auto r = poch_recip_guarded(1, 1, 1, 4);
	CHECK(r.coeff(0) == 1);
	CHECK(r.coeff(3) == 1);
	CHECK(r.prec() == 4);
}

TEST_CASE("infinite products agree with finite ones past the window") {
	for (auto [a, m] : std::initializer_list<std::pair<long, long>>{{1, 1}, {2, 4}, {-1, 4}}) {
		long prec = 30;
		long n = (prec - a) / m + 2;
		auto fin = poch(PochhammerSpec::finite(a, m, n), prec);
		auto inf = poch(PochhammerSpec::infinite(a, m), prec);
		CHECK(inf.equal_below(fin, prec));
	}
}

TEST_CASE("product_side") {
	std::vector<ProductFactor> fs;
	for (long r : {1L, 4L, 6L, 8L, 11L}) fs.push_back({PochhammerSpec::infinite(r, 12), -1});
	auto p = product_side(fs, 7);
	long expect[] = {1, 1, 1, 1, 2, 2, 3};
	for (long n = 0; n < 7; ++n) CHECK(p.coeff(n) == expect[n]);

	std::vector<ProductFactor> g = {{PochhammerSpec::infinite(6, 12), +1},
	                                {PochhammerSpec::infinite(2, 6), -1},
	                                {PochhammerSpec::infinite(3, 6), -1},
	                                {PochhammerSpec::infinite(4, 6), -1}};
	auto s = product_side(g, 3);
	CHECK(s.coeff(0) == 1);
	CHECK(s.coeff(1) == 0);
	CHECK(s.coeff(2) == 1);

	CHECK(product_side({}, 5).equal_below(LaurentSeries::one(5), 5));

	/* F together with its reciprocal cancels exactly */
	std::vector<ProductFactor> both = {{PochhammerSpec::infinite(1, 2), +1},
	                                   {PochhammerSpec::infinite(3, 5, -1), +1},
	                                   {PochhammerSpec::infinite(1, 2), -1},
	                                   {PochhammerSpec::infinite(3, 5, -1), -1}};
	CHECK(product_side(both, 40).equal_below(LaurentSeries::one(40), 40));
}

TEST_CASE("reciprocal infinite products count congruence-class partitions") {
	for (auto [r, m] : std::initializer_list<std::pair<long, long>>{
	         {1, 5}, {4, 5}, {2, 3}, {1, 1}, {3, 4}}) {
		auto viaseries =
		    product_side({{PochhammerSpec::infinite(r, m), -1}}, 60);
		auto viadp = oracle_partitions({{r, m, -1, +1}}, 60);
		CHECK(viaseries.equal_below(viadp, 60));
	}
}

TEST_CASE("oracle examples") {
	auto p5 = oracle_partitions({{1, 5, -1, +1}, {4, 5, -1, +1}}, 10);
	CHECK(p5.coeff(4) == 2);
	CHECK(oracle_partitions({}, 5).equal_below(LaurentSeries::one(5), 5));
	std::vector<PartitionClass> kr14;
	for (long r : {1L, 4L, 6L, 8L, 11L}) kr14.push_back({r, 12, -1, +1});
	CHECK(oracle_partitions(kr14, 10).coeff(6) == 3);
}

TEST_CASE("ill-formed specs are rejected") {
	CHECK_THROWS_AS(poch(PochhammerSpec{1, 0, kInfiniteLength, +1}, 10), IllFormedInfinite);
	/* reciprocal of a product with a q^0 factor is a zero division */
	CHECK_THROWS_AS(poch(PochhammerSpec::finite(0, 1, 2), 10).inverse(), ZeroSeries);
}
