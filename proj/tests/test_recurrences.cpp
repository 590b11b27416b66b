#include <doctest.h>

#include "qrv/recurrences.hpp"

using namespace qrv;
using namespace qrv::rec;

namespace {
struct Instance {
	HRecFamily fam;
	long two_c, d;
};
const Instance kPaperInstances[] = {
    {HRecFamily::CD32, 5, 1},   /* H_1 */
    {HRecFamily::D0, -1, 0},    /* H_2, H_3 */
    {HRecFamily::D0, 2, 0},     /* H_4 */
    {HRecFamily::DM1, -4, -1},  /* H_5 */
    {HRecFamily::DM1, -1, -1},  /* H_6 */
    {HRecFamily::D0, 1, 0},     /* H_7 */
    {HRecFamily::D0, 0, 0},     /* H_8, H_9 */
};
}  // namespace

TEST_CASE("family recurrences hold at every paper instance") {
	for (const auto& inst : kPaperInstances) {
		auto rep = check_h_recurrence(inst.fam, inst.two_c, inst.d, 12, 80);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
}

TEST_CASE("the long recurrence holds at the same points") {
	for (const auto& inst : kPaperInstances) {
		auto rep = check_h_recurrence(HRecFamily::LONG, inst.two_c, inst.d, 12, 80);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
}

TEST_CASE("family constraints are enforced") {
	CHECK_THROWS_AS(check_h_recurrence(HRecFamily::D0, 1, 1, 5, 40), ParameterMismatch);
	CHECK_THROWS_AS(check_h_recurrence(HRecFamily::DM1, 1, 0, 5, 40), ParameterMismatch);
	CHECK_THROWS_AS(check_h_recurrence(HRecFamily::CD32, 4, 1, 5, 40), ParameterMismatch);
	CHECK_THROWS_AS(h_rec_family_from_string("NOPE"), ParameterMismatch);
}

TEST_CASE("N = 0 base case is the empty-boundary identity") {
	auto rep = check_h_recurrence(HRecFamily::D0, 0, 0, 0, 40);
	CHECK(rep.passed);
}

TEST_CASE("basic relations") {
	for (auto [two_c, d] : std::initializer_list<std::pair<long, long>>{
	         {5, 1}, {0, 0}, {-4, -1}, {-4, -2}}) {
		auto rep = check_basic_relations(two_c, d, 10, 60);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
}

TEST_CASE("shift closure: three-term iterates to the four-term recurrence") {
	for (const auto& inst : kPaperInstances) {
		auto rep = check_shift_closure(inst.fam, inst.two_c, inst.d, 40);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
	CHECK_THROWS_AS(check_shift_closure(HRecFamily::LONG, 5, 1, 10), ParameterMismatch);
}

TEST_CASE("uniqueness: the recurrence re-derives the direct sums") {
	auto rep = check_uniqueness(HRecFamily::D0, 2, 0, 10, 60);
	INFO(rep.detail);
	CHECK(rep.passed);
	auto rep2 = check_uniqueness(HRecFamily::CD32, 5, 1, 10, 60);
	CHECK(rep2.passed);
}

TEST_CASE("functional equations at a small cap") {
	for (const auto& spec : functional_equations()) {
		long xcap = spec.name.find('J') != std::string::npos ? 6 : 5;
		auto rep = check_functional_equation(spec, xcap, 60);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
	CHECK_THROWS_AS(functional_equation("E:H2Rec"), ParameterMismatch);
}

TEST_CASE("a perturbed functional equation fails with a located mismatch") {
	FunctionalEquationSpec bad = functional_equation("E:H4Rec");
	bad.name = "E:H4Rec-perturbed";
	bad.terms[0].poly[1].qexp += 1; /* (1+xq) -> (1+xq^2) */
	auto rep = check_functional_equation(bad, 4, 40);
	CHECK(!rep.passed);
	CHECK(rep.first_mismatch.has_value());
}

TEST_CASE("coefficient-level j recurrences") {
	for (auto fam : {kr::JFamily::J10, kr::JFamily::J11, kr::JFamily::J12_0, kr::JFamily::J12_2}) {
		auto rep = check_equivalence_reduction(fam, 10, 80);
		INFO(rep.id, " ", rep.detail);
		CHECK(rep.passed);
	}
	CHECK_THROWS_AS(check_equivalence_reduction(kr::JFamily::J12_3, 5, 40), ParameterMismatch);
}

TEST_CASE("truncation stability of a functional-equation check") {
	const auto& spec = functional_equation("E:H3Rec");
	CHECK(check_functional_equation(spec, 6, 60).passed);
	CHECK(check_functional_equation(spec, 4, 40).passed);
	CHECK(check_functional_equation(spec, 2, 25).passed);
}
