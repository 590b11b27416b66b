#include "qrv/catalog.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qrv/classical.hpp"
#include "qrv/kr.hpp"
#include "qrv/pochhammer.hpp"

namespace qrv {
namespace verify {

namespace {

using json = nlohmann::json;
using kr::HSeriesParams;

LaurentSeries prod(std::vector<std::pair<std::vector<long>, long>> dens,
                   std::vector<std::pair<std::vector<long>, long>> nums, long prec) {
	std::vector<ProductFactor> fs;
	for (auto& [rs, m] : dens)
		for (long r : rs) fs.push_back({PochhammerSpec::infinite(r, m), -1});
	for (auto& [rs, m] : nums)
		for (long r : rs) fs.push_back({PochhammerSpec::infinite(r, m), +1});
	return product_side(fs, prec);
}

std::vector<PartitionClass> classes(std::vector<std::pair<std::vector<long>, long>> dens,
                                    std::vector<std::pair<std::vector<long>, long>> nums) {
	std::vector<PartitionClass> out;
	for (auto& [rs, m] : dens)
		for (long r : rs) out.push_back({r, m, -1, +1});
	for (auto& [rs, m] : nums)
		for (long r : rs) out.push_back({r, m, +1, +1});
	return out;
}

LaurentSeries sec6_rhs(long order) {
	LaurentSeries pre = LaurentSeries::monomial(1, -1) + LaurentSeries::one() +
	                    LaurentSeries::monomial(1, 1);
	return (pre * prod({{{3}, 4}, {{4, 5}, 12}}, {}, order + 1)).truncated(order);
}

std::vector<IdentityRecord> make_catalog() {
	std::vector<IdentityRecord> out;
	auto H1 = [](int ell) {
		return [ell](long p) { return kr::H_at_x1(HSeriesParams::catalog(ell), p); };
	};
	auto add = [&](std::string id, std::string status, long order,
	               std::function<LaurentSeries(long)> lhs, std::function<LaurentSeries(long)> rhs,
	               std::string note = {}) {
		out.push_back({std::move(id), std::move(status), order, std::move(lhs), std::move(rhs),
		               std::move(note)});
	};

	/* Kanade-Russell sum-product identities (Theorem 1 proves 1,2,3,6,7,10,11). */
	add("C:H1", "proved", 200, H1(1), [](long p) { return prod({{{1, 4, 6, 8, 11}, 12}}, {}, p); },
	    "H_1(1) = 1/(q,q^4,q^6,q^8,q^11;q^12)");
	add("C:H2", "proved", 200, H1(2),
	    [](long p) { return prod({{{2, 3, 4}, 6}}, {{{6}, 12}}, p); },
	    "H_2(1) = (q^6;q^12)/(q^2,q^3,q^4;q^6); product equals a Bos character"
	    " (conjectural-external provenance)");
	add("C:H3", "proved", 200, H1(3), [](long p) { return prod({{{4, 5, 6, 7, 8}, 12}}, {}, p); },
	    "H_3(1) = 1/(q^4,...,q^8;q^12); product equals a Bos character"
	    " (conjectural-external provenance)");
	add("C:H4", "conjectural", 200, H1(4),
	    [](long p) { return prod({{{1}, 4}, {{4, 11}, 12}}, {}, p); },
	    "H_4(1) = 1/((q;q^4)(q^4,q^11;q^12))");
	add("C:H5", "conjectural", 200, H1(5),
	    [](long p) { return prod({{{1}, 4}, {{7, 8}, 12}}, {}, p); },
	    "H_5(1) = 1/((q;q^4)(q^7,q^8;q^12))");
	add("C:H6", "proved", 200, H1(6), [](long p) { return prod({{{1, 2}, 4}}, {{{3}, 12}}, p); },
	    "H_6(1) = (q^3;q^12)/(q,q^2;q^4)");
	add("C:H7", "proved", 200, H1(7), [](long p) { return prod({{{2, 3}, 4}}, {{{9}, 12}}, p); },
	    "H_7(1) = (q^9;q^12)/(q^2,q^3;q^4)");
	add("C:H8", "conjectural", 200, H1(8),
	    [](long p) { return prod({{{3}, 4}, {{1, 8}, 12}}, {}, p); },
	    "H_8(1) = 1/((q^3;q^4)(q,q^8;q^12))");
	add("C:H9", "conjectural", 200, H1(9),
	    [](long p) { return prod({{{3}, 4}, {{4, 5}, 12}}, {}, p); },
	    "H_9(1) = 1/((q^3;q^4)(q^4,q^5;q^12))");
	add("C:H10", "proved", 200, H1(10),
	    [](long p) { return prod({{{1}, 3}, {{3, 6, 11}, 12}}, {}, p); },
	    "H_10(1) = 1/((q;q^3)(q^3,q^6,q^11;q^12))");
	add("C:H11", "proved", 200, H1(11),
	    [](long p) { return prod({{{2}, 3}, {{3, 6, 7}, 12}}, {}, p); },
	    "H_11(1) = 1/((q^2;q^3)(q^3,q^6,q^7;q^12))");

	/* Theorem 2 single-sum reductions. */
	add("T:H4", "proved", 200, H1(4), [](long p) { return kr::thm2_rhs(kr::Thm2::H4, p); },
	    "H_4(1) as a single basic hypergeometric sum");
	add("T:H5", "proved", 200, H1(5), [](long p) { return kr::thm2_rhs(kr::Thm2::H5, p); },
	    "H_5(1): Laurent identity, checked from exponent -1 up");
	add("T:H8", "proved", 200, H1(8), [](long p) { return kr::thm2_rhs(kr::Thm2::H8, p); },
	    "H_8(1): single sum plus standalone product");
	add("T:H9", "proved", 200, H1(9), [](long p) { return kr::thm2_rhs(kr::Thm2::H9, p); },
	    "H_9(1) as a single basic hypergeometric sum");

	/* Inputs from McLaughlin-Sills, and the reduction used to finish H_1. */
	add("EqH1Final", "proved", 200, [](long p) { return kr::eqh1final_lhs(p); },
	    [](long p) { return kr::eqh1final_rhs(p); },
	    "the r-sum evaluation behind D(1) in the H_1 proof");
	add("MS1.12", "classical", 200, [](long p) { return kr::ms112_lhs(p); },
	    [](long p) { return kr::ms112_rhs(p); }, "McLaughlin-Sills (1.12)");
	add("MS1.30", "classical", 200, [](long p) { return kr::ms130_lhs(p); },
	    [](long p) { return kr::ms130_rhs(p); },
	    "McLaughlin-Sills (1.30) in the form used to close H_3");

	/* Proposition 1 conclusion instances. */
	auto p1 = [](long a, long b) {
		return [a, b](long p) { return kr::prop1_rhs(a, b, p).sum; };
	};
	add("PROP1:2,3", "proved", 200, H1(3), p1(2, 3), "a=2, b=3 gives H_3(1)");
	add("PROP1:-1,3", "proved", 200, H1(4), p1(-1, 3), "a=-1, b=3 gives H_4(1), i.e. T:H4");
	add("PROP1:3,1", "proved", 200,
	    [](long p) { return kr::H_at_x_qpow(HSeriesParams::catalog(5), 2, p); }, p1(3, 1),
	    "a=3, b=1 gives H_5(q^2)");
	add("PROP1:3,-1", "proved", 200, [](long p) { return kr::J5_at_x1(p); }, p1(3, -1),
	    "a=3, b=-1 gives J_5(1)");
	add("PROP1:0,1", "proved", 200, H1(6), p1(0, 1), "a=0, b=1 gives H_6(1)");
	add("PROP1:0,3", "proved", 200, H1(7), p1(0, 3), "a=0, b=3 gives H_7(1)");
	add("PROP1:1,3", "proved", 200, H1(9), p1(1, 3), "a=1, b=3 gives H_9(1), i.e. T:H9");
	add("PROP1:1,1", "proved", 200, [](long p) { return kr::J8_at_x1(p); }, p1(1, 1),
	    "a=1, b=1 gives J_8(1)");

	/* Prop. 1 remark / a=0 closed products. */
	add("REMARK-P1:b=1", "proved", 150, p1(0, 1),
	    [](long p) { return *kr::prop1_rhs(0, 1, p).closed_product; },
	    "absorbed single sum equals (q^3;q^12)/(q^2,q;q^4)");
	add("REMARK-P1:b=3", "proved", 150, [](long p) { return kr::prop1_remark_sum(3, p); },
	    [](long p) { return kr::prop1_remark_product(3, p); },
	    "the remark display: bare sum equals (q^9;q^12)/(q^2,q^3,q^4;q^4)");
	add("PROP1:0,3:closed", "internal-crosscheck", 150, p1(0, 3),
	    [](long p) { return *kr::prop1_rhs(0, 3, p).closed_product; },
	    "single sum vs closed product, both computed here");

	/* Proposition 2 conclusion instances. */
	add("PROP2:-2,4,6", "proved", 150, [](long p) { return kr::J_at_x1(kr::JFamily::J10, p); },
	    [](long p) { return kr::prop2_rhs_at_x1(-2, 4, 6, 1, 0, p); },
	    "J_10(1) = (-q^5;q^6) 2phi1[q^-1,q;q^4;q^6,-q^5]");
	add("PROP2:2,6,8", "proved", 150, [](long p) { return kr::J_at_x1(kr::JFamily::J11, p); },
	    [](long p) { return kr::prop2_rhs_at_x1(2, 6, 8, 1, 0, p); },
	    "J_11(1) = (-q^5;q^6) 2phi1[q^3,q;q^8;q^6,-q^5]");
	add("PROP2:-2,4,8", "proved", 150, [](long p) { return kr::J_at_x1(kr::JFamily::J12_0, p); },
	    [](long p) { return kr::prop2_rhs_at_x1(-2, 4, 8, 1, 0, p); },
	    "J_{12,0}(1) = (-q^5;q^6) 2phi1[q^-1,q^3;q^4;q^6,-q^5]");
	add("PROP2:4,8,10", "proved", 150, [](long p) { return kr::J_at_x1(kr::JFamily::J12_2, p); },
	    [](long p) { return kr::prop2_rhs_at_x1(4, 8, 10, 1, 0, p); },
	    "J_{12,2}(1) = (-q^5;q^6) 2phi1[q^3,q^5;q^10;q^6,-q^5]");

	/* Bridges the paper states on the way (built from different routes here). */
	add("H10-EULER", "internal-crosscheck", 200, H1(10),
	    [](long p) {
		    return (poch(PochhammerSpec::infinite(1, 1, -1), p) * kr::J_at_x1(kr::JFamily::J10, p))
		        .truncated(p);
	    },
	    "H_10(1) = (-q;q) J_10(1)");
	add("H11-EULER", "internal-crosscheck", 200, H1(11),
	    [](long p) {
		    return (poch(PochhammerSpec::infinite(2, 1, -1), p) * kr::J_at_x1(kr::JFamily::J11, p))
		        .truncated(p);
	    },
	    "H_11(1) = (-q^2;q) J_11(1)");
	add("J8-BRIDGE", "internal-crosscheck", 200, H1(8),
	    [](long p) {
		    return (kr::J8_at_x1(p) +
		            kr::H_at_x1(HSeriesParams::catalog(9), p).shifted(1).truncated(p))
		        .truncated(p);
	    },
	    "H_8(1) = J_8(1) + q H_9(1)");
	add("J5-BRIDGE", "internal-crosscheck", 200, H1(5),
	    [](long p) {
		    return (kr::J5_at_x1(p) +
		            kr::H_at_x_qpow(HSeriesParams::catalog(5), 2, p).shifted(3).truncated(p))
		        .truncated(p);
	    },
	    "H_5(1) = J_5(1) + q^3 H_5(q^2)");

	/* Section 5 conjecture and Section 6 extra identity. */
	add("SEC5", "conjectural", 200, [](long p) { return kr::sec5_lhs_via_euler(p); },
	    [](long p) { return prod({{{2}, 3}, {{1, 6, 9}, 12}}, {}, p); },
	    "(-q;q)J_{12,0}(1) + q^2(-q^3;q)J_{12,2}(1) - q^5(-q^4;q)J_{12,3}(1)"
	    " = 1/((q^2;q^3)(q,q^6,q^9;q^12))");
	add("SEC5:routes", "internal-crosscheck", 200, [](long p) { return kr::sec5_lhs_triple_sum(p); },
	    [](long p) { return kr::sec5_lhs_via_euler(p); },
	    "displayed triple sum vs the three-J decomposition");
	add("SEC6", "conjectural", 200, [](long p) { return kr::sec6_sum_at_x1(p); }, sec6_rhs,
	    "triple sum = q^{-1}(1+q+q^2)/((q^3;q^4)(q^4,q^5;q^12))");
	add("SEC6:H9", "internal-crosscheck", 200, [](long p) { return kr::sec6_sum_at_x1(p); },
	    [](long p) {
		    LaurentSeries pre = LaurentSeries::monomial(1, -1) + LaurentSeries::one() +
		                        LaurentSeries::monomial(1, 1);
		    return (pre * kr::H_at_x1(HSeriesParams::catalog(9), p + 1)).truncated(p);
	    },
	    "the Section 6 sum equals q^{-1}(1+q+q^2) H_9(1)");

	/* Classical suite at its documented grid. */
	for (const auto& ci : classical::classical_identities())
		add(ci.id, "classical", 100, ci.lhs, ci.rhs);

	return out;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
	static const std::vector<IdentityRecord> cat = make_catalog();
	return cat;
}

const IdentityRecord& find_record(const std::string& id) {
	for (const auto& rec : catalog())
		if (rec.id == id) return rec;
	throw UnknownIdentity(id);
}

VerificationReport run_record(const IdentityRecord& rec, long order) {
	auto t0 = std::chrono::steady_clock::now();
	VerificationReport rep = VerificationReport::pass(rec.id, order);
	rep.status = rec.status;
	try {
		LaurentSeries lhs = rec.lhs(order);
		LaurentSeries rhs = rec.rhs(order);
		if (auto mm = lhs.first_mismatch(rhs, order)) rep.note_mismatch(*mm);
	} catch (const SeriesError& e) {
		rep.passed = false;
		rep.detail = e.what();
	}
	rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                     std::chrono::steady_clock::now() - t0)
	                     .count();
	return rep;
}

VerificationReport run(const std::string& id, long order) {
	return run_record(find_record(id), order);
}

std::vector<VerificationReport> run_all(std::optional<long> order_override, int jobs) {
	const auto& cat = catalog();
	std::vector<VerificationReport> out(cat.size());
	std::atomic<size_t> next{0};
	auto worker = [&] {
		for (;;) {
			size_t i = next.fetch_add(1);
			if (i >= cat.size()) return;
			long order = order_override.value_or(cat[i].default_order);
			out[i] = run_record(cat[i], order);
		}
	};
	if (jobs <= 1) {
		worker();
	} else {
		std::vector<std::thread> pool;
		for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
		for (auto& th : pool) th.join();
	}
	return out;
}

namespace {

std::vector<OracleEntry> make_oracle_entries() {
	std::vector<OracleEntry> out;
	auto add = [&](std::string id, std::vector<std::pair<std::vector<long>, long>> dens,
	               std::vector<std::pair<std::vector<long>, long>> nums) {
		out.push_back({std::move(id), classes(dens, nums),
		               [dens, nums](long p) { return prod(dens, nums, p); }});
	};
	add("C:H1", {{{1, 4, 6, 8, 11}, 12}}, {});
	add("C:H2", {{{2, 3, 4}, 6}}, {{{6}, 12}});
	add("C:H3", {{{4, 5, 6, 7, 8}, 12}}, {});
	add("C:H4", {{{1}, 4}, {{4, 11}, 12}}, {});
	add("C:H5", {{{1}, 4}, {{7, 8}, 12}}, {});
	add("C:H6", {{{1, 2}, 4}}, {{{3}, 12}});
	add("C:H7", {{{2, 3}, 4}}, {{{9}, 12}});
	add("C:H8", {{{3}, 4}, {{1, 8}, 12}}, {});
	add("C:H9", {{{3}, 4}, {{4, 5}, 12}}, {});
	add("C:H10", {{{1}, 3}, {{3, 6, 11}, 12}}, {});
	add("C:H11", {{{2}, 3}, {{3, 6, 7}, 12}}, {});
	add("SEC5", {{{2}, 3}, {{1, 6, 9}, 12}}, {});
	add("SEC6:product", {{{3}, 4}, {{4, 5}, 12}}, {});
	add("EqH1Final:rhs", {{{2}, 2}, {{1, 11}, 12}}, {{{1}, 2}, {{2, 10, 12}, 12}});
	add("MS1.30:rhs", {{{4, 5, 6, 7, 8, 10, 14}, 12}, {{6}, 12}}, {});
	add("REMARK-P1:b=3", {{{2, 3, 4}, 4}}, {{{9}, 12}});
	add("PROP1-closed:b=1", {{{1, 2}, 4}}, {{{3}, 12}});
	add("PROP1-closed:b=3", {{{2, 3}, 4}}, {{{9}, 12}});
	/* MS1.12's right side carries a (-q;q^2) factor: arg_sign = -1 class. */
	{
		std::vector<PartitionClass> cls = {{2, 2, -1, +1}, {1, 2, +1, -1}, {1, 12, +1, +1},
		                                   {11, 12, +1, +1}, {12, 12, +1, +1}, {10, 24, +1, +1},
		                                   {14, 24, +1, +1}};
		std::vector<ProductFactor> fs = {
		    {PochhammerSpec::infinite(2, 2), -1},      {PochhammerSpec::infinite(1, 2, -1), +1},
		    {PochhammerSpec::infinite(1, 12), +1},     {PochhammerSpec::infinite(11, 12), +1},
		    {PochhammerSpec::infinite(12, 12), +1},    {PochhammerSpec::infinite(10, 24), +1},
		    {PochhammerSpec::infinite(14, 24), +1}};
		out.push_back({"MS1.12:rhs", cls, [fs](long p) { return product_side(fs, p); }});
	}
	return out;
}

}  // namespace

const std::vector<OracleEntry>& oracle_entries() {
	static const std::vector<OracleEntry> entries = make_oracle_entries();
	return entries;
}

std::vector<VerificationReport> oracle_crosschecks(long order) {
	std::vector<VerificationReport> out;
	for (const auto& e : oracle_entries()) {
		auto t0 = std::chrono::steady_clock::now();
		VerificationReport rep = VerificationReport::pass("ORACLE:" + e.id, order);
		rep.status = "internal-crosscheck";
		LaurentSeries dp = oracle_partitions(e.classes, order);
		if (auto mm = e.product(order).first_mismatch(dp, order)) rep.note_mismatch(*mm);
		rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
		                     std::chrono::steady_clock::now() - t0)
		                     .count();
		out.push_back(std::move(rep));
	}
	return out;
}

std::string report_to_json(const VerificationReport& rep) {
	json j;
	j["id"] = rep.id;
	j["status"] = rep.status;
	j["order"] = rep.order_checked;
	j["passed"] = rep.passed;
	if (rep.first_mismatch) {
		j["first_mismatch"] = {{"exp", rep.first_mismatch->exp},
		                       {"lhs", rep.first_mismatch->lhs.get_str()},
		                       {"rhs", rep.first_mismatch->rhs.get_str()}};
	} else {
		j["first_mismatch"] = nullptr;
	}
	j["elapsed_ms"] = rep.elapsed_ms;
	return j.dump();
}

std::string reports_to_json(const std::vector<VerificationReport>& reps) {
	json arr = json::array();
	for (const auto& r : reps) arr.push_back(json::parse(report_to_json(r)));
	return arr.dump(2);
}

namespace {
VerificationReport report_from_jobj(const json& j) {
	VerificationReport rep;
	rep.id = j.at("id").get<std::string>();
	rep.status = j.at("status").get<std::string>();
	rep.order_checked = j.at("order").get<long>();
	rep.passed = j.at("passed").get<bool>();
	if (!j.at("first_mismatch").is_null()) {
		const auto& m = j.at("first_mismatch");
		rep.first_mismatch = Mismatch{m.at("exp").get<long>(),
		                              Int(m.at("lhs").get<std::string>()),
		                              Int(m.at("rhs").get<std::string>())};
	}
	rep.elapsed_ms = j.at("elapsed_ms").get<long>();
	return rep;
}
}  // namespace

VerificationReport report_from_json(const std::string& s) {
	return report_from_jobj(json::parse(s));
}

std::vector<VerificationReport> reports_from_json(const std::string& s) {
	std::vector<VerificationReport> out;
	for (const auto& j : json::parse(s)) out.push_back(report_from_jobj(j));
	return out;
}

std::string report_text_line(const VerificationReport& rep, bool with_elapsed) {
	std::ostringstream os;
	os << (rep.passed ? "PASS " : "FAIL ") << rep.id << "  [" << rep.status << "]  order "
	   << rep.order_checked;
	if (with_elapsed) os << "  (" << rep.elapsed_ms << " ms)";
	if (rep.first_mismatch) {
		os << "  first mismatch at q^" << rep.first_mismatch->exp << ": lhs "
		   << rep.first_mismatch->lhs.get_str() << " vs rhs " << rep.first_mismatch->rhs.get_str();
	}
	if (!rep.passed && !rep.detail.empty()) os << "  (" << rep.detail << ")";
	return os.str();
}

long default_order_from_env(long fallback) {
	const char* env = std::getenv("QRV_DEFAULT_ORDER");
	if (!env || !*env) return fallback;
	char* end = nullptr;
	long v = std::strtol(env, &end, 10);
	if (end == env || v < 1) return fallback;
	return v;
}

}  // namespace verify
}  // namespace qrv
