#pragma once

#include <optional>
#include <string>

#include "qrv/laurent.hpp"

namespace qrv {

struct Mismatch {
	long exp = 0;
	Int lhs;
	Int rhs;
};

/* Outcome of one check. passed is true exactly when first_mismatch is
 * absent. detail carries human-readable context (failing cell, sweep
 * ranges); it is not part of the JSON schema. */
struct VerificationReport {
	std::string id;
	std::string status; /* proved | conjectural | classical | internal-crosscheck | ... */
	long order_checked = 0;
	bool passed = false;
	std::optional<Mismatch> first_mismatch;
	long elapsed_ms = 0;
	std::string detail;

	static VerificationReport pass(std::string id, long order) {
		VerificationReport r;
		r.id = std::move(id);
		r.order_checked = order;
		r.passed = true;
		return r;
	}
	static VerificationReport fail(std::string id, long order, Mismatch mm, std::string detail = {}) {
		VerificationReport r;
		r.id = std::move(id);
		r.order_checked = order;
		r.passed = false;
		r.first_mismatch = std::move(mm);
		r.detail = std::move(detail);
		return r;
	}

	void note_mismatch(const LaurentSeries::Mismatch& mm, std::string where = {}) {
		passed = false;
		first_mismatch = Mismatch{mm.exp, mm.lhs, mm.rhs};
		if (!where.empty()) detail = std::move(where);
	}
};

}  // namespace qrv
