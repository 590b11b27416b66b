#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrv/oracle.hpp"
#include "qrv/report.hpp"

namespace qrv {
namespace verify {

struct UnknownIdentity : SeriesError {
	explicit UnknownIdentity(const std::string& id) : SeriesError("unknown identity: " + id) {}
};

/* One named LHS/RHS pair of series builders. status is one of proved,
 * conjectural, classical, internal-crosscheck (conjectural-external is
 * reserved for externally conjectured inputs; see the note fields on
 * C:H2/C:H3). */
struct IdentityRecord {
	std::string id;
	std::string status;
	long default_order;
	std::function<LaurentSeries(long)> lhs;
	std::function<LaurentSeries(long)> rhs;
	std::string note;
};

const std::vector<IdentityRecord>& catalog();
const IdentityRecord& find_record(const std::string& id);

VerificationReport run(const std::string& id, long order);
VerificationReport run_record(const IdentityRecord& rec, long order);

/* Runs every record (order_override replaces each record's default); jobs
 * > 1 dispatches records to a worker pool, reports stay in catalog order. */
std::vector<VerificationReport> run_all(std::optional<long> order_override, int jobs = 1);

/* Every pure-product side in the catalog, paired with its congruence-class
 * description for the independent partition oracle. */
struct OracleEntry {
	std::string id;
	std::vector<PartitionClass> classes;
	std::function<LaurentSeries(long)> product;
};
const std::vector<OracleEntry>& oracle_entries();
std::vector<VerificationReport> oracle_crosschecks(long order);

/* JSON (en|de)coding of reports, schema:
 * {id, status, order, passed, first_mismatch: {exp, lhs, rhs}|null, elapsed_ms} */
std::string report_to_json(const VerificationReport& rep);
std::string reports_to_json(const std::vector<VerificationReport>& reps);
VerificationReport report_from_json(const std::string& json);
std::vector<VerificationReport> reports_from_json(const std::string& json);

/* One table line. Batch output omits elapsed_ms so that identical inputs
 * produce byte-identical text regardless of parallelism or machine. */
std::string report_text_line(const VerificationReport& rep, bool with_elapsed = true);

long default_order_from_env(long fallback);

}  // namespace verify
}  // namespace qrv
