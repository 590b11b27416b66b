#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qrv/catalog.hpp"
#include "qrv/certificates.hpp"
#include "qrv/kr.hpp"
#include "qrv/recurrences.hpp"

using namespace qrv;

namespace {

int report_outcome(const std::vector<VerificationReport>& reps, const std::string& format,
                   const std::string& out_path) {
	bool all_pass = true;
	for (const auto& r : reps) all_pass = all_pass && r.passed;
	if (format == "json") {
		std::cout << verify::reports_to_json(reps) << "\n";
	} else {
		for (const auto& r : reps) std::cout << verify::report_text_line(r) << "\n";
		std::cout << (all_pass ? "all checks passed" : "at least one check FAILED") << "\n";
	}
	if (!out_path.empty()) {
		std::ofstream f(out_path);
		f << verify::reports_to_json(reps) << "\n";
	}
	return all_pass ? 0 : 1;
}

/* c is given as 2c/2: accepts "5/2", "-1/2", "1", "2.5", "-0.5". */
long parse_two_c(const std::string& s) {
	auto slash = s.find('/');
	if (slash != std::string::npos) {
		long num = std::stol(s.substr(0, slash));
		long den = std::stol(s.substr(slash + 1));
		if (den == 1) return 2 * num;
		if (den == 2) return num;
		throw CLI::ValidationError("--c", "denominator must be 1 or 2");
	}
	auto dot = s.find('.');
	if (dot != std::string::npos) {
		long whole = std::stol(s.substr(0, dot));
		std::string frac = s.substr(dot + 1);
		if (frac == "0") return 2 * whole;
		if (frac == "5") return 2 * whole + (s[0] == '-' ? -1 : 1);
		throw CLI::ValidationError("--c", "only half-integers are admissible");
	}
	return 2 * std::stol(s);
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact q-series verification suite for the Kanade-Russell mod-12 identities"};
	app.require_subcommand(1);

	auto* list_cmd = app.add_subcommand("list", "print the identity catalog");

	auto* run_cmd = app.add_subcommand("run", "verify identities coefficient-by-coefficient");
	std::string run_id, run_format = "text", run_out;
	bool run_all_flag = false;
	long run_order = 0;
	int run_jobs = 1;
	run_cmd->add_option("--id", run_id, "identity id (see `list`)");
	run_cmd->add_flag("--all", run_all_flag, "run every catalog record");
	run_cmd->add_option("--order", run_order, "truncation order (default: per record)");
	run_cmd->add_option("--jobs", run_jobs, "worker threads for --all");
	run_cmd->add_option("--format", run_format, "text|json")
	    ->check(CLI::IsMember({"text", "json"}));
	run_cmd->add_option("--out", run_out, "write the JSON report to a file");

	auto* recur_cmd = app.add_subcommand("recur", "verify h_{c,d,N} recurrences");
	std::string recur_family, recur_c = "0";
	long recur_d = 0, recur_nmax = 40, recur_qprec = 0;
	recur_cmd->add_option("--family", recur_family, "LONG|D0|DM1|CD32|BASIC")->required();
	recur_cmd->add_option("--c", recur_c, "c as integer, decimal or fraction (e.g. 5/2)");
	recur_cmd->add_option("--d", recur_d, "d");
	recur_cmd->add_option("--nmax", recur_nmax, "largest N checked");
	recur_cmd->add_option("--qprec", recur_qprec, "q-precision (default max(200, 6*nmax+20))");

	auto* wz_cmd = app.add_subcommand("wz", "verify the q-Zeilberger telescoping certificates");
	std::string wz_family;
	long wz_kmax = 30, wz_mmax = 30, wz_qprec = 0;
	wz_cmd->add_option("--family", wz_family, "J10|J11|J12_0|J12_2")->required();
	wz_cmd->add_option("--kmax", wz_kmax, "largest k");
	wz_cmd->add_option("--mmax", wz_mmax, "largest M");
	wz_cmd->add_option("--qprec", wz_qprec, "q-precision (default 300)");

	auto* oracle_cmd = app.add_subcommand("oracle", "brute-force partition generating function");
	std::string oracle_classes;
	long oracle_limit = 50;
	oracle_cmd
	    ->add_option("--classes", oracle_classes,
	                 "semicolon-separated residue,modulus,sign[,argsign] (sign -1 = denominator"
	                 " class, +1 = numerator sieve)")
	    ->required();
	oracle_cmd->add_option("--limit", oracle_limit, "exclusive exponent bound");

	auto* funceq_cmd = app.add_subcommand("funceq", "verify a q-difference functional equation");
	std::string funceq_name = "ALL";
	long funceq_xcap = 12, funceq_qprec = 150;
	funceq_cmd->add_option("--name", funceq_name, "equation name or ALL");
	funceq_cmd->add_option("--xcap", funceq_xcap, "largest x power compared");
	funceq_cmd->add_option("--qprec", funceq_qprec, "q-precision");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		if (*list_cmd) {
			for (const auto& rec : verify::catalog()) {
				std::cout << rec.id << "\t[" << rec.status << "]\torder " << rec.default_order;
				if (!rec.note.empty()) std::cout << "\t" << rec.note;
				std::cout << "\n";
			}
			return 0;
		}

		if (*run_cmd) {
			if (run_cmd->count("--order") && run_order < 1) {
				std::cerr << "error: --order must be >= 1\n";
				return 2;
			}
			if (run_all_flag == run_cmd->count("--id")) {
				std::cerr << "error: pass exactly one of --id or --all\n";
				return 2;
			}
			std::optional<long> order;
			if (run_cmd->count("--order")) order = run_order;
			std::vector<VerificationReport> reps;
			if (run_all_flag) {
				std::optional<long> eff = order;
				if (!eff) {
					long env = verify::default_order_from_env(0);
					if (env > 0) eff = env;
				}
				reps = verify::run_all(eff, std::max(1, run_jobs));
			} else {
				const auto& rec = verify::find_record(run_id);
				long eff = order.value_or(verify::default_order_from_env(rec.default_order));
				reps.push_back(verify::run_record(rec, eff));
			}
			return report_outcome(reps, run_format, run_out);
		}

		if (*recur_cmd) {
			if (recur_nmax < 0 || (recur_qprec && recur_qprec < 1)) {
				std::cerr << "error: invalid sweep bounds\n";
				return 2;
			}
			long qprec = recur_qprec ? recur_qprec : std::max(200L, 6 * recur_nmax + 20);
			long two_c = parse_two_c(recur_c);
			std::vector<VerificationReport> reps;
			if (recur_family == "BASIC") {
				reps.push_back(rec::check_basic_relations(two_c, recur_d, recur_nmax, qprec));
			} else {
				auto fam = rec::h_rec_family_from_string(recur_family);
				reps.push_back(rec::check_h_recurrence(fam, two_c, recur_d, recur_nmax, qprec));
			}
			return report_outcome(reps, "text", "");
		}

		if (*wz_cmd) {
			if (wz_kmax < 0 || wz_mmax < 0) {
				std::cerr << "error: invalid sweep bounds\n";
				return 2;
			}
			long qprec = wz_qprec ? wz_qprec : 300;
			auto fam = wz::family_from_string(wz_family);
			std::vector<VerificationReport> reps;
			reps.push_back(wz::check_telescoping(fam, wz_kmax, wz_mmax, qprec));
			reps.push_back(wz::check_summed_recurrence(fam, std::min(wz_mmax, 20L), qprec));
			for (long M : {0L, wz_mmax / 2, wz_mmax})
				reps.push_back(wz::check_vanishing_tail(fam, M, M + 1, M + 20, qprec));
			return report_outcome(reps, "text", "");
		}

		if (*oracle_cmd) {
			std::vector<PartitionClass> cls;
			std::stringstream ss(oracle_classes);
			std::string item;
			while (std::getline(ss, item, ';')) {
				PartitionClass pc{0, 0, -1, +1};
				int n = std::sscanf(item.c_str(), "%ld,%ld,%d,%d", &pc.residue, &pc.modulus,
				                    &pc.exp_sign, &pc.arg_sign);
				if (n < 2) {
					std::cerr << "error: bad class spec '" << item << "'\n";
					return 2;
				}
				cls.push_back(pc);
			}
			if (oracle_limit < 1) {
				std::cerr << "error: --limit must be >= 1\n";
				return 2;
			}
			LaurentSeries gf = oracle_partitions(cls, oracle_limit);
			for (long n = 0; n < oracle_limit; ++n)
				std::cout << n << "\t" << gf.coeff(n).get_str() << "\n";
			return 0;
		}

		if (*funceq_cmd) {
			std::vector<VerificationReport> reps;
			if (funceq_name == "ALL") {
				for (const auto& spec : rec::functional_equations())
					reps.push_back(rec::check_functional_equation(spec, funceq_xcap, funceq_qprec));
			} else {
				reps.push_back(rec::check_functional_equation(rec::functional_equation(funceq_name),
				                                              funceq_xcap, funceq_qprec));
			}
			return report_outcome(reps, "text", "");
		}
	} catch (const verify::UnknownIdentity& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const rec::ParameterMismatch& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const BadParameter& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
