#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrv/phi.hpp"
#include "qrv/report.hpp"

namespace qrv {
namespace classical {

struct ClassicalIdentity {
	std::string id;
	std::function<LaurentSeries(long)> lhs;
	std::function<LaurentSeries(long)> rhs;
};

/* The documented specialization grid for the five classical identities:
 * q-binomial, both Euler identities, Heine, Bailey-Daum, Hall. Parameters
 * are q-power monomials; every point is well-defined (arguments with
 * nonpositive exponent appear only where an upper parameter terminates the
 * sum). */
const std::vector<ClassicalIdentity>& classical_identities();

std::vector<VerificationReport> classical_checks(long order);

}  // namespace classical
}  // namespace qrv
