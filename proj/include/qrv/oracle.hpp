#pragma once

#include <vector>

#include "qrv/laurent.hpp"

namespace qrv {

/* One congruence class of parts for the brute-force partition counter.
 * exp_sign = -1 puts the class in the denominator (ordinary parts, any
 * multiplicity); exp_sign = +1 applies the numerator sieve (distinct parts
 * with alternating sign, i.e. multiplication by (1 -+ q^p) factors).
 * arg_sign = -1 flips the factor to (1 + q^p) form, as in (-q;q^2)_inf. */
struct PartitionClass {
	long residue;
	long modulus;
	int exp_sign = -1;
	int arg_sign = +1;
};

/* Generating function of the product over the given classes, computed by
 * dynamic programming over allowed parts only — no series division — so it
 * is an independent oracle for every product side. Coefficients are exact
 * for all exponents < limit. */
LaurentSeries oracle_partitions(const std::vector<PartitionClass>& classes, long limit);

}  // namespace qrv
