#include "qrv/oracle.hpp"

#include <stdexcept>

namespace qrv {

LaurentSeries oracle_partitions(const std::vector<PartitionClass>& classes, long limit) {
	if (limit <= 0) return LaurentSeries::zero(limit);
	std::vector<Int> cnt(static_cast<size_t>(limit));
	cnt[0] = 1;
	for (const auto& cls : classes) {
		if (cls.modulus < 1 || cls.residue < 1)
			throw std::invalid_argument("oracle_partitions: parts must be positive");
		if (cls.exp_sign < 0) {
			/* Unbounded multiplicity: unbounded-knapsack pass per part. */
			for (long p = cls.residue; p < limit; p += cls.modulus) {
				for (long n = p; n < limit; ++n) {
					if (cls.arg_sign > 0)
						cnt[static_cast<size_t>(n)] += cnt[static_cast<size_t>(n - p)];
					else {
						/* 1/(1+q^p) = sum (-1)^m q^{pm} */
						cnt[static_cast<size_t>(n)] -= cnt[static_cast<size_t>(n - p)];
					}
				}
			}
		} else {
			/* Sieve: multiply by (1 - q^p) (or (1 + q^p) for arg_sign = -1),
			 * one downward pass per part keeps each part used at most once. */
			for (long p = cls.residue; p < limit; p += cls.modulus) {
				for (long n = limit - 1; n >= p; --n) {
					if (cls.arg_sign > 0)
						cnt[static_cast<size_t>(n)] -= cnt[static_cast<size_t>(n - p)];
					else
						cnt[static_cast<size_t>(n)] += cnt[static_cast<size_t>(n - p)];
				}
			}
		}
	}
	return LaurentSeries(0, std::move(cnt), limit);
}

}  // namespace qrv
