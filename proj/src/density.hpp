#pragma once

#include <vector>

#include "linalg.hpp"

namespace mcs {

// Density of {p prime : p != 1 mod q for all q in S} among primes below a
// cutoff, next to the limit value prod (q-2)/(q-1).
struct DensityReport {
  std::vector<mpz_class> moduli;
  unsigned long limit;
  unsigned long primes_below;
  unsigned long members_below;
  Rat empirical;    // members/primes, exact
  Rat theoretical;  // lowest terms
};

// Counts by sieve. Moduli must be distinct odd primes; p = q counts as a
// member (q mod q = 0, never 1). Empty moduli give density 1.
DensityReport empirical_density(const std::vector<mpz_class>& moduli,
                                unsigned long limit);

// prod (q-2)/(q-1) in lowest terms. Errors with "modulus_two" when 2 is
// present (its factor is 0) and "not_prime"/"bad_input" on bad moduli.
Rat theoretical_density(const std::vector<mpz_class>& moduli);

// The greedy selection: starting from the first odd prime q with
// (q-2)/(q-1) > alpha^2/(alpha+eps)^2, accumulate consecutive primes while
// the running product stays >= alpha + eps. All comparisons are exact
// rational, and the result satisfies |product - alpha| < eps.
struct GreedyReport {
  Rat alpha;
  Rat eps;
  std::vector<mpz_class> primes;
  Rat product;
  Rat error;  // |product - alpha|
};

// Requires 0 < alpha <= 1 and eps > 0; errors with "infeasible" when
// alpha - eps <= 0.
GreedyReport greedy_density_set(const Rat& alpha, const Rat& eps);

}  // namespace mcs
