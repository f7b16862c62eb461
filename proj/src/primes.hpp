#pragma once

#include <vector>

#include <gmpxx.h>

namespace mcs {

// All primes below `below`, ascending and complete. Guarded at 2^31.
std::vector<unsigned long> sieve_primes(unsigned long below);

// The first `count` primes >= start, ascending: segmented sieve over
// machine-word ranges, arbitrary-precision trial otherwise. Every returned
// value is confirmed prime. Guarded at count <= 10^6.
std::vector<mpz_class> consecutive_primes(const mpz_class& start,
                                          unsigned long count);

}  // namespace mcs
