#include "density.hpp"

#include <set>

#include "gf.hpp"
#include "primes.hpp"

namespace mcs {

namespace {

std::vector<mpz_class> checked_odd_prime_moduli(
    const std::vector<mpz_class>& moduli) {
  std::set<mpz_class> seen;
  for (const auto& q : moduli) {
    if (q == 2) fail("modulus_two", "modulus 2 makes the density factor 0");
    if (!is_prime(q)) fail("not_prime", q.get_str() + " is not prime");
    if (!seen.insert(q).second)
      fail("bad_input", "repeated modulus " + q.get_str());
  }
  return std::vector<mpz_class>(seen.begin(), seen.end());
}

}  // namespace

Rat theoretical_density(const std::vector<mpz_class>& moduli) {
  auto qs = checked_odd_prime_moduli(moduli);
  Rat prod(1);
  for (const auto& q : qs) {
    Rat f(mpz_class(q - 2), mpz_class(q - 1));
    f.canonicalize();
    prod *= f;
  }
  prod.canonicalize();
  return prod;
}

DensityReport empirical_density(const std::vector<mpz_class>& moduli,
                                unsigned long limit) {
  auto qs = checked_odd_prime_moduli(moduli);
  if (limit < 3) fail("bad_input", "cutoff too small");
  std::vector<unsigned long> small;
  for (const auto& q : qs) {
    if (!mpz_fits_ulong_p(q.get_mpz_t()))
      fail("bad_input", "modulus too large for empirical counting");
    small.push_back(q.get_ui());
  }
  auto primes = sieve_primes(limit);
  unsigned long members = 0;
  for (unsigned long p : primes) {
    bool member = true;
    for (unsigned long q : small) {
      if (p % q == 1) {
        member = false;
        break;
      }
    }
    if (member) ++members;
  }
  DensityReport rep;
  rep.moduli = qs;
  rep.limit = limit;
  rep.primes_below = primes.size();
  rep.members_below = members;
  rep.empirical = Rat(members, primes.empty() ? 1 : primes.size());
  rep.empirical.canonicalize();
  rep.theoretical = theoretical_density(qs);
  return rep;
}

GreedyReport greedy_density_set(const Rat& alpha, const Rat& eps) {
  if (alpha <= 0 || alpha > 1) fail("bad_input", "alpha must be in (0,1]");
  if (eps <= 0) fail("bad_input", "eps must be positive");
  if (alpha - eps <= 0)
    fail("infeasible", "alpha - eps must be positive for the guarantee");
  Rat upper = alpha + eps;
  Rat floor_ratio = (alpha * alpha) / (upper * upper);
  floor_ratio.canonicalize();

  GreedyReport rep;
  rep.alpha = alpha;
  rep.eps = eps;

  unsigned long bound = 1ul << 12;
  auto primes = sieve_primes(bound);
  size_t pos = 1;  // skip 2: its factor is 0
  auto next_prime = [&]() -> unsigned long {
    while (pos >= primes.size()) {
      bound *= 4;
      if (bound > (1ul << 31)) fail("enumeration_too_large", "greedy overran the sieve");
      primes = sieve_primes(bound);
    }
    return primes[pos++];
  };

  // First odd prime whose factor clears the squared threshold.
  unsigned long q = next_prime();
  for (;;) {
    Rat f(q - 2, q - 1);
    if (f > floor_ratio) break;
    q = next_prime();
  }
  // Accumulate while the running product still reaches alpha + eps. The
  // product is kept as a raw numerator/denominator pair: consecutive
  // q-2, q-1 are coprime but cross-factor gcds would force a large
  // canonicalization on every step.
  mpz_class num = 1;
  mpz_class den = 1;
  const mpz_class& unum = upper.get_num();
  const mpz_class& uden = upper.get_den();
  while (num * uden >= unum * den) {
    num *= q - 2;
    den *= q - 1;
    rep.primes.emplace_back(q);
    q = next_prime();
  }
  rep.product = Rat(num, den);
  rep.product.canonicalize();
  rep.error = rep.product - alpha;
  if (rep.error < 0) rep.error = -rep.error;
  if (rep.error >= eps)
    fail("internal", "greedy guarantee violated");
  return rep;
}

}  // namespace mcs
