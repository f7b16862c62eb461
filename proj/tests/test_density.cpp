#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "density.hpp"
#include "error.hpp"
#include "primes.hpp"

using namespace mcs;

namespace {

bool trial_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("theoretical densities multiply the per-modulus factors") {
  CHECK(theoretical_density({mpz_class(3)}) == Rat(1, 2));
  CHECK(theoretical_density({mpz_class(3), mpz_class(5)}) == Rat(3, 8));
  CHECK(theoretical_density({mpz_class(3), mpz_class(5), mpz_class(7)}) ==
        Rat(5, 16));
  CHECK(theoretical_density({mpz_class(5), mpz_class(3)}) == Rat(3, 8));
  CHECK(theoretical_density({}) == Rat(1));

  try {
    theoretical_density({mpz_class(2)});
    FAIL("expected modulus_two");
  } catch (const Error& e) {
    CHECK(e.code == "modulus_two");
  }
  CHECK_THROWS_AS(theoretical_density({mpz_class(9)}), Error);
  CHECK_THROWS_AS(theoretical_density({mpz_class(3), mpz_class(3)}), Error);
}

TEST_CASE("empirical counts match trial division") {
  DensityReport r = empirical_density({mpz_class(3)}, 10);
  CHECK(r.primes_below == 4);
  CHECK(r.members_below == 3);
  CHECK(r.empirical == Rat(3, 4));
  CHECK(r.theoretical == Rat(1, 2));
  CHECK(r.limit == 10);
  CHECK(r.moduli == std::vector<mpz_class>{mpz_class(3)});

  for (auto moduli : std::vector<std::vector<mpz_class>>{
           {mpz_class(3)}, {mpz_class(3), mpz_class(5)}}) {
    DensityReport rep = empirical_density(moduli, 10000);
    unsigned long primes = 0, members = 0;
    for (unsigned long n = 2; n < 10000; ++n) {
      if (!trial_prime(n)) continue;
      ++primes;
      bool member = true;
      for (const auto& q : moduli)
        if (n % q.get_ui() == 1) member = false;
      if (member) ++members;
    }
    CHECK(primes == 1229);
    CHECK(rep.primes_below == primes);
    CHECK(rep.members_below == members);
    CHECK(rep.empirical == Rat(members, primes));
  }

  CHECK_THROWS_AS(empirical_density({mpz_class(2)}, 100), Error);
  CHECK_THROWS_AS(empirical_density({mpz_class(3)}, 2), Error);
}

TEST_CASE("greedy prime selection lands inside the target window") {
  GreedyReport r = greedy_density_set(Rat(1, 2), Rat(1, 20));
  CHECK(r.primes == std::vector<mpz_class>{mpz_class(7), mpz_class(11),
                                           mpz_class(13), mpz_class(17),
                                           mpz_class(19), mpz_class(23),
                                           mpz_class(29), mpz_class(31)});
  CHECK(r.product == Rat(4437, 8192));
  CHECK(r.error == Rat(341, 8192));

  // Confirm the frozen product against the density formula directly.
  Rat prod(1);
  for (const auto& q : r.primes) {
    prod *= Rat(mpz_class(q - 2), mpz_class(q - 1));
    prod.canonicalize();
  }
  CHECK(prod == r.product);
  CHECK(prod == theoretical_density(r.primes));

  GreedyReport top = greedy_density_set(Rat(1), Rat(1, 10));
  CHECK(top.primes.empty());
  CHECK(top.product == Rat(1));
  CHECK(top.error == Rat(0));

  for (auto [num, den] : std::vector<std::pair<long, long>>{
           {1, 2}, {3, 10}, {7, 10}, {9, 10}}) {
    for (long edenom : {10L, 20L, 50L}) {
      GreedyReport g = greedy_density_set(Rat(num, den), Rat(1, edenom));
      CHECK(g.error < Rat(1, edenom));
      CHECK(g.error >= 0);
      for (size_t i = 1; i < g.primes.size(); ++i)
        CHECK(g.primes[i - 1] < g.primes[i]);
      for (const auto& q : g.primes) CHECK(q > 2);
    }
  }

  try {
    greedy_density_set(Rat(1, 10), Rat(1, 10));
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.code == "infeasible");
  }
  CHECK_THROWS_AS(greedy_density_set(Rat(0), Rat(1, 10)), Error);
  CHECK_THROWS_AS(greedy_density_set(Rat(3, 2), Rat(1, 10)), Error);
  CHECK_THROWS_AS(greedy_density_set(Rat(1, 2), Rat(0)), Error);
}

TEST_CASE("prime sieves are complete and confirmed") {
  std::vector<unsigned long> p100 = sieve_primes(100);
  CHECK(p100.size() == 25);
  CHECK(p100 == std::vector<unsigned long>{2,  3,  5,  7,  11, 13, 17, 19, 23,
                                           29, 31, 37, 41, 43, 47, 53, 59, 61,
                                           67, 71, 73, 79, 83, 89, 97});
  for (unsigned long n = 2; n < 100; ++n) {
    bool listed = std::find(p100.begin(), p100.end(), n) != p100.end();
    CHECK(listed == trial_prime(n));
  }

  CHECK(consecutive_primes(10, 5) ==
        std::vector<mpz_class>{11, 13, 17, 19, 23});
  CHECK(consecutive_primes(2, 4) == std::vector<mpz_class>{2, 3, 5, 7});
  CHECK(consecutive_primes(13, 1) == std::vector<mpz_class>{13});

  // No prime may fall strictly between consecutive entries.
  std::vector<mpz_class> run = consecutive_primes(mpz_class(1000000), 50);
  REQUIRE(run.size() == 50);
  for (size_t i = 0; i < run.size(); ++i) {
    CHECK(mpz_probab_prime_p(run[i].get_mpz_t(), 40) != 0);
    if (i + 1 < run.size()) {
      mpz_class next;
      mpz_nextprime(next.get_mpz_t(), run[i].get_mpz_t());
      CHECK(next == run[i + 1]);
    }
  }
}
