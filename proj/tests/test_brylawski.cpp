#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "brylawski.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "matroid.hpp"
#include "primes.hpp"

using namespace mcs;

namespace {

std::vector<mpz_class> zv(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool oracle_gb(const std::vector<mpz_class>& primes) {
  mpz_class n = 1;
  for (const auto& p : primes) n *= p;
  n += 1;
  BSequence seq = b_sequence(n);
  for (const auto& p : primes) {
    for (unsigned long i = 0; i + 1 <= seq.s; ++i) {
      for (unsigned long j = i + 1; j <= seq.s; ++j) {
        if ((i == 0 && j == 1) || (i == 1 && j == 2)) continue;
        mpz_class d = (seq.b[j] - seq.b[i]) % p;
        if (d < 0) d += p;
        if (d == 0 || d == 1 || d == p - 1) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<mpz_class>> found_sets(const GBSearchResult& r) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& rep : r.found) out.push_back(rep.primes);
  return out;
}

QSubspace row_space_over_q(const BrylawskiMatrix& m) {
  Mat<QDom> rows(3);
  for (const auto& col : m.columns)
    for (size_t r = 0; r < 3; ++r) rows[r].push_back(Rat(col[r]));
  return make_subspace(QDom{}, m.labels, std::move(rows));
}

std::vector<std::vector<mpz_class>> closing_minor(const BrylawskiMatrix& m) {
  size_t w1 = 6, us = m.columns.size() - 1;
  std::vector<std::vector<mpz_class>> rows(3);
  for (size_t r = 0; r < 3; ++r)
    rows[r] = {m.columns[0][r], m.columns[w1][r], m.columns[us][r]};
  return rows;
}

}  // namespace

TEST_CASE("binary expansion sequences follow the doubling law") {
  BSequence s6 = b_sequence(6);
  CHECK(s6.s == 2);
  CHECK(s6.b == zv({0, 1, 3}));
  CHECK(b_sequence(7).b == zv({0, 1, 3}));
  CHECK(b_sequence(8).b == zv({0, 1, 2, 4}));
  CHECK(b_sequence(16).b == zv({0, 1, 2, 4, 8}));
  CHECK(b_sequence(2).b == zv({0, 1}));
  CHECK_THROWS_AS(b_sequence(1), Error);
  CHECK_THROWS_AS(b_sequence(0), Error);

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    mpz_class n = rng.get_z_bits(1 + static_cast<unsigned long>(trial * 5)) + 2;
    BSequence seq = b_sequence(n);
    REQUIRE(seq.b.size() == seq.s + 1);
    CHECK(seq.b[0] == 0);
    CHECK(seq.b[1] == 1);
    for (unsigned long i = 2; i <= seq.s; ++i) {
      mpz_class lo = 2 * seq.b[i - 1];
      CHECK(seq.b[i] >= lo);
      CHECK(seq.b[i] <= lo + 1);
    }
    for (unsigned long i = 0; i <= seq.s; ++i) {
      mpz_class expect;
      mpz_fdiv_q_2exp(expect.get_mpz_t(), n.get_mpz_t(), seq.s - i + 1);
      CHECK(seq.b[i] == expect);
    }
    // 2^s <= n < 2^(s+1)
    mpz_class pow2 = 1;
    pow2 <<= seq.s;
    CHECK(n >= pow2);
    CHECK(n < 2 * pow2);
  }
}

TEST_CASE("certificate matrices interleave the w and u branches") {
  BrylawskiMatrix m = brylawski_matrix({mpz_class(5)});
  CHECK(m.n == 6);
  CHECK(m.s == 2);
  CHECK(m.labels == std::vector<std::string>{"v1", "v2", "v3", "v4", "v5",
                                             "v6", "w1", "u1", "w2", "u2"});
  CHECK(m.columns[0] == zv({1, 0, 0}));
  CHECK(m.columns[1] == zv({0, 1, 0}));
  CHECK(m.columns[2] == zv({0, 0, 1}));
  CHECK(m.columns[3] == zv({1, 1, 1}));
  CHECK(m.columns[4] == zv({1, 1, 0}));
  CHECK(m.columns[5] == zv({1, 0, 1}));
  CHECK(m.columns[6] == zv({1, 2, 1}));
  CHECK(m.columns[7] == zv({0, 1, 1}));
  CHECK(m.columns[8] == zv({1, 2, 3}));
  CHECK(m.columns[9] == zv({0, 1, 3}));

  BrylawskiMatrix m2 = brylawski_matrix({mpz_class(2)});
  CHECK(m2.labels.size() == 8);
  CHECK(m2.columns.size() == 8);

  CHECK_THROWS_AS(brylawski_matrix({mpz_class(4)}), Error);
  CHECK_THROWS_AS(brylawski_matrix({mpz_class(3), mpz_class(3)}), Error);
  CHECK_THROWS_AS(brylawski_matrix({}), Error);
}

TEST_CASE("pairwise residue verdicts match a brute-force oracle") {
  GBReport r5 = is_gordon_brylawski({mpz_class(5)});
  CHECK(r5.verdict);
  CHECK(r5.witness.empty());
  CHECK(r5.n == 6);
  CHECK(r5.s == 2);

  CHECK(is_gordon_brylawski({mpz_class(7)}).verdict);
  CHECK(is_gordon_brylawski({mpz_class(11)}).verdict);
  CHECK_FALSE(is_gordon_brylawski({mpz_class(3)}).verdict);
  CHECK_FALSE(is_gordon_brylawski({mpz_class(2), mpz_class(3)}).verdict);

  // s = 1 leaves only exempt pairs, so the test is vacuously satisfied.
  GBReport r2 = is_gordon_brylawski({mpz_class(2)});
  CHECK(r2.verdict);
  CHECK(r2.s == 1);

  GBReport r35 = is_gordon_brylawski({mpz_class(3), mpz_class(5)});
  CHECK_FALSE(r35.verdict);
  REQUIRE(r35.witness.size() == 1);
  CHECK(r35.witness[0].i == 0);
  CHECK(r35.witness[0].j == 2);
  CHECK(r35.witness[0].prime == 3);
  CHECK(r35.witness[0].residue == -1);

  std::vector<long> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(pool.begin(), pool.end(), rng);
    size_t k = 1 + rng() % 3;
    std::vector<mpz_class> set(pool.begin(), pool.begin() + k);
    std::sort(set.begin(), set.end());
    CHECK(is_gordon_brylawski(set).verdict == oracle_gb(set));
  }
}

TEST_CASE("the 80-prime window at 12811987 fails on a wide pair") {
  std::vector<mpz_class> window = consecutive_primes(mpz_class(12811987), 80);
  REQUIRE(window.size() == 80);
  CHECK(window.back() == 12813373);

  GBReport r = is_gordon_brylawski(window);
  CHECK(r.s == 1888);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0].i == 22);
  CHECK(r.witness[0].j == 852);
  CHECK(r.witness[0].prime == 12812123);
  CHECK(r.witness[0].residue == 1);

  // Recompute the witness difference from the floor formula directly.
  BSequence seq = b_sequence(r.n);
  mpz_class d = (seq.b[852] - seq.b[22]) % r.witness[0].prime;
  CHECK(d == 1);
}

TEST_CASE("subset scans enumerate candidates in lex order") {
  GBSearchResult r = gb_search_subsets(1, 8);
  CHECK(r.sets_checked == 4);
  CHECK(found_sets(r) == std::vector<std::vector<mpz_class>>{
                             {mpz_class(2)}, {mpz_class(5)}, {mpz_class(7)}});

  GBSearchResult r2 = gb_search_subsets(2, 21);
  CHECK(r2.sets_checked == 28);  // C(8,2) over {2,...,19}
  std::vector<std::vector<mpz_class>> expect;
  std::vector<long> ps{2, 3, 5, 7, 11, 13, 17, 19};
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j) {
      std::vector<mpz_class> set{mpz_class(ps[i]), mpz_class(ps[j])};
      if (oracle_gb(set)) expect.push_back(set);
    }
  CHECK(found_sets(r2) == expect);
  for (const auto& rep : r2.found) CHECK(rep.verdict);

  CHECK_THROWS_AS(gb_search_subsets(3, 100, 10), Error);
  CHECK_THROWS_AS(gb_search_subsets(0, 10), Error);
}

TEST_CASE("window scans are deterministic across thread counts") {
  GBSearchResult r = gb_search_windows(5, 1, 3);
  CHECK(r.sets_checked == 3);
  CHECK(found_sets(r) == std::vector<std::vector<mpz_class>>{
                             {mpz_class(5)}, {mpz_class(7)}, {mpz_class(11)}});

  GBSearchResult pairs = gb_search_windows(2, 2, 3);
  CHECK(pairs.sets_checked == 3);
  std::vector<std::vector<mpz_class>> expect;
  std::vector<mpz_class> primes = consecutive_primes(2, 4);
  for (size_t j = 0; j + 1 < primes.size(); ++j) {
    std::vector<mpz_class> set{primes[j], primes[j + 1]};
    if (oracle_gb(set)) expect.push_back(set);
  }
  CHECK(found_sets(pairs) == expect);

  GBSearchResult one = gb_search_windows(3, 2, 8, 1);
  GBSearchResult four = gb_search_windows(3, 2, 8, 4);
  CHECK(one.sets_checked == four.sets_checked);
  CHECK(found_sets(one) == found_sets(four));

  CHECK_THROWS_AS(gb_search_windows(2, 0, 3), Error);
}

TEST_CASE("rigidity batteries pass over every member prime") {
  RigidityReport r5 = verify_brylawski_rigidity({mpz_class(5)}, 5);
  CHECK(r5.all_pass);
  CHECK_FALSE(r5.parity_degenerate);
  CHECK(r5.n == 6);
  CHECK(r5.s == 2);
  REQUIRE(r5.checks.size() == 10);
  std::vector<std::string> names;
  for (const auto& c : r5.checks) {
    CHECK(c.pass);
    names.push_back(c.name);
  }
  CHECK(names == std::vector<std::string>{
                     "circuit {v1,v2,v5}", "circuit {v3,v4,v5}",
                     "circuit {v2,v6,w1}", "circuit {v5,u1,w1}",
                     "circuit {v2,v3,u1}", "circuit {v2,v3,u2}",
                     "circuit {v3,w1,w2}", "circuit {v5,w2,u2}",
                     "branch minors i=2", "closing minor [v1,w1,u_s]"});
  CHECK(r5.checks[8].detail == "det[v1,u1,w2]=1 det[v6,u1,w2]=0");
  CHECK(r5.checks[9].detail == "det=5 (n-1=5)");

  RigidityReport r7 = verify_brylawski_rigidity({mpz_class(7)}, 7);
  CHECK(r7.all_pass);
  CHECK(r7.checks.size() == 14);  // s = 3
  CHECK(r7.checks.back().detail == "det=7 (n-1=7)");

  for (long p : {5L, 7L}) {
    RigidityReport r = verify_brylawski_rigidity({mpz_class(5), mpz_class(7)},
                                                 p);
    CHECK(r.all_pass);
    CHECK(r.n == 36);
    CHECK(r.s == 5);
    CHECK(r.checks.size() == 22);
    CHECK(r.checks.back().detail == "det=35 (n-1=35)");
  }

  CHECK_THROWS_AS(verify_brylawski_rigidity({mpz_class(5)}, 3), Error);
}

TEST_CASE("the even member degrades exactly two checks") {
  RigidityReport r = verify_brylawski_rigidity({mpz_class(2)}, 2);
  CHECK(r.parity_degenerate);
  CHECK_FALSE(r.all_pass);
  REQUIRE(r.checks.size() == 6);
  std::vector<std::string> failing;
  for (const auto& c : r.checks)
    if (!c.pass) failing.push_back(c.name);
  CHECK(failing == std::vector<std::string>{"circuit {v2,v6,w1}",
                                            "closing minor [v1,w1,u_s]"});
  CHECK(r.checks.back().detail == "det=1 (n-1=2)");
}

TEST_CASE("certificate matrices have rank 3 over Q with v1..v4 a circuit") {
  for (auto primes :
       std::vector<std::vector<mpz_class>>{{mpz_class(5)},
                                           {mpz_class(3), mpz_class(5)},
                                           {mpz_class(2), mpz_class(3)}}) {
    BrylawskiMatrix m = brylawski_matrix(primes);
    QSubspace v = row_space_over_q(m);
    Matroid mat = matroid_from_subspace(v);
    CHECK(mat.rank() == 3);
    CHECK(is_circuit(v, {"v1", "v2", "v3", "v4"}));

    mpz_class d = det_int(closing_minor(m));
    CHECK(d == 2 * m.columns.back()[2] - 1);
    if (m.n % 2 == 0) {
      CHECK(d == m.n - 1);
    } else {
      CHECK(d == m.n - 2);
    }
  }
}
