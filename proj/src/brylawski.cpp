#include "brylawski.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "gf.hpp"
#include "linalg.hpp"
#include "matroid.hpp"
#include "primes.hpp"

namespace mcs {

BSequence b_sequence(const mpz_class& n) {
  if (n < 2) fail("bad_input", "b-sequence needs n >= 2");
  unsigned long s = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
  BSequence seq{n, s, {}};
  for (unsigned long i = 0; i <= s; ++i) {
    mpz_class b;
    mpz_fdiv_q_2exp(b.get_mpz_t(), n.get_mpz_t(), s - i + 1);
    seq.b.push_back(std::move(b));
  }
  return seq;
}

namespace {

std::vector<mpz_class> checked_distinct_primes(
    const std::vector<mpz_class>& primes) {
  if (primes.empty()) fail("bad_input", "empty prime set");
  std::set<mpz_class> seen;
  for (const auto& p : primes) {
    if (!is_prime(p)) fail("not_prime", p.get_str() + " is not prime");
    if (!seen.insert(p).second)
      fail("bad_input", "repeated prime " + p.get_str());
  }
  return std::vector<mpz_class>(seen.begin(), seen.end());
}

mpz_class product_plus_one(const std::vector<mpz_class>& primes) {
  mpz_class n = 1;
  for (const auto& p : primes) n *= p;
  return n + 1;
}

}  // namespace

BrylawskiMatrix brylawski_matrix(const std::vector<mpz_class>& primes) {
  auto ps = checked_distinct_primes(primes);
  BSequence seq = b_sequence(product_plus_one(ps));
  BrylawskiMatrix m{seq.n, seq.s, {}, {}};
  auto col = [&](const char* label, long a, long b, mpz_class c) {
    m.labels.push_back(label);
    m.columns.push_back({mpz_class(a), mpz_class(b), std::move(c)});
  };
  col("v1", 1, 0, 0);
  col("v2", 0, 1, 0);
  col("v3", 0, 0, 1);
  col("v4", 1, 1, 1);
  col("v5", 1, 1, 0);
  col("v6", 1, 0, 1);
  for (unsigned long i = 1; i <= seq.s; ++i) {
    std::string w = "w" + std::to_string(i);
    std::string u = "u" + std::to_string(i);
    m.labels.push_back(w);
    m.columns.push_back({mpz_class(1), mpz_class(2), seq.b[i]});
    m.labels.push_back(u);
    m.columns.push_back({mpz_class(0), mpz_class(1), seq.b[i]});
  }
  return m;
}

namespace {

bool exempt_pair(unsigned long i, unsigned long j) {
  return (i == 0 && j == 1) || (i == 1 && j == 2);
}

}  // namespace

GBReport is_gordon_brylawski(const std::vector<mpz_class>& primes) {
  auto ps = checked_distinct_primes(primes);
  BSequence seq = b_sequence(product_plus_one(ps));
  GBReport rep{ps, seq.n, seq.s, true, {}};
  for (const auto& p : ps) {
    if (mpz_fits_ulong_p(p.get_mpz_t()) && p.get_ui() < (1ul << 62)) {
      unsigned long pw = p.get_ui();
      std::vector<unsigned long> r(seq.s + 1);
      for (unsigned long i = 0; i <= seq.s; ++i)
        r[i] = mpz_fdiv_ui(seq.b[i].get_mpz_t(), pw);
      for (unsigned long i = 0; i < seq.s; ++i) {
        for (unsigned long j = i + 1; j <= seq.s; ++j) {
          if (exempt_pair(i, j)) continue;
          unsigned long d = r[j] >= r[i] ? r[j] - r[i] : r[j] + pw - r[i];
          if (d == 0 || d == 1 || d == pw - 1) {
            int cls = d == 0 ? 0 : (d == 1 ? 1 : -1);
            rep.verdict = false;
            rep.witness.push_back({i, j, p, cls});
            return rep;
          }
        }
      }
    } else {
      std::vector<mpz_class> r(seq.s + 1);
      for (unsigned long i = 0; i <= seq.s; ++i) r[i] = seq.b[i] % p;
      for (unsigned long i = 0; i < seq.s; ++i) {
        for (unsigned long j = i + 1; j <= seq.s; ++j) {
          if (exempt_pair(i, j)) continue;
          mpz_class d = (r[j] - r[i]) % p;
          if (d < 0) d += p;
          if (d == 0 || d == 1 || d == p - 1) {
            int cls = d == 0 ? 0 : (d == 1 ? 1 : -1);
            rep.verdict = false;
            rep.witness.push_back({i, j, p, cls});
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

GBSearchResult gb_search_subsets(unsigned long k, unsigned long below,
                                 unsigned long limit) {
  if (k == 0) fail("bad_input", "subset size must be positive");
  auto small = sieve_primes(below);
  if (detail::binom_capped(small.size(), k, limit) > limit)
    fail("enumeration_too_large", "too many candidate subsets");
  GBSearchResult res;
  detail::for_each_combination(small.size(), k,
                               [&](const std::vector<size_t>& comb) {
    std::vector<mpz_class> set;
    for (auto ix : comb) set.emplace_back(small[ix]);
    ++res.sets_checked;
    GBReport rep = is_gordon_brylawski(set);
    if (rep.verdict) res.found.push_back(std::move(rep));
  });
  return res;
}

GBSearchResult gb_search_windows(const mpz_class& start, unsigned long k,
                                 unsigned long windows, unsigned threads) {
  if (k == 0 || windows == 0) fail("bad_input", "window spec must be positive");
  if (k + windows - 1 > 1000000) fail("bad_input", "window span too large");
  auto primes = consecutive_primes(start, k + windows - 1);
  std::vector<GBReport> slots(windows, GBReport{});
  std::vector<char> ok(windows, 0);
  auto run = [&](unsigned long w0, unsigned long step) {
    for (unsigned long w = w0; w < windows; w += step) {
      std::vector<mpz_class> set(primes.begin() + w, primes.begin() + w + k);
      GBReport rep = is_gordon_brylawski(set);
      if (rep.verdict) {
        slots[w] = std::move(rep);
        ok[w] = 1;
      }
    }
  };
  if (threads <= 1 || windows == 1) {
    run(0, 1);
  } else {
    unsigned nt = std::min<unsigned long>(threads, windows);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(run, t, nt);
    for (auto& th : pool) th.join();
  }
  GBSearchResult res;
  res.sets_checked = windows;
  for (unsigned long w = 0; w < windows; ++w)
    if (ok[w]) res.found.push_back(std::move(slots[w]));
  return res;
}

RigidityReport verify_brylawski_rigidity(const std::vector<mpz_class>& primes,
                                         const mpz_class& p) {
  auto ps = checked_distinct_primes(primes);
  if (std::find(ps.begin(), ps.end(), p) == ps.end())
    fail("bad_input", p.get_str() + " is not a member of the set");
  BrylawskiMatrix bm = brylawski_matrix(ps);
  BSequence seq = b_sequence(bm.n);
  FieldPtr f = Field::make(p, 1);
  GFDom dom{f};
  Mat<GFDom> rows(3, std::vector<FieldElement>(bm.labels.size(),
                                               FieldElement::zero(f)));
  for (size_t c = 0; c < bm.columns.size(); ++c)
    for (size_t r = 0; r < 3; ++r)
      rows[r][c] = FieldElement::from_integer(f, bm.columns[c][r]);
  Subspace V{bm.labels, dom, rows};

  RigidityReport rep;
  rep.primes = ps;
  rep.p = p;
  rep.n = bm.n;
  rep.s = bm.s;
  rep.parity_degenerate =
      std::find(ps.begin(), ps.end(), 2) != ps.end();

  auto circuit_check = [&](const std::vector<std::string>& C) {
    bool pass = is_circuit(V, C);
    std::string name = "circuit {";
    for (size_t i = 0; i < C.size(); ++i) name += (i ? "," : "") + C[i];
    name += "}";
    rep.checks.push_back(
        {name, pass, pass ? "" : "not a circuit of the column matroid"});
  };
  auto det3_int = [&](const std::string& a, const std::string& b,
                      const std::string& c) {
    auto pos = [&](const std::string& l) {
      return std::find(bm.labels.begin(), bm.labels.end(), l) -
             bm.labels.begin();
    };
    std::vector<std::vector<mpz_class>> m(3, std::vector<mpz_class>(3));
    size_t cols[3] = {size_t(pos(a)), size_t(pos(b)), size_t(pos(c))};
    for (int r = 0; r < 3; ++r)
      for (int cc = 0; cc < 3; ++cc) m[r][cc] = bm.columns[cols[cc]][r];
    return det_int(m);
  };

  circuit_check({"v1", "v2", "v5"});
  circuit_check({"v3", "v4", "v5"});
  circuit_check({"v2", "v6", "w1"});
  circuit_check({"v5", "u1", "w1"});
  for (unsigned long i = 1; i <= bm.s; ++i)
    circuit_check({"v2", "v3", "u" + std::to_string(i)});
  for (unsigned long i = 2; i <= bm.s; ++i) {
    circuit_check({"v3", "w1", "w" + std::to_string(i)});
    circuit_check({"v5", "w" + std::to_string(i), "u" + std::to_string(i)});
  }
  for (unsigned long i = 2; i <= bm.s; ++i) {
    std::string wi = "w" + std::to_string(i);
    std::string ui1 = "u" + std::to_string(i - 1);
    mpz_class d1 = det3_int("v1", ui1, wi);
    mpz_class d2 = det3_int("v6", ui1, wi);
    mpz_class expect1 = seq.b[i] - 2 * seq.b[i - 1];
    bool doubling = seq.b[i] == 2 * seq.b[i - 1];
    bool pass = d1 == expect1 && d2 == expect1 - 1 &&
                (doubling ? (d1 == 0 && d2 == -1) : (d1 == 1 && d2 == 0));
    // The nonvanishing branch value is +-1, hence nonzero mod every p.
    rep.checks.push_back({"branch minors i=" + std::to_string(i), pass,
                          "det[v1," + ui1 + "," + wi + "]=" + d1.get_str() +
                              " det[v6," + ui1 + "," + wi + "]=" +
                              d2.get_str()});
  }
  {
    mpz_class d = det3_int("v1", "w1", "u" + std::to_string(bm.s));
    mpz_class expect = 2 * seq.b[bm.s] - 1;
    bool pass = d == expect && mpz_class(d % p) == 0;
    std::string detail = "det=" + d.get_str() + " (n-1=" +
                         mpz_class(bm.n - 1).get_str() + ")";
    rep.checks.push_back({"closing minor [v1,w1,u_s]", pass, detail});
  }
  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace mcs
