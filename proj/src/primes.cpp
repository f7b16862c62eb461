#include "primes.hpp"

#include <cmath>
#include <cstdint>

#include "error.hpp"
#include "gf.hpp"

namespace mcs {

std::vector<unsigned long> sieve_primes(unsigned long below) {
  if (below > (1ul << 31)) fail("bad_input", "sieve bound exceeds 2^31");
  std::vector<unsigned long> out;
  if (below <= 2) return out;
  std::vector<bool> composite(below, false);
  for (unsigned long i = 2; i * i < below; ++i) {
    if (composite[i]) continue;
    for (unsigned long j = i * i; j < below; j += i) composite[j] = true;
  }
  for (unsigned long i = 2; i < below; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

namespace {

constexpr unsigned long kSegment = 1ul << 18;

void sieve_segment(unsigned long lo, unsigned long hi,
                   const std::vector<unsigned long>& base,
                   std::vector<bool>& composite) {
  composite.assign(hi - lo, false);
  for (unsigned long p : base) {
    if (p * p >= hi) break;
    unsigned long first = ((lo + p - 1) / p) * p;
    if (first < p * p) first = p * p;
    for (unsigned long j = first; j < hi; j += p) composite[j - lo] = true;
  }
}

}  // namespace

std::vector<mpz_class> consecutive_primes(const mpz_class& start,
                                          unsigned long count) {
  if (count > 1000000) fail("bad_input", "prime count exceeds 10^6");
  std::vector<mpz_class> out;
  if (count == 0) return out;
  mpz_class cur = start < 2 ? mpz_class(2) : start;
  // Word-sized range: segmented sieve, each hit reconfirmed.
  while (out.size() < count && mpz_fits_ulong_p(cur.get_mpz_t()) &&
         cur.get_ui() < (1ul << 62) - 2 * kSegment) {
    unsigned long lo = cur.get_ui();
    unsigned long hi = lo + kSegment;
    unsigned long root = static_cast<unsigned long>(std::sqrt((double)hi)) + 2;
    auto base = sieve_primes(root);
    std::vector<bool> composite;
    sieve_segment(lo, hi, base, composite);
    for (unsigned long v = lo; v < hi && out.size() < count; ++v) {
      if (v < 2 || composite[v - lo]) continue;
      if (!is_prime(mpz_class(v))) continue;
      out.push_back(mpz_class(v));
    }
    cur = hi;
  }
  // Arbitrary-precision tail.
  if (cur > 2 && cur % 2 == 0) ++cur;
  while (out.size() < count) {
    if (is_prime(cur)) out.push_back(cur);
    if (cur == 2)
      cur = 3;
    else
      cur += 2;
  }
  return out;
}

}  // namespace mcs
