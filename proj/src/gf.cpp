#include "gf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "error.hpp"

namespace mcs {
namespace {

using Poly = std::vector<mpz_class>;  // little-endian over GF(p)

mpz_class pmod(const mpz_class& x, const mpz_class& p) {
  mpz_class r = x % p;
  if (r < 0) r += p;
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = pmod(c, p);
  trim(r);
  return r;
}

// Remainder of a by monic f.
Poly poly_rem_monic(Poly a, const Poly& f, const mpz_class& p) {
  trim(a);
  int df = pdeg(f);
  while (pdeg(a) >= df) {
    mpz_class lead = a.back();
    int shift = pdeg(a) - df;
    for (int i = 0; i <= df; ++i)
      a[i + shift] = pmod(a[i + shift] - lead * f[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const mpz_class& p) {
  return poly_rem_monic(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, const mpz_class& e, const Poly& f, const mpz_class& p) {
  Poly r = {mpz_class(1)};
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = poly_mulmod(r, r, f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mulmod(r, base, f, p);
  }
  return r;
}

// Euclidean remainder for possibly non-monic divisor.
Poly poly_rem(Poly a, const Poly& b, const mpz_class& p) {
  trim(a);
  int db = pdeg(b);
  mpz_class inv_lead;
  if (mpz_invert(inv_lead.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t()) == 0)
    fail("internal", "leading coefficient not invertible");
  while (pdeg(a) >= db && !a.empty()) {
    mpz_class q = pmod(a.back() * inv_lead, p);
    int shift = pdeg(a) - db;
    for (int i = 0; i <= db; ++i) a[i + shift] = pmod(a[i + shift] - q * b[i], p);
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, const mpz_class& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpz_class inv_lead;
    mpz_invert(inv_lead.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
    for (auto& c : a) c = pmod(c * inv_lead, p);
  }
  return a;
}

// x^(p^k) mod f, by k successive p-th powers of x.
Poly poly_frob_iterate(const Poly& f, const mpz_class& p, unsigned k) {
  Poly x = {mpz_class(0), mpz_class(1)};
  Poly y = poly_rem_monic(x, f, p);
  for (unsigned i = 0; i < k; ++i) y = poly_powmod(y, p, f, p);
  return y;
}

// Rabin's test. f monic of degree m >= 1 over GF(p).
bool poly_irreducible(const Poly& f, const mpz_class& p) {
  int m = pdeg(f);
  if (m < 1) return false;
  if (m == 1) return true;
  std::vector<unsigned> prime_divs;
  {
    int n = m;
    for (int q = 2; q * q <= n; ++q)
      if (n % q == 0) {
        prime_divs.push_back(q);
        while (n % q == 0) n /= q;
      }
    if (n > 1) prime_divs.push_back(n);
  }
  Poly x = {mpz_class(0), mpz_class(1)};
  for (unsigned q : prime_divs) {
    Poly h = poly_frob_iterate(f, p, m / q);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, mpz_class(0));
    hx[1] = pmod(hx[1] - 1, p);
    trim(hx);
    Poly g = poly_gcd(hx, f, p);
    if (pdeg(g) != 0) return false;
  }
  Poly h = poly_frob_iterate(f, p, m);
  Poly hx = h;
  if (hx.size() < 2) hx.resize(2, mpz_class(0));
  hx[1] = pmod(hx[1] - 1, p);
  trim(hx);
  return hx.empty();
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with this base set.
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8)
    return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<mpz_class, unsigned>> factor_small(const mpz_class& n) {
  if (n < 1) fail("bad_input", "factor_small expects n >= 1");
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class rest = n;
  auto strip = [&](const mpz_class& q) {
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  };
  strip(2);
  mpz_class q = 3;
  const mpz_class bound = 10000000;
  while (q * q <= rest && q <= bound) {
    strip(q);
    q += 2;
  }
  if (rest > 1) {
    if (is_prime(rest))
      out.emplace_back(rest, 1);
    else
      fail("factor_too_large", "no small factorization of " + rest.get_str());
  }
  return out;
}

Field::Field(mpz_class p, unsigned m, std::vector<mpz_class> modulus)
    : p_(std::move(p)), m_(m), modulus_(std::move(modulus)) {}

FieldPtr Field::make(const mpz_class& p, unsigned m) {
  if (!is_prime(p)) fail("not_prime", "field characteristic must be prime: " + p.get_str());
  if (m < 1) fail("bad_input", "extension degree must be >= 1");
  if (m == 1) {
    std::vector<mpz_class> mod = {mpz_class(0), mpz_class(1)};
    return FieldPtr(new Field(p, m, std::move(mod)));
  }
  // Lex scan over coefficient tuples (c_0..c_{m-1}), last index fastest.
  std::vector<mpz_class> c(m, mpz_class(0));
  for (;;) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (poly_irreducible(f, p)) {
      return FieldPtr(new Field(p, m, std::move(f)));
    }
    int i = static_cast<int>(m) - 1;
    while (i >= 0) {
      c[i] += 1;
      if (c[i] < p) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) fail("internal", "no irreducible polynomial found");
  }
}

FieldPtr Field::with_modulus(const mpz_class& p, unsigned m,
                             std::vector<mpz_class> modulus) {
  if (!is_prime(p)) fail("not_prime", "field characteristic must be prime: " + p.get_str());
  if (m < 1) fail("bad_input", "extension degree must be >= 1");
  if (modulus.size() != m + 1) fail("bad_input", "modulus must have degree m");
  for (auto& cc : modulus) cc = pmod(cc, p);
  if (modulus.back() != 1) fail("bad_input", "modulus must be monic");
  if (m >= 2 && !poly_irreducible(modulus, p))
    fail("bad_input", "modulus is reducible");
  return FieldPtr(new Field(p, m, std::move(modulus)));
}

mpz_class Field::order() const {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p_.get_mpz_t(), m_);
  return q;
}

bool Field::same(const Field& o) const {
  return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

FieldElement::FieldElement(FieldPtr f, std::vector<mpz_class> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_) fail("bad_input", "element needs a field");
  c_.resize(field_->degree(), mpz_class(0));
  for (auto& x : c_) x = pmod(x, field_->characteristic());
}

FieldElement FieldElement::zero(const FieldPtr& f) {
  return FieldElement(f, std::vector<mpz_class>(f->degree(), mpz_class(0)));
}

FieldElement FieldElement::one(const FieldPtr& f) {
  std::vector<mpz_class> c(f->degree(), mpz_class(0));
  c[0] = 1;
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_integer(const FieldPtr& f, const mpz_class& v) {
  std::vector<mpz_class> c(f->degree(), mpz_class(0));
  c[0] = v;
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::generator(const FieldPtr& f) {
  if (f->degree() < 2) fail("bad_input", "prime field has no generator element t");
  std::vector<mpz_class> c(f->degree(), mpz_class(0));
  c[1] = 1;
  return FieldElement(f, std::move(c));
}

bool FieldElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid()) fail("bad_input", "invalid field element");
  if (!same_field(a.field(), b.field()))
    fail("field_mismatch", "operands live in different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(*this, o);
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = pmod(c_[i] + o.c_[i], field_->characteristic());
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(*this, o);
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = pmod(c_[i] - o.c_[i], field_->characteristic());
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = pmod(-c_[i], field_->characteristic());
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*this, o);
  Poly prod = poly_mul(c_, o.c_, field_->characteristic());
  prod = poly_rem_monic(prod, field_->modulus(), field_->characteristic());
  prod.resize(field_->degree(), mpz_class(0));
  return FieldElement(field_, std::move(prod));
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same(*this, o);
  return c_ == o.c_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail("division_by_zero", "inverse of zero");
  const mpz_class& p = field_->characteristic();
  // Extended Euclid over GF(p)[t] against the modulus.
  Poly r0 = field_->modulus(), r1 = c_;
  trim(r1);
  Poly s0 = {}, s1 = {mpz_class(1)};
  while (!r1.empty()) {
    // Divide r0 by r1.
    Poly q;
    Poly rem = r0;
    trim(rem);
    int d1 = pdeg(r1);
    mpz_class inv_lead;
    mpz_invert(inv_lead.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
    q.assign(std::max<int>(pdeg(rem) - d1 + 1, 0), mpz_class(0));
    while (pdeg(rem) >= d1 && !rem.empty()) {
      mpz_class coef = pmod(rem.back() * inv_lead, p);
      int shift = pdeg(rem) - d1;
      q[shift] = coef;
      for (int i = 0; i <= d1; ++i)
        rem[i + shift] = pmod(rem[i + shift] - coef * r1[i], p);
      trim(rem);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    Poly qs = poly_mul(q, s1, p);
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), mpz_class(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = pmod(s2[i] - qs[i], p);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (constant, nonzero since modulus is irreducible and c_ != 0).
  if (pdeg(r0) != 0) fail("internal", "gcd with modulus not constant");
  mpz_class inv_g;
  mpz_invert(inv_g.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
  for (auto& x : s0) x = pmod(x * inv_g, p);
  s0.resize(field_->degree(), mpz_class(0));
  return FieldElement(field_, std::move(s0));
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = FieldElement::one(field_);
  if (e == 0) return r;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * (*this);
  }
  return r;
}

FieldElement FieldElement::scalar_mul(const mpz_class& k) const {
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = pmod(c_[i] * k, field_->characteristic());
  return FieldElement(field_, std::move(r));
}

bool FieldElement::lex_less(const FieldElement& o) const {
  require_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

mpz_class FieldElement::mult_order() const {
  if (is_zero()) fail("division_by_zero", "zero has no multiplicative order");
  mpz_class n = field_->order() - 1;
  for (const auto& [q, e] : factor_small(n)) {
    for (unsigned i = 0; i < e; ++i) {
      mpz_class cand = n / q;
      if (pow(cand).is_one())
        n = cand;
      else
        break;
    }
  }
  return n;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    if (i == 0 || c_[i] != 1) os << c_[i].get_str();
    if (i >= 1) {
      os << "t";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement frobenius(const FieldElement& x, long e) {
  if (!x.valid()) fail("bad_input", "invalid field element");
  long m = static_cast<long>(x.field()->degree());
  long k = ((e % m) + m) % m;
  FieldElement r = x;
  const mpz_class& p = x.field()->characteristic();
  for (long i = 0; i < k; ++i) r = r.pow(p);
  return r;
}

FieldElement primitive_root_of_unity(const FieldPtr& f, const mpz_class& n) {
  if (n < 1) fail("bad_input", "order must be >= 1");
  if (n % f->characteristic() == 0)
    fail("not_coprime", "order shares a factor with the characteristic");
  mpz_class q1 = f->order() - 1;
  if (q1 % n != 0)
    fail("no_such_root", "no element of order " + n.get_str() + " in this field");
  if (n == 1) return FieldElement::one(f);
  if (!mpz_fits_ulong_p(n.get_mpz_t()))
    fail("bad_input", "order too large to enumerate");
  unsigned long nn = n.get_ui();
  mpz_class cof = q1 / n;
  auto prime_divs = factor_small(n);
  FieldElement found;
  for_each_element(f, [&](const FieldElement& h) {
    if (h.is_zero()) return true;
    FieldElement z = h.pow(cof);
    if (z.is_one()) return true;
    for (const auto& [qp, e] : prime_divs) {
      (void)e;
      if (z.pow(n / qp).is_one()) return true;
    }
    found = z;
    return false;
  });
  if (!found.valid()) fail("internal", "no generator found for cyclic subgroup");
  // All elements of order n are found^j with gcd(j, n) = 1; pick the lex-min
  // so the result does not depend on which generator the scan hit first.
  FieldElement best = found;
  FieldElement zj = found;
  for (unsigned long j = 2; j < nn; ++j) {
    zj = zj * found;
    mpz_class g;
    mpz_class jz(static_cast<unsigned long>(j));
    mpz_gcd(g.get_mpz_t(), jz.get_mpz_t(), n.get_mpz_t());
    if (g == 1 && zj.lex_less(best)) best = zj;
  }
  return best;
}

void for_each_element(const FieldPtr& f,
                      const std::function<bool(const FieldElement&)>& visit) {
  unsigned m = f->degree();
  const mpz_class& p = f->characteristic();
  std::vector<mpz_class> c(m, mpz_class(0));
  for (;;) {
    if (!visit(FieldElement(f, c))) return;
    int i = static_cast<int>(m) - 1;
    while (i >= 0) {
      c[i] += 1;
      if (c[i] < p) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace mcs
