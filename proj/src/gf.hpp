#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace mcs {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) presented as GF(p)[t]/(f) with f monic irreducible of degree m.
// Field::make picks the lexicographically smallest such f (coefficients
// compared low-degree first as integers in [0,p)), so a (p, m) pair names
// exactly one descriptor and equality of descriptors is structural.
class Field {
 public:
  static FieldPtr make(const mpz_class& p, unsigned m);
  // Accepts a caller-supplied monic irreducible modulus (little-endian,
  // length m+1). Rejects non-monic, wrong-degree, or reducible input.
  static FieldPtr with_modulus(const mpz_class& p, unsigned m,
                               std::vector<mpz_class> modulus);

  const mpz_class& characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  mpz_class order() const;  // p^m

  bool same(const Field& o) const;

 private:
  Field(mpz_class p, unsigned m, std::vector<mpz_class> modulus);
  mpz_class p_;
  unsigned m_;
  std::vector<mpz_class> modulus_;  // little-endian, monic, length m_+1
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Element of GF(p^m): coefficient vector of length m, little-endian,
// every entry reduced into [0, p). Binary operations require operands of
// the same field and throw Error("field_mismatch") otherwise.
class FieldElement {
 public:
  FieldElement() = default;  // invalid placeholder; usable only as a target
  FieldElement(FieldPtr f, std::vector<mpz_class> coeffs);

  static FieldElement zero(const FieldPtr& f);
  static FieldElement one(const FieldPtr& f);
  // Embeds the integer v as v mod p (a prime-subfield constant).
  static FieldElement from_integer(const FieldPtr& f, const mpz_class& v);
  // The residue class of t (requires m >= 2).
  static FieldElement generator(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;                 // Error("division_by_zero") on 0
  FieldElement pow(const mpz_class& e) const;   // negative e inverts first
  FieldElement scalar_mul(const mpz_class& k) const;

  // Total order: coefficient sequences compared low-degree first.
  // Used wherever a deterministic "smallest element" is required.
  bool lex_less(const FieldElement& o) const;

  // Multiplicative order; Error("division_by_zero") for 0.
  mpz_class mult_order() const;

  std::string to_string() const;  // polynomial in t, e.g. "t^2+2t+1"

 private:
  FieldPtr field_;
  std::vector<mpz_class> c_;
};

// x^(p^e) with e reduced mod m, so negative exponents give the inverse
// automorphism. frobenius(x, 1) is the p-power map.
FieldElement frobenius(const FieldElement& x, long e);

// Lexicographically smallest element of multiplicative order exactly n.
// Errors: "not_coprime" if p | n, "no_such_root" if n does not divide p^m-1.
FieldElement primitive_root_of_unity(const FieldPtr& f, const mpz_class& n);

// Iterates all field elements in lex order: visit(elem) until it returns
// false. Deterministic; used by solution search and witness selection.
void for_each_element(const FieldPtr& f,
                      const std::function<bool(const FieldElement&)>& visit);

// Primality check used across modules: deterministic Miller-Rabin below
// 2^64, mpz_probab_prime_p above.
bool is_prime(const mpz_class& n);

// Factors n by trial division (intended for small n, e.g. subgroup orders).
std::vector<std::pair<mpz_class, unsigned>> factor_small(const mpz_class& n);

}  // namespace mcs
